#include "grstage/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grstage {

Permutation Permutation::transposition(SignedIndex a, SignedIndex b) {
  if (a == 0 || b == 0) throw std::invalid_argument("labels must be nonzero");
  if (a == b) return identity();
  Permutation p;
  p.map_[a] = b;
  p.map_[b] = a;
  return p;
}

Permutation Permutation::from_mapping(
    std::map<SignedIndex, SignedIndex> mapping) {
  std::set<SignedIndex> keys, values;
  for (const auto& [k, v] : mapping) {
    if (k == 0 || v == 0) throw std::invalid_argument("labels must be nonzero");
    keys.insert(k);
    if (!values.insert(v).second) {
      throw std::invalid_argument("mapping is not injective");
    }
  }
  if (keys != values) {
    throw std::invalid_argument("mapping must permute its own support");
  }
  Permutation p;
  for (const auto& [k, v] : mapping) {
    if (k != v) p.map_[k] = v;
  }
  return p;
}

SignedIndex Permutation::operator()(SignedIndex i) const {
  const auto it = map_.find(i);
  return it == map_.end() ? i : it->second;
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (const auto& [k, v] : map_) p.map_[v] = k;
  return p;
}

Permutation Permutation::after(const Permutation& inner) const {
  std::map<SignedIndex, SignedIndex> composed;
  for (const auto& [k, _] : inner.map_) composed[k] = (*this)(inner(k));
  for (const auto& [k, _] : map_) {
    if (!composed.count(k)) composed[k] = (*this)(inner(k));
  }
  Permutation p;
  for (const auto& [k, v] : composed) {
    if (k != v) p.map_[k] = v;
  }
  return p;
}

bool Permutation::preserves(const Stage& stage) const {
  for (const SignedIndex s : stage.symbols()) {
    if (!stage.contains((*this)(s))) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  if (map_.empty()) return "id";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : map_) {
    if (!first) out << ',';
    first = false;
    out << k << "->" << v;
  }
  return out.str();
}

std::pair<WedgeIndex, int> act_on_wedge(const Permutation& sigma,
                                        const WedgeIndex& key) {
  std::vector<SignedIndex> raw;
  raw.reserve(key.labels().size());
  for (const SignedIndex i : key.labels()) raw.push_back(sigma(i));
  const auto canonical = WedgeIndex::canonicalize(raw);
  if (!canonical) throw std::logic_error("permutation image repeated a label");
  return {canonical->index, canonical->sign};
}

std::pair<Monomial, int> act_on_monomial(const Permutation& sigma,
                                         const Monomial& m) {
  if (!sigma.preserves(m.stage())) {
    throw std::invalid_argument("permutation leaves the stage symbol set");
  }
  int sign = 1;
  std::vector<WedgeIndex> factors;
  factors.reserve(m.factors().size());
  for (const WedgeIndex& f : m.factors()) {
    auto [image, s] = act_on_wedge(sigma, f);
    factors.push_back(std::move(image));
    sign *= s;
  }
  return {Monomial(m.stage(), std::move(factors)), sign};
}

ExteriorElement act_on_element(const Permutation& sigma,
                               const ExteriorElement& omega) {
  if (!sigma.preserves(omega.stage())) {
    throw std::invalid_argument("permutation leaves the stage symbol set");
  }
  const Field& field = omega.field();
  ExteriorElement out(omega.stage(), omega.degree(), omega.side(), field);
  for (const auto& [key, value] : omega.coeffs()) {
    auto [image, sign] = act_on_wedge(sigma, key);
    out.accumulate(image, sign < 0 ? field.neg(value) : value);
  }
  return out;
}

namespace {

using LabelSet = std::vector<SignedIndex>;  // numerically sorted

LabelSet as_sorted_set(const WedgeIndex& key) {
  LabelSet s(key.labels().begin(), key.labels().end());
  std::sort(s.begin(), s.end());
  return s;
}

bool set_contains(const LabelSet& s, SignedIndex i) {
  return std::binary_search(s.begin(), s.end(), i);
}

// Finds an injective symbol map sending source_sets[k] into target_sets[k]
// for every k. Symbols are processed most-constrained first.
std::optional<std::map<SignedIndex, SignedIndex>> match_symbols(
    const std::vector<LabelSet>& source_sets,
    const std::vector<LabelSet>& target_sets) {
  std::map<SignedIndex, std::vector<int>> membership;
  for (std::size_t k = 0; k < source_sets.size(); ++k) {
    for (const SignedIndex s : source_sets[k]) {
      membership[s].push_back(static_cast<int>(k));
    }
  }
  std::vector<SignedIndex> order;
  order.reserve(membership.size());
  for (const auto& [s, _] : membership) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [&](SignedIndex a, SignedIndex b) {
                     return membership[a].size() > membership[b].size();
                   });

  std::map<SignedIndex, SignedIndex> assignment;
  std::set<SignedIndex> used;

  const auto allowed_targets = [&](SignedIndex s) {
    LabelSet allowed = target_sets[static_cast<std::size_t>(membership[s][0])];
    for (std::size_t j = 1; j < membership[s].size(); ++j) {
      const LabelSet& t = target_sets[static_cast<std::size_t>(membership[s][j])];
      LabelSet narrowed;
      std::set_intersection(allowed.begin(), allowed.end(), t.begin(), t.end(),
                            std::back_inserter(narrowed));
      allowed = std::move(narrowed);
    }
    return allowed;
  };

  const std::function<bool(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == order.size()) return true;
    const SignedIndex s = order[idx];
    for (const SignedIndex t : allowed_targets(s)) {
      if (used.count(t)) continue;
      assignment[s] = t;
      used.insert(t);
      if (extend(idx + 1)) return true;
      assignment.erase(s);
      used.erase(t);
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return assignment;
}

// Extends a partial injective stage-symbol map to a full stage permutation.
Permutation complete_to_stage_permutation(
    const std::map<SignedIndex, SignedIndex>& partial, const Stage& stage) {
  std::set<SignedIndex> sources, images;
  for (const auto& [s, t] : partial) {
    sources.insert(s);
    images.insert(t);
  }
  std::vector<SignedIndex> free_sources, free_images;
  for (const SignedIndex s : stage.symbols()) {
    if (!sources.count(s)) free_sources.push_back(s);
    if (!images.count(s)) free_images.push_back(s);
  }
  std::sort(free_sources.begin(), free_sources.end());
  std::sort(free_images.begin(), free_images.end());
  std::map<SignedIndex, SignedIndex> full = partial;
  for (std::size_t k = 0; k < free_sources.size(); ++k) {
    full[free_sources[k]] = free_images[k];
  }
  return Permutation::from_mapping(std::move(full));
}

}  // namespace

std::optional<DivisionWitness> divides_mod_group(const Monomial& x,
                                                 const Monomial& y) {
  if (x.stage() != y.stage()) {
    throw std::invalid_argument("divisibility requires one stage");
  }
  const Stage stage = x.stage();
  if (x.is_unit()) {
    return DivisionWitness{Permutation::identity(), y};
  }
  if (x.degree() > y.degree()) return std::nullopt;
  if (x.factor_degree() != y.factor_degree()) return std::nullopt;

  const std::vector<WedgeIndex>& xs = x.factors();
  const std::vector<WedgeIndex>& ys = y.factors();
  std::vector<LabelSet> source_sets;
  source_sets.reserve(xs.size());
  for (const WedgeIndex& f : xs) source_sets.push_back(as_sorted_set(f));

  std::vector<int> assigned(xs.size(), -1);
  std::vector<bool> used(ys.size(), false);
  std::optional<DivisionWitness> witness;

  const std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == xs.size()) {
      std::vector<LabelSet> target_sets;
      target_sets.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        target_sets.push_back(
            as_sorted_set(ys[static_cast<std::size_t>(assigned[i])]));
      }
      const auto matched = match_symbols(source_sets, target_sets);
      if (!matched) return false;
      std::vector<WedgeIndex> rest;
      for (std::size_t t = 0; t < ys.size(); ++t) {
        if (!used[t]) rest.push_back(ys[t]);
      }
      witness = DivisionWitness{complete_to_stage_permutation(*matched, stage),
                                Monomial(stage, std::move(rest))};
      return true;
    }
    for (std::size_t t = 0; t < ys.size(); ++t) {
      if (used[t]) continue;
      // Identical slots are interchangeable; try the first unused one only.
      if (t > 0 && ys[t] == ys[t - 1] && !used[t - 1]) continue;
      assigned[k] = static_cast<int>(t);
      used[t] = true;
      if (assign(k + 1)) return true;
      used[t] = false;
    }
    return false;
  };

  assign(0);
  return witness;
}

Monomial antichain_element(int n, const Stage& stage) {
  if (n < 3) throw std::invalid_argument("antichain elements start at n = 3");
  if (stage.positives < n || stage.negatives < n - 1) {
    throw std::invalid_argument("stage " + stage.to_string() +
                                " is too small for antichain element " +
                                std::to_string(n));
  }
  std::vector<SignedIndex> a{-2};
  for (SignedIndex i = 2; i <= stage.positives; ++i) a.push_back(i);
  std::vector<SignedIndex> b;
  for (SignedIndex i = -(n - 1); i <= -1; ++i) b.push_back(i);
  b.push_back(1);
  for (SignedIndex i = n + 1; i <= stage.positives; ++i) b.push_back(i);
  return Monomial(stage,
                  {WedgeIndex::from_set(a), WedgeIndex::from_set(b)});
}

bool AntichainReport::all_incomparable() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const AntichainPairResult& r) { return r.incomparable(); });
}

AntichainReport antichain_verify(int max_n, std::optional<Stage> stage) {
  if (max_n < 3) throw std::invalid_argument("max_n must be at least 3");
  AntichainReport report;
  report.max_n = max_n;
  for (int n = 3; n < max_n; ++n) {
    for (int m = n + 1; m <= max_n; ++m) {
      const Stage at = stage ? *stage : Stage{m - 1, m + 2};
      AntichainPairResult result;
      result.n = n;
      result.m = m;
      result.stage = at;
      const Monomial first = antichain_element(n, at);
      const Monomial second = antichain_element(m, at);
      result.forward = divides_mod_group(first, second);
      result.backward = divides_mod_group(second, first);
      report.pairs.push_back(std::move(result));
    }
  }
  return report;
}

std::vector<Monomial> orbit(const Monomial& m) {
  const Stage stage = m.stage();
  if (m.is_unit()) return {m};

  std::vector<LabelSet> sources;
  for (const WedgeIndex& f : m.factors()) sources.push_back(as_sorted_set(f));
  const std::size_t d = sources.size();

  // Two factor tuples lie in one orbit exactly when every sub-collection
  // has the same intersection cardinality (equal Venn patterns).
  const auto subset_intersection_size = [](const std::vector<LabelSet>& sets,
                                           std::uint32_t mask) {
    LabelSet acc;
    bool started = false;
    for (std::size_t j = 0; mask != 0; ++j, mask >>= 1) {
      if ((mask & 1u) == 0) continue;
      if (!started) {
        acc = sets[j];
        started = true;
        continue;
      }
      LabelSet narrowed;
      std::set_intersection(acc.begin(), acc.end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(narrowed));
      acc = std::move(narrowed);
    }
    return acc.size();
  };

  const std::vector<WedgeIndex> keys = basis_keys(stage, m.factor_degree());

  std::set<Monomial, Monomial::TermLess> images;
  std::vector<const WedgeIndex*> chosen(d, nullptr);
  std::vector<LabelSet> chosen_sets(d);

  const std::function<void(std::size_t)> choose = [&](std::size_t k) {
    if (k == d) {
      std::vector<WedgeIndex> factors;
      factors.reserve(d);
      for (const auto* key : chosen) factors.push_back(*key);
      images.insert(Monomial(stage, std::move(factors)));
      return;
    }
    for (const WedgeIndex& candidate : keys) {
      chosen_sets[k] = as_sorted_set(candidate);
      bool compatible = true;
      const std::uint32_t self = 1u << k;
      for (std::uint32_t mask = 0; mask < self && compatible; ++mask) {
        const std::uint32_t with_k = mask | self;
        if (subset_intersection_size(chosen_sets, with_k) !=
            subset_intersection_size(sources, with_k)) {
          compatible = false;
        }
      }
      if (!compatible) continue;
      chosen[k] = &candidate;
      choose(k + 1);
    }
  };

  choose(0);
  return {images.begin(), images.end()};
}

}  // namespace grstage
