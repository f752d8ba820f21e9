#include "grstage/matroid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grstage {

Matroid::Matroid(std::vector<SignedIndex> ground, int rank,
                 std::set<Basis> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
    throw std::invalid_argument("repeated ground element");
  }
  if (bases_.empty()) throw std::invalid_argument("basis family is empty");
  for (const Basis& b : bases_) {
    if (static_cast<int>(b.size()) != rank_ ||
        !std::is_sorted(b.begin(), b.end())) {
      throw std::invalid_argument("basis size or order is wrong");
    }
    for (const SignedIndex e : b) {
      if (!std::binary_search(ground_.begin(), ground_.end(), e)) {
        throw std::invalid_argument("basis element outside the ground set");
      }
    }
  }
}

bool Matroid::in_ground(SignedIndex e) const {
  return std::binary_search(ground_.begin(), ground_.end(), e);
}

bool Matroid::is_loop(SignedIndex e) const {
  if (!in_ground(e)) throw std::invalid_argument("element not in ground set");
  return std::none_of(bases_.begin(), bases_.end(), [&](const Basis& b) {
    return std::binary_search(b.begin(), b.end(), e);
  });
}

bool Matroid::is_coloop(SignedIndex e) const {
  if (!in_ground(e)) throw std::invalid_argument("element not in ground set");
  return std::all_of(bases_.begin(), bases_.end(), [&](const Basis& b) {
    return std::binary_search(b.begin(), b.end(), e);
  });
}

bool Matroid::check_basis_exchange() const {
  for (const Basis& b1 : bases_) {
    for (const Basis& b2 : bases_) {
      for (const SignedIndex e : b1) {
        if (std::binary_search(b2.begin(), b2.end(), e)) continue;
        bool exchanged = false;
        for (const SignedIndex f : b2) {
          if (std::binary_search(b1.begin(), b1.end(), f)) continue;
          Basis candidate;
          candidate.reserve(b1.size());
          for (const SignedIndex g : b1) {
            if (g != e) candidate.push_back(g);
          }
          candidate.push_back(f);
          std::sort(candidate.begin(), candidate.end());
          if (bases_.count(candidate)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

std::optional<Matroid> matroid_of(const ConePoint& omega) {
  if (!omega.validate()) {
    throw std::invalid_argument("support matroid needs a decomposable point");
  }
  if (omega.is_zero()) return std::nullopt;
  std::vector<SignedIndex> ground = omega.stage().symbols();
  std::sort(ground.begin(), ground.end());
  std::set<Matroid::Basis> bases;
  for (const WedgeIndex& key : omega.support()) {
    Matroid::Basis b(key.labels().begin(), key.labels().end());
    std::sort(b.begin(), b.end());
    bases.insert(std::move(b));
  }
  return Matroid(std::move(ground), omega.stage().positives, std::move(bases));
}

std::optional<Matroid> delete_element(const Matroid& m, SignedIndex e) {
  if (!m.in_ground(e)) throw std::invalid_argument("element not in ground set");
  if (m.is_coloop(e)) return std::nullopt;
  std::set<Matroid::Basis> bases;
  for (const Matroid::Basis& b : m.bases()) {
    if (!std::binary_search(b.begin(), b.end(), e)) bases.insert(b);
  }
  std::vector<SignedIndex> ground;
  for (const SignedIndex g : m.ground()) {
    if (g != e) ground.push_back(g);
  }
  return Matroid(std::move(ground), m.rank(), std::move(bases));
}

std::optional<Matroid> contract_element(const Matroid& m, SignedIndex e) {
  if (!m.in_ground(e)) throw std::invalid_argument("element not in ground set");
  if (m.is_loop(e)) return std::nullopt;
  std::set<Matroid::Basis> bases;
  for (const Matroid::Basis& b : m.bases()) {
    if (!std::binary_search(b.begin(), b.end(), e)) continue;
    Matroid::Basis reduced;
    reduced.reserve(b.size() - 1);
    for (const SignedIndex g : b) {
      if (g != e) reduced.push_back(g);
    }
    bases.insert(std::move(reduced));
  }
  std::vector<SignedIndex> ground;
  for (const SignedIndex g : m.ground()) {
    if (g != e) ground.push_back(g);
  }
  return Matroid(std::move(ground), m.rank() - 1, std::move(bases));
}

namespace {

// Backtracking isomorphism search refined by basis-membership degree.
std::optional<std::map<SignedIndex, SignedIndex>> find_isomorphism(
    const Matroid& a, const Matroid& b) {
  if (a.ground().size() != b.ground().size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size()) {
    return std::nullopt;
  }
  const auto degree_of = [](const Matroid& m, SignedIndex e) {
    int d = 0;
    for (const auto& basis : m.bases()) {
      if (std::binary_search(basis.begin(), basis.end(), e)) ++d;
    }
    return d;
  };
  std::map<SignedIndex, int> deg_a, deg_b;
  for (const SignedIndex e : a.ground()) deg_a[e] = degree_of(a, e);
  for (const SignedIndex e : b.ground()) deg_b[e] = degree_of(b, e);

  std::map<SignedIndex, SignedIndex> assignment;
  std::set<SignedIndex> used;
  const std::vector<SignedIndex>& order = a.ground();

  const auto maps_bases = [&]() {
    std::set<Matroid::Basis> image;
    for (const Matroid::Basis& basis : a.bases()) {
      Matroid::Basis mapped;
      mapped.reserve(basis.size());
      for (const SignedIndex e : basis) mapped.push_back(assignment.at(e));
      std::sort(mapped.begin(), mapped.end());
      image.insert(std::move(mapped));
    }
    return image == b.bases();
  };

  const std::function<bool(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == order.size()) return maps_bases();
    const SignedIndex e = order[idx];
    for (const SignedIndex f : b.ground()) {
      if (used.count(f) || deg_a.at(e) != deg_b.at(f)) continue;
      assignment[e] = f;
      used.insert(f);
      if (extend(idx + 1)) return true;
      assignment.erase(e);
      used.erase(f);
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return assignment;
}

}  // namespace

std::optional<MinorWitness> is_minor(const Matroid& m, const Matroid& n) {
  const int removals = static_cast<int>(n.ground().size()) -
                       static_cast<int>(m.ground().size());
  const int contractions_needed = n.rank() - m.rank();
  if (removals < 0 || contractions_needed < 0 ||
      contractions_needed > removals) {
    return std::nullopt;
  }

  std::vector<MinorStep> steps;
  std::optional<MinorWitness> witness;

  // Enumerate removal subsets in ascending order, then delete/contract
  // assignments within each subset. Loop contraction and coloop deletion
  // prune a branch; the equivalent branch with the other operation remains.
  const std::vector<SignedIndex>& ground = n.ground();
  std::vector<SignedIndex> removed;

  std::function<bool(std::size_t)> choose_subset;
  std::function<bool(const Matroid&, std::size_t, int)> apply_ops =
      [&](const Matroid& current, std::size_t idx, int contractions) {
        if (idx == removed.size()) {
          if (contractions != contractions_needed) return false;
          const auto iso = find_isomorphism(m, current);
          if (!iso) return false;
          witness = MinorWitness{steps, *iso};
          return true;
        }
        const SignedIndex e = removed[idx];
        if (contractions < contractions_needed) {
          if (const auto contracted = contract_element(current, e)) {
            steps.push_back({MinorStep::Op::Contract, e});
            if (apply_ops(*contracted, idx + 1, contractions + 1)) return true;
            steps.pop_back();
          }
        }
        if (const auto deleted = delete_element(current, e)) {
          steps.push_back({MinorStep::Op::Delete, e});
          if (apply_ops(*deleted, idx + 1, contractions)) return true;
          steps.pop_back();
        }
        return false;
      };

  choose_subset = [&](std::size_t start) {
    if (static_cast<int>(removed.size()) == removals) {
      return apply_ops(n, 0, 0);
    }
    for (std::size_t k = start; k < ground.size(); ++k) {
      removed.push_back(ground[k]);
      if (choose_subset(k + 1)) return true;
      removed.pop_back();
    }
    return false;
  };

  choose_subset(0);
  return witness;
}

CorrespondenceReport correspondence_check(const ConePoint& omega) {
  if (omega.is_zero()) {
    throw std::invalid_argument("correspondence check needs a nonzero point");
  }
  const auto support_matroid = matroid_of(omega);  // validates decomposability
  const Stage& stage = omega.stage();
  CorrespondenceReport report;

  if (stage.positives >= 2) {
    const SignedIndex top = static_cast<SignedIndex>(stage.positives);
    if (support_matroid->is_loop(top)) {
      report.contraction.status = CorrespondenceCase::Status::SkippedLoop;
      report.contraction.detail =
          "label " + std::to_string(top) + " is a loop; contraction image is 0";
    } else {
      const ConePoint image = theta_tilde(omega);
      const auto lhs = matroid_of(image);
      const auto rhs = contract_element(*support_matroid, top);
      const bool equal = lhs.has_value() && rhs.has_value() && *lhs == *rhs;
      report.contraction.status = equal
                                      ? CorrespondenceCase::Status::Verified
                                      : CorrespondenceCase::Status::Failed;
      if (!equal) report.contraction.detail = "support/contraction mismatch";
    }
  }

  if (stage.negatives >= 2) {
    const SignedIndex bottom = static_cast<SignedIndex>(-stage.negatives);
    if (support_matroid->is_coloop(bottom)) {
      report.deletion.status = CorrespondenceCase::Status::SkippedColoop;
      report.deletion.detail = "label " + std::to_string(bottom) +
                               " is a coloop; deletion image is 0";
    } else {
      const ConePoint image = xi_tilde(omega);
      const auto lhs = matroid_of(image);
      const auto rhs = delete_element(*support_matroid, bottom);
      const bool equal = lhs.has_value() && rhs.has_value() && *lhs == *rhs;
      report.deletion.status = equal ? CorrespondenceCase::Status::Verified
                                     : CorrespondenceCase::Status::Failed;
      if (!equal) report.deletion.detail = "support/deletion mismatch";
    }
  }

  return report;
}

}  // namespace grstage
