#include "grstage/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grstage {

Degree2Space::Degree2Space(Stage stage) : stage_(stage) {
  const std::vector<WedgeIndex> keys = basis_keys(stage_, stage_.positives);
  for (std::size_t a = 0; a < keys.size(); ++a) {
    for (std::size_t b = a; b < keys.size(); ++b) {
      basis_.emplace_back(stage_, std::vector<WedgeIndex>{keys[a], keys[b]});
    }
  }
  std::sort(basis_.begin(), basis_.end(), Monomial::TermLess{});
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    index_.emplace(basis_[k], static_cast<int>(k));
  }
}

int Degree2Space::index_of(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) {
    throw std::invalid_argument("monomial is not a degree-2 basis element");
  }
  return it->second;
}

SparseRow Degree2Space::row_of(const Polynomial& p) const {
  if (p.stage() != stage_) throw std::invalid_argument("stage mismatch");
  if (!p.is_homogeneous(2)) {
    throw std::invalid_argument("polynomial is not degree-2 homogeneous");
  }
  SparseRow row;
  row.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    row.emplace_back(index_of(m), c);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<SparseRow> degree2_matrix(std::span<const Polynomial> polys,
                                      const Degree2Space& space) {
  std::vector<SparseRow> rows;
  rows.reserve(polys.size());
  for (const Polynomial& p : polys) rows.push_back(space.row_of(p));
  return rows;
}

std::vector<Monomial> stage_generators(int n, const Stage& stage) {
  if (n < 3) throw std::invalid_argument("generators start at n = 3");
  std::set<Monomial, Monomial::TermLess> distinct;
  for (int i = 3; i <= n; ++i) {
    for (Monomial& m : orbit(antichain_element(i, stage))) {
      distinct.insert(std::move(m));
    }
  }
  return {distinct.begin(), distinct.end()};
}

namespace {

struct SpanProblem {
  std::vector<Monomial> generators;
  std::vector<Polynomial> relations;
  Degree2Space space;
  RowReducer reducer;

  SpanProblem(int n, const Stage& stage, const Field& field, bool track)
      : generators(stage_generators(n, stage)),
        relations(pluecker_relations(stage, field)),
        space(stage),
        reducer(field, track) {
    for (const Monomial& g : generators) {
      reducer.add_row(SparseRow{{space.index_of(g), field.one()}});
    }
    for (const Polynomial& rel : relations) {
      reducer.add_row(space.row_of(rel));
    }
  }
};

}  // namespace

MembershipCertificate membership_degree2(const Polynomial& target, int n,
                                         const Stage& stage,
                                         const Field& field) {
  SpanProblem problem(n, stage, field, /*track=*/true);
  MembershipCertificate cert;
  cert.orbit_generator_count = static_cast<int>(problem.generators.size());
  cert.relation_count = static_cast<int>(problem.relations.size());
  cert.target = target.to_string();
  cert.span_rank = problem.reducer.rank();

  const SparseRow row = problem.space.row_of(target);
  const RowReducer::Probe probe = problem.reducer.probe(row);
  cert.in = probe.in_span;
  if (cert.in) {
    cert.adjoined_rank = cert.span_rank;
    for (const auto& [idx, coeff] : probe.combination) {
      cert.combination.emplace_back(idx, field.to_string(coeff));
    }
  } else {
    problem.reducer.add_row(row);
    cert.adjoined_rank = problem.reducer.rank();
  }
  return cert;
}

MembershipCertificate membership_degree2(const Monomial& target, int n,
                                         const Stage& stage,
                                         const Field& field) {
  return membership_degree2(Polynomial::term(target, field.one(), field), n,
                            stage, field);
}

bool recheck_membership(const MembershipCertificate& cert,
                        const Polynomial& target, int n, const Stage& stage,
                        const Field& field) {
  if (!cert.in) return false;
  const std::vector<Monomial> generators = stage_generators(n, stage);
  const std::vector<Polynomial> relations = pluecker_relations(stage, field);
  const Degree2Space space(stage);

  const auto row_for_index = [&](int idx) -> SparseRow {
    if (idx < static_cast<int>(generators.size())) {
      return SparseRow{
          {space.index_of(generators[static_cast<std::size_t>(idx)]),
           field.one()}};
    }
    const int rel = idx - static_cast<int>(generators.size());
    if (rel < 0 || rel >= static_cast<int>(relations.size())) {
      throw std::out_of_range("certificate references an unknown generator");
    }
    return space.row_of(relations[static_cast<std::size_t>(rel)]);
  };

  std::map<int, Scalar> acc;
  for (const auto& [idx, coeff_text] : cert.combination) {
    const Scalar coeff = field.parse(coeff_text);
    for (const auto& [col, value] : row_for_index(idx)) {
      const Scalar add = field.mul(coeff, value);
      const auto it = acc.find(col);
      if (it == acc.end()) {
        if (!add.is_zero()) acc.emplace(col, add);
        continue;
      }
      it->second = field.add(it->second, add);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  const SparseRow target_row = space.row_of(target);
  if (acc.size() != target_row.size()) return false;
  for (const auto& [col, value] : target_row) {
    const auto it = acc.find(col);
    if (it == acc.end() || !(it->second == value)) return false;
  }
  return true;
}

AlphaPolynomial::AlphaPolynomial(Field field) : field_(std::move(field)) {}

AlphaPolynomial AlphaPolynomial::constant(const Scalar& value, Field field) {
  AlphaPolynomial p(std::move(field));
  p.accumulate({}, value);
  return p;
}

AlphaPolynomial AlphaPolynomial::variable(AlphaVar v, Field field) {
  AlphaPolynomial p(std::move(field));
  p.accumulate({v}, p.field_.one());
  return p;
}

void AlphaPolynomial::accumulate(const Mono& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second = field_.add(it->second, coeff);
  if (it->second.is_zero()) terms_.erase(it);
}

AlphaPolynomial AlphaPolynomial::plus(const AlphaPolynomial& other) const {
  AlphaPolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.accumulate(m, c);
  return out;
}

AlphaPolynomial AlphaPolynomial::minus(const AlphaPolynomial& other) const {
  return plus(other.scaled(field_.from_int(-1)));
}

AlphaPolynomial AlphaPolynomial::times(const AlphaPolynomial& other) const {
  AlphaPolynomial out(field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Mono merged;
      merged.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                 std::back_inserter(merged));
      out.accumulate(merged, field_.mul(ca, cb));
    }
  }
  return out;
}

AlphaPolynomial AlphaPolynomial::scaled(const Scalar& factor) const {
  AlphaPolynomial out(field_);
  if (factor.is_zero()) return out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(m, field_.mul(c, factor));
  }
  return out;
}

Scalar AlphaPolynomial::evaluate(const AlphaMatrix& alpha) const {
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar value = c;
    for (const AlphaVar& v : m) {
      value = field_.mul(value, alpha.at(v.i, v.j));
    }
    acc = field_.add(acc, value);
  }
  return acc;
}

std::string AlphaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    if (!first_term) out << " + ";
    first_term = false;
    out << field_.to_string(c);
    for (const AlphaVar& v : m) out << "*a[" << v.i << ',' << v.j << ']';
  }
  return out.str();
}

namespace {

// Symbolic determinant by Laplace expansion along the first row.
AlphaPolynomial symbolic_det(const std::vector<std::vector<AlphaVar>>& m,
                             std::vector<int> rows, std::vector<int> cols,
                             const Field& field) {
  if (rows.empty()) return AlphaPolynomial::constant(field.one(), field);
  AlphaPolynomial acc(field);
  const int row = rows.front();
  const std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest_cols;
    rest_cols.reserve(cols.size() - 1);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if (t != k) rest_cols.push_back(cols[t]);
    }
    AlphaPolynomial cofactor =
        AlphaPolynomial::variable(
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[k])],
            field)
            .times(symbolic_det(m, rest_rows, rest_cols, field));
    if (k % 2 == 1) cofactor = cofactor.scaled(field.from_int(-1));
    acc = acc.plus(cofactor);
  }
  return acc;
}

}  // namespace

AlphaPolynomial big_cell_restriction(const Monomial& m, const Stage& stage,
                                     const Field& field) {
  AlphaPolynomial out = AlphaPolynomial::constant(field.one(), field);
  for (const WedgeIndex& factor : m.factors()) {
    if (factor.degree() != stage.positives) {
      throw std::invalid_argument(
          "big-cell restriction needs degree-p factors");
    }
    const BigCellMinorShape shape = big_cell_minor_shape(factor, stage);
    // The signed minor evaluates the negatives-first wedge; the variable
    // X_factor is the canonical-order coordinate. Carry the reordering
    // parity between the two.
    std::vector<SignedIndex> negatives_first;
    negatives_first.reserve(factor.labels().size());
    for (const int v : shape.negatives) {
      negatives_first.push_back(static_cast<SignedIndex>(-v));
    }
    for (const int v : shape.positives) {
      negatives_first.push_back(static_cast<SignedIndex>(v));
    }
    const auto canonical = WedgeIndex::canonicalize(negatives_first);
    const int reorder_sign = canonical->sign;
    const std::size_t q = shape.negatives.size();
    std::vector<std::vector<AlphaVar>> vars(q, std::vector<AlphaVar>(q));
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        vars[a][b] = AlphaVar{shape.row_complement[a], shape.negatives[b]};
      }
    }
    std::vector<int> rows(q), cols(q);
    for (std::size_t k = 0; k < q; ++k) {
      rows[k] = static_cast<int>(k);
      cols[k] = static_cast<int>(k);
    }
    AlphaPolynomial minor = symbolic_det(vars, rows, cols, field);
    if (shape.sign * reorder_sign < 0) minor = minor.scaled(field.from_int(-1));
    out = out.times(minor);
  }
  return out;
}

AlphaPolynomial big_cell_restriction(const Polynomial& p) {
  AlphaPolynomial out(p.field());
  for (const auto& [m, c] : p.terms()) {
    out = out.plus(
        big_cell_restriction(m, p.stage(), p.field()).scaled(c));
  }
  return out;
}

BigCellVerdict membership_via_bigcell(const Monomial& target, int n,
                                      const Stage& stage, const Field& field) {
  const std::vector<Monomial> generators = stage_generators(n, stage);

  std::vector<AlphaPolynomial> rows;
  rows.reserve(generators.size() + 1);
  for (const Monomial& g : generators) {
    rows.push_back(big_cell_restriction(g, stage, field));
  }
  AlphaPolynomial target_poly = big_cell_restriction(target, stage, field);

  // Column ids over every alpha-monomial that occurs.
  std::map<AlphaPolynomial::Mono, int> columns;
  const auto register_columns = [&](const AlphaPolynomial& p) {
    for (const auto& [m, _] : p.terms()) {
      columns.emplace(m, 0);
    }
  };
  for (const AlphaPolynomial& p : rows) register_columns(p);
  register_columns(target_poly);
  int next = 0;
  for (auto& [_, id] : columns) id = next++;

  const auto to_row = [&](const AlphaPolynomial& p) {
    SparseRow row;
    row.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
      row.emplace_back(columns.at(m), c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };

  RowReducer reducer(field, /*track=*/false);
  for (const AlphaPolynomial& p : rows) reducer.add_row(to_row(p));

  BigCellVerdict verdict;
  verdict.span_rank = reducer.rank();
  const SparseRow target_row = to_row(target_poly);
  verdict.in = reducer.probe(target_row).in_span;
  if (verdict.in) {
    verdict.adjoined_rank = verdict.span_rank;
  } else {
    reducer.add_row(target_row);
    verdict.adjoined_rank = reducer.rank();
  }
  return verdict;
}

bool ChainReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ChainEntry& e) { return e.as_expected(); });
}

ChainReport chain_report(int l_max, const Stage& stage, const Field& field) {
  if (l_max < 3) throw std::invalid_argument("l_max must be at least 3");
  ChainReport report;
  report.stage = stage;
  report.field = field.spec();
  report.l_max = l_max;
  for (int ell = 4; ell <= l_max; ++ell) {
    ChainEntry entry;
    entry.ell = ell;
    const Monomial target = antichain_element(ell, stage);
    entry.in_own = membership_degree2(target, ell, stage, field);
    entry.not_in_prev = membership_degree2(target, ell - 1, stage, field);
    entry.bigcell_own = membership_via_bigcell(target, ell, stage, field);
    entry.bigcell_prev = membership_via_bigcell(target, ell - 1, stage, field);
    entry.methods_agree = entry.in_own.in == entry.bigcell_own.in &&
                          entry.not_in_prev.in == entry.bigcell_prev.in;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace grstage
