#include "grstage/grassmann.hpp"

#include "grstage/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace grstage {

ScalarMatrix::ScalarMatrix(int rows, int cols, Field field)
    : rows_(rows), cols_(cols), field_(std::move(field)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  field_.zero());
}

Scalar& ScalarMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index");
  }
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
}

const Scalar& ScalarMatrix::at(int r, int c) const {
  return const_cast<ScalarMatrix*>(this)->at(r, c);
}

ConePoint::ConePoint(ExteriorElement coords) : element_(std::move(coords)) {
  if (element_.side() != Side::Dual) {
    throw std::invalid_argument("cone coordinates live on the dual side");
  }
  if (element_.degree() != element_.stage().positives) {
    throw std::invalid_argument("cone coordinates have degree p");
  }
}

ConePoint ConePoint::zero(Stage stage, Field field) {
  return ConePoint(
      ExteriorElement::zero(stage, stage.positives, Side::Dual, field));
}

std::vector<WedgeIndex> ConePoint::support() const {
  std::vector<WedgeIndex> keys;
  keys.reserve(element_.coeffs().size());
  for (const auto& [key, _] : element_.coeffs()) keys.push_back(key);
  return keys;
}

ConePoint ConePoint::scaled(const Scalar& factor) const {
  return ConePoint(element_.scaled(factor));
}

bool ConePoint::validate() const { return is_cone_point(element_); }

ConePoint pluecker_from_matrix(const ScalarMatrix& m, const Stage& stage) {
  const int p = stage.positives;
  if (m.rows() != p || m.cols() != stage.symbol_count()) {
    throw std::invalid_argument("matrix shape does not match the stage");
  }
  const Field& field = m.field();
  const std::vector<SignedIndex> symbols = stage.symbols();
  std::map<SignedIndex, int> column_of;
  for (std::size_t c = 0; c < symbols.size(); ++c) {
    column_of[symbols[c]] = static_cast<int>(c);
  }

  ExteriorElement coords =
      ExteriorElement::zero(stage, p, Side::Dual, field);
  for (const WedgeIndex& key : basis_keys(stage, p)) {
    std::vector<std::vector<Scalar>> sub(
        static_cast<std::size_t>(p),
        std::vector<Scalar>(static_cast<std::size_t>(p), field.zero()));
    for (int r = 0; r < p; ++r) {
      for (int c = 0; c < p; ++c) {
        sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            m.at(r, column_of.at(key.labels()[static_cast<std::size_t>(c)]));
      }
    }
    coords.accumulate(key, determinant(std::move(sub), field));
  }
  return ConePoint(std::move(coords));
}

std::vector<Polynomial> pluecker_relations(const Stage& stage,
                                           const Field& field) {
  const int p = stage.positives;
  std::vector<Polynomial> out;
  if (p < 2) return out;

  const std::vector<WedgeIndex> lower = basis_keys(stage, p - 1);
  const std::vector<WedgeIndex> upper = basis_keys(stage, p + 1);

  std::map<std::string, Polynomial> distinct;
  std::vector<SignedIndex> raw;
  for (const WedgeIndex& i_key : lower) {
    for (const WedgeIndex& j_key : upper) {
      Polynomial rel(stage, field);
      const auto& j_labels = j_key.labels();
      for (std::size_t k = 0; k < j_labels.size(); ++k) {
        const SignedIndex j = j_labels[k];
        if (i_key.contains(j)) continue;
        raw.assign(i_key.labels().begin(), i_key.labels().end());
        raw.push_back(j);
        const auto first = WedgeIndex::canonicalize(raw);
        if (!first) continue;
        int sign = first->sign;
        if (k % 2 == 1) sign = -sign;
        const Monomial term(
            stage, {first->index, j_key.without(j)});
        rel.accumulate(term, field.from_int(sign));
      }
      if (rel.is_zero()) continue;
      Polynomial normalized = rel.monic();
      distinct.emplace(normalized.to_string(), std::move(normalized));
    }
  }
  out.reserve(distinct.size());
  for (auto& [_, rel] : distinct) out.push_back(std::move(rel));
  return out;
}

namespace {

// Relation families are pure functions of (stage, field); memoized since
// validation sweeps request the same family thousands of times.
const std::vector<Polynomial>& cached_relations(const Stage& stage,
                                                const Field& field) {
  using Key = std::tuple<int, int, std::string>;
  static std::mutex mutex;
  static std::map<Key, std::vector<Polynomial>> cache;
  const Key key{stage.negatives, stage.positives, field.spec().to_string()};
  {
    std::scoped_lock lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Polynomial> fresh = pluecker_relations(stage, field);
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(fresh)).first->second;
}

}  // namespace

bool is_cone_point(const ExteriorElement& coords) {
  if (coords.side() != Side::Dual ||
      coords.degree() != coords.stage().positives) {
    throw std::invalid_argument("expected degree-p dual coordinates");
  }
  for (const Polynomial& rel : cached_relations(coords.stage(), coords.field())) {
    if (!rel.evaluate(coords.coeffs()).is_zero()) return false;
  }
  return true;
}

AlphaMatrix::AlphaMatrix(Stage stage, Field field)
    : stage_(stage), field_(std::move(field)) {
  if (!stage_.valid()) throw std::invalid_argument("invalid stage");
  entries_.assign(static_cast<std::size_t>(stage_.positives) *
                      static_cast<std::size_t>(stage_.negatives),
                  field_.zero());
}

Scalar& AlphaMatrix::at(int i, int j) {
  if (i < 1 || i > stage_.positives || j < 1 || j > stage_.negatives) {
    throw std::out_of_range("alpha index");
  }
  return entries_[static_cast<std::size_t>(i - 1) *
                      static_cast<std::size_t>(stage_.negatives) +
                  static_cast<std::size_t>(j - 1)];
}

const Scalar& AlphaMatrix::at(int i, int j) const {
  return const_cast<AlphaMatrix*>(this)->at(i, j);
}

ConePoint big_cell_point(const AlphaMatrix& alpha) {
  const Stage& stage = alpha.stage();
  const Field& field = alpha.field();
  std::vector<ExteriorElement> covectors;
  covectors.reserve(static_cast<std::size_t>(stage.positives));
  for (int i = 1; i <= stage.positives; ++i) {
    ExteriorElement f(stage, 1, Side::Dual, field);
    f.set_coefficient(WedgeIndex::from_set(std::vector<SignedIndex>{i}),
                      field.one());
    for (int j = 1; j <= stage.negatives; ++j) {
      f.set_coefficient(WedgeIndex::from_set(std::vector<SignedIndex>{-j}),
                        alpha.at(i, j));
    }
    covectors.push_back(std::move(f));
  }
  return ConePoint(wedge_of_covectors(covectors));
}

BigCellMinorShape big_cell_minor_shape(std::span<const int> negatives,
                                       std::span<const int> positives,
                                       const Stage& stage) {
  const int p = stage.positives;
  const int q = static_cast<int>(negatives.size());
  if (q + static_cast<int>(positives.size()) != p) {
    throw std::invalid_argument("index split must have p entries");
  }
  BigCellMinorShape shape;
  shape.negatives.assign(negatives.begin(), negatives.end());
  shape.positives.assign(positives.begin(), positives.end());
  for (std::size_t k = 0; k < shape.negatives.size(); ++k) {
    const int n = shape.negatives[k];
    if (n < 1 || n > stage.negatives ||
        (k > 0 && shape.negatives[k - 1] >= n)) {
      throw std::invalid_argument("negative part must be ascending in range");
    }
  }
  for (std::size_t k = 0; k < shape.positives.size(); ++k) {
    const int d = shape.positives[k];
    if (d < 1 || d > p || (k > 0 && shape.positives[k - 1] >= d)) {
      throw std::invalid_argument("positive part must be ascending in range");
    }
  }
  for (int i = 1; i <= p; ++i) {
    if (!std::binary_search(shape.positives.begin(), shape.positives.end(), i)) {
      shape.row_complement.push_back(i);
    }
  }
  // Parity of moving the d-rows below the complement rows.
  std::vector<int> order = shape.row_complement;
  order.insert(order.end(), shape.positives.begin(), shape.positives.end());
  int inversions = 0;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (order[a] > order[b]) ++inversions;
    }
  }
  shape.sign = inversions % 2 == 0 ? 1 : -1;
  return shape;
}

BigCellMinorShape big_cell_minor_shape(const WedgeIndex& key,
                                       const Stage& stage) {
  std::vector<int> negatives, positives;
  for (const SignedIndex i : key.labels()) {
    if (i < 0) {
      negatives.push_back(-i);
    } else {
      positives.push_back(i);
    }
  }
  std::sort(negatives.begin(), negatives.end());
  std::sort(positives.begin(), positives.end());
  return big_cell_minor_shape(negatives, positives, stage);
}

Scalar big_cell_coordinate(const AlphaMatrix& alpha,
                           std::span<const int> negatives,
                           std::span<const int> positives) {
  const Field& field = alpha.field();
  const BigCellMinorShape shape =
      big_cell_minor_shape(negatives, positives, alpha.stage());
  const std::size_t q = shape.negatives.size();
  std::vector<std::vector<Scalar>> minor(
      q, std::vector<Scalar>(q, field.zero()));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      minor[a][b] = alpha.at(shape.row_complement[a], shape.negatives[b]);
    }
  }
  Scalar det = determinant(std::move(minor), field);
  if (shape.sign < 0) det = field.neg(det);
  return det;
}

ConePoint theta_tilde(const ConePoint& omega) {
  if (omega.stage().positives < 2) {
    throw std::invalid_argument("theta_tilde needs positives >= 2");
  }
  if (!omega.validate()) {
    throw std::invalid_argument("theta_tilde input is not a cone point");
  }
  return ConePoint(map_theta(omega.element()));
}

ConePoint xi_tilde(const ConePoint& omega) {
  if (omega.stage().negatives < 2) {
    throw std::invalid_argument("xi_tilde needs negatives >= 2");
  }
  if (!omega.validate()) {
    throw std::invalid_argument("xi_tilde input is not a cone point");
  }
  return ConePoint(map_xi(omega.element()));
}

}  // namespace grstage
