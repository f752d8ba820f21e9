#pragma once

#include "grstage/exterior.hpp"
#include "grstage/field.hpp"
#include "grstage/polynomial.hpp"

#include <span>
#include <vector>

namespace grstage {

/// Dense exact matrix over one field.
class ScalarMatrix {
 public:
  ScalarMatrix(int rows, int cols, Field field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;

 private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<Scalar> entries_;
};

/// A point of the affine cone over the Grassmannian: dual-side degree-p
/// coordinates at a stage. Decomposability is checked on demand via
/// validate(), not in the constructor.
class ConePoint {
 public:
  explicit ConePoint(ExteriorElement coords);
  static ConePoint zero(Stage stage, Field field);

  const Stage& stage() const { return element_.stage(); }
  const Field& field() const { return element_.field(); }
  const ExteriorElement& element() const { return element_; }
  bool is_zero() const { return element_.is_zero(); }

  Scalar coordinate(const WedgeIndex& key) const {
    return element_.coefficient(key);
  }
  std::vector<WedgeIndex> support() const;
  ConePoint scaled(const Scalar& factor) const;

  /// True when every quadratic relation of the stage vanishes here.
  bool validate() const;

  bool operator==(const ConePoint& other) const {
    return element_ == other.element_;
  }

 private:
  ExteriorElement element_;
};

/// Plücker coordinates of the row space: the coordinate at key S is the
/// maximal minor on the columns of S (columns follow the stage symbols in
/// mu order). Rank below p gives the zero point.
ConePoint pluecker_from_matrix(const ScalarMatrix& m, const Stage& stage);

/// The quadratic shuffle relations for the stage, deduplicated, in a
/// deterministic order. Empty for p = 1.
std::vector<Polynomial> pluecker_relations(const Stage& stage,
                                           const Field& field);

/// True iff every shuffle relation vanishes on the coordinates.
bool is_cone_point(const ExteriorElement& coords);

/// Big-cell parameters: alpha(i, j) is the coefficient of the j-th
/// negative dual label in the i-th shifted covector, 1 <= i <= positives,
/// 1 <= j <= negatives.
class AlphaMatrix {
 public:
  AlphaMatrix(Stage stage, Field field);

  const Stage& stage() const { return stage_; }
  const Field& field() const { return field_; }
  Scalar& at(int i, int j);
  const Scalar& at(int i, int j) const;

 private:
  Stage stage_;
  Field field_;
  std::vector<Scalar> entries_;
};

/// The wedge of the shifted covectors x*_i + sum_j alpha(i,j) x*_{-j}.
/// Its coordinate on X_{1..p} is 1.
ConePoint big_cell_point(const AlphaMatrix& alpha);

/// Index bookkeeping for one big-cell coordinate: the wedge key with
/// negative part {-n_1..-n_q} and positive part {d_1..d_{p-q}} evaluates
/// to sign * det of the q x q minor on rows `row_complement` (the
/// positives not among the d's) and columns n_1..n_q. The sign is the
/// parity of moving the d-rows of the evaluation matrix to the bottom.
struct BigCellMinorShape {
  std::vector<int> negatives;        // n_1 < ... < n_q
  std::vector<int> positives;        // d_1 < ... < d_{p-q}
  std::vector<int> row_complement;   // {1..p} minus positives, ascending
  int sign = 1;
};
BigCellMinorShape big_cell_minor_shape(std::span<const int> negatives,
                                       std::span<const int> positives,
                                       const Stage& stage);
BigCellMinorShape big_cell_minor_shape(const WedgeIndex& key,
                                       const Stage& stage);

/// Value of the big-cell point on the wedge with the given negative part
/// (as positive integers n_1 < ... < n_q) and positive part, computed as
/// the signed minor, not by expansion.
Scalar big_cell_coordinate(const AlphaMatrix& alpha,
                           std::span<const int> negatives,
                           std::span<const int> positives);

/// Cone restriction of the contraction map: (n, p+1) -> (n, p).
/// Throws when the input fails validate().
ConePoint theta_tilde(const ConePoint& omega);

/// Cone restriction of the negative-label restriction map:
/// (n+1, p) -> (n, p). Throws when the input fails validate().
ConePoint xi_tilde(const ConePoint& omega);

}  // namespace grstage
