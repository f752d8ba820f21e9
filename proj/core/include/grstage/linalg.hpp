#pragma once

#include "grstage/field.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace grstage {

/// Sparse exact row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::int32_t, Scalar>>;

/// Exact determinant by Gaussian elimination with division. Destroys the
/// working copy; `entries` is row-major, square.
Scalar determinant(std::vector<std::vector<Scalar>> entries, const Field& field);

/// Incremental exact row reduction in echelon form. Rows are reduced
/// against existing pivots; independent remainders become new pivots with
/// the leading column normalized to 1. Pivot selection is the first
/// nonzero column in the fixed column order. With tracking enabled every
/// pivot carries its expression over the input rows, so membership probes
/// return explicit combinations.
class RowReducer {
 public:
  explicit RowReducer(const Field& field, bool track_combinations = false);
  ~RowReducer();
  RowReducer(RowReducer&&) noexcept;
  RowReducer& operator=(RowReducer&&) noexcept;

  /// Reduces and stores the row; returns its input index.
  int add_row(const SparseRow& row);
  int rank() const;
  int input_count() const;

  struct Probe {
    bool in_span = false;
    /// target == sum coeff_k * input_k when in_span and tracking is on.
    std::vector<std::pair<int, Scalar>> combination;
  };
  /// Membership test without inserting the row.
  Probe probe(const SparseRow& row) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace grstage
