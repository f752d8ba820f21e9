#pragma once

#include "grstage/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grstage {

/// Nonzero basis label: ..., -2, -1, 1, 2, ...
using SignedIndex = std::int32_t;

/// Position of a signed label in the interleaved well order:
/// -n -> 2n and p -> 2p-1. A bijection onto the positive integers.
std::int64_t mu(SignedIndex i);

bool mu_less(SignedIndex a, SignedIndex b);

/// Finite truncation with `negatives` negative labels and `positives`
/// positive labels.
struct Stage {
  int negatives = 1;
  int positives = 1;

  bool valid() const { return negatives >= 1 && positives >= 1; }
  bool contains(SignedIndex i) const {
    return (i < 0 && -i <= negatives) || (i > 0 && i <= positives);
  }
  int symbol_count() const { return negatives + positives; }
  /// All stage labels, sorted by mu: 1, -1, 2, -2, ...
  std::vector<SignedIndex> symbols() const;
  std::string to_string() const;

  bool operator==(const Stage&) const = default;
};

struct CanonicalWedge;

/// A canonically ordered wedge of distinct basis labels; the variable and
/// basis label for one exterior degree. Labels are strictly mu-increasing.
class WedgeIndex {
 public:
  WedgeIndex() = default;  // degree 0, the unit key

  /// Sorts raw labels into mu order. A repeated label yields nullopt (the
  /// wedge is zero).
  static std::optional<CanonicalWedge> canonicalize(
      std::span<const SignedIndex> raw);
  /// Wraps an already strictly mu-increasing label list (checked).
  static WedgeIndex from_sorted(std::vector<SignedIndex> labels);
  static WedgeIndex from_set(std::span<const SignedIndex> labels);

  int degree() const { return static_cast<int>(labels_.size()); }
  const std::vector<SignedIndex>& labels() const { return labels_; }
  bool contains(SignedIndex i) const;
  /// 0-based position of i, or -1.
  int position_of(SignedIndex i) const;
  bool valid_at(const Stage& stage) const;
  /// Key with label i removed (i must be present).
  WedgeIndex without(SignedIndex i) const;

  /// Lexicographic comparison of the mu words, reading from the left.
  /// Throws on degree mismatch.
  static int compare(const WedgeIndex& a, const WedgeIndex& b);

  std::string to_string() const;

  bool operator==(const WedgeIndex&) const = default;

 private:
  std::vector<SignedIndex> labels_;
};

struct CanonicalWedge {
  WedgeIndex index;
  int sign;  // +1 or -1, parity of the sorting permutation
};

/// Container ordering: degree first, then the mu-lex well order.
struct WedgeIndexLess {
  bool operator()(const WedgeIndex& a, const WedgeIndex& b) const;
};

/// All degree-d keys over the stage symbols, in mu-lex order.
std::vector<WedgeIndex> basis_keys(const Stage& stage, int degree);

enum class Side { Primal, Dual };

/// Sparse exterior-algebra element at a fixed stage, degree and side.
/// No zero coefficients are stored.
class ExteriorElement {
 public:
  using CoeffMap = std::map<WedgeIndex, Scalar, WedgeIndexLess>;

  ExteriorElement(Stage stage, int degree, Side side, Field field);

  static ExteriorElement zero(Stage stage, int degree, Side side, Field field);
  /// The basis element with coefficient 1 on `key`.
  static ExteriorElement basis(Stage stage, Side side, const WedgeIndex& key,
                               Field field);
  /// Degree-0 element with the given value on the unit key.
  static ExteriorElement constant(Stage stage, Side side, const Scalar& value,
                                  Field field);

  const Stage& stage() const { return stage_; }
  int degree() const { return degree_; }
  Side side() const { return side_; }
  const Field& field() const { return field_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coefficient(const WedgeIndex& key) const;
  /// Adds `value` to the coefficient at `key`, pruning zeros.
  void accumulate(const WedgeIndex& key, const Scalar& value);
  void set_coefficient(const WedgeIndex& key, const Scalar& value);

  ExteriorElement plus(const ExteriorElement& other) const;
  ExteriorElement minus(const ExteriorElement& other) const;
  ExteriorElement scaled(const Scalar& factor) const;

  bool operator==(const ExteriorElement& other) const;

 private:
  Stage stage_;
  int degree_;
  Side side_;
  Field field_;
  CoeffMap coeffs_;
};

/// Graded-anticommutative product. Same stage and side required.
ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v);

/// Product of degree-1 dual elements, left to right.
ExteriorElement wedge_of_covectors(std::span<const ExteriorElement> covectors);

/// Dual-primal pairing: sum over shared keys of the coefficient products.
/// For a wedge of covectors against a wedge of basis vectors this equals the
/// evaluation determinant.
Scalar pairing(const ExteriorElement& functional, const ExteriorElement& vec);

/// Interior product contracting the FIRST slot: (i_v w)(u_1, ..., u_{d-1})
/// = w(v, u_1, ..., u_{d-1}). On a basis key holding i at 0-based position
/// k the result carries sign (-1)^k.
ExteriorElement interior(SignedIndex i, const ExteriorElement& omega);

/// Primal (n,p) -> (n+1,p); identity on coefficients.
ExteriorElement map_eta(const ExteriorElement& u);
/// Primal (n,p) -> (n,p+1); wedge with x_{p+1} on the right.
ExteriorElement map_beta(const ExteriorElement& u);
/// Dual (n+1,p) -> (n,p); drops keys containing -(n+1).
ExteriorElement map_xi(const ExteriorElement& omega);
/// Dual (n,p+1) -> (n,p); contraction by x_{p+1}.
ExteriorElement map_theta(const ExteriorElement& omega);

}  // namespace grstage
