#pragma once

#include "grstage/field.hpp"
#include "grstage/grassmann.hpp"
#include "grstage/linalg.hpp"
#include "grstage/polynomial.hpp"
#include "grstage/symmetry.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace grstage {

/// Coordinatization of the degree-2 graded piece of the stage coordinate
/// ring: all degree-2 monomials in term order.
class Degree2Space {
 public:
  explicit Degree2Space(Stage stage);

  const Stage& stage() const { return stage_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  int index_of(const Monomial& m) const;

  /// Coefficient row of a degree-2 homogeneous polynomial.
  SparseRow row_of(const Polynomial& p) const;

 private:
  Stage stage_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int, Monomial::TermLess> index_;
};

/// Row per polynomial, column per degree-2 basis monomial.
std::vector<SparseRow> degree2_matrix(std::span<const Polynomial> polys,
                                      const Degree2Space& space);

/// Union of the symmetric-group orbits of the antichain elements 3..n at
/// the stage; distinct monomials in term order.
std::vector<Monomial> stage_generators(int n, const Stage& stage);

/// Exact certificate for degree-2 ideal membership. The generator list is
/// the orbit monomials (first) followed by the quadratic relations, both
/// in their deterministic construction order.
struct MembershipCertificate {
  bool in = false;
  int span_rank = 0;
  int adjoined_rank = 0;  // equals span_rank + 1 exactly when not in
  int orbit_generator_count = 0;
  int relation_count = 0;
  std::string target;
  /// index into the combined generator list -> coefficient (when in).
  std::vector<std::pair<int, std::string>> combination;
  std::string to_json() const;
};

/// Decides membership of a degree-2 homogeneous target in the span of
/// stage_generators(n) and the quadratic relations, by exact rank.
MembershipCertificate membership_degree2(const Polynomial& target, int n,
                                         const Stage& stage,
                                         const Field& field);
MembershipCertificate membership_degree2(const Monomial& target, int n,
                                         const Stage& stage,
                                         const Field& field);

/// Independently re-expands an "in" certificate (coefficients times the
/// rebuilt generator rows) and compares against the target.
bool recheck_membership(const MembershipCertificate& cert,
                        const Polynomial& target, int n, const Stage& stage,
                        const Field& field);

struct AlphaVar {
  int i = 0;  // positive label, 1..p
  int j = 0;  // negative label, 1..n
  auto operator<=>(const AlphaVar&) const = default;
};

/// Sparse exact polynomial in the big-cell parameters.
class AlphaPolynomial {
 public:
  using Mono = std::vector<AlphaVar>;  // sorted, repeats allowed

  explicit AlphaPolynomial(Field field);
  static AlphaPolynomial constant(const Scalar& value, Field field);
  static AlphaPolynomial variable(AlphaVar v, Field field);

  const Field& field() const { return field_; }
  const std::map<Mono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void accumulate(const Mono& m, const Scalar& coeff);
  AlphaPolynomial plus(const AlphaPolynomial& other) const;
  AlphaPolynomial minus(const AlphaPolynomial& other) const;
  AlphaPolynomial times(const AlphaPolynomial& other) const;
  AlphaPolynomial scaled(const Scalar& factor) const;

  Scalar evaluate(const AlphaMatrix& alpha) const;
  std::string to_string() const;

  bool operator==(const AlphaPolynomial& other) const {
    return field_.spec() == other.field_.spec() && terms_ == other.terms_;
  }

 private:
  Field field_;
  std::map<Mono, Scalar> terms_;
};

/// Restriction of a monomial to the big cell: the product over factors of
/// the signed symbolic minors of the alpha parameters.
AlphaPolynomial big_cell_restriction(const Monomial& m, const Stage& stage,
                                     const Field& field);
AlphaPolynomial big_cell_restriction(const Polynomial& p);

struct BigCellVerdict {
  bool in = false;
  int span_rank = 0;
  int adjoined_rank = 0;
};

/// Decides whether the big-cell restriction of the target lies in the
/// constant-coefficient span of the restricted generators.
BigCellVerdict membership_via_bigcell(const Monomial& target, int n,
                                      const Stage& stage, const Field& field);

struct ChainEntry {
  int ell = 0;
  MembershipCertificate in_own;       // expected: in
  MembershipCertificate not_in_prev;  // expected: not in
  BigCellVerdict bigcell_own;
  BigCellVerdict bigcell_prev;
  bool methods_agree = false;
  bool as_expected() const {
    return in_own.in && !not_in_prev.in && methods_agree;
  }
};

struct ChainReport {
  Stage stage;
  FieldSpec field;
  int l_max = 0;
  std::vector<ChainEntry> entries;
  bool ok() const;
  std::string to_json() const;
};

/// For each ell in 4..l_max, certifies that the ell-th antichain element
/// enters the span exactly at step ell, by both methods.
ChainReport chain_report(int l_max, const Stage& stage, const Field& field);

}  // namespace grstage
