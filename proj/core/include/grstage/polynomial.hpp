#pragma once

#include "grstage/exterior.hpp"
#include "grstage/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace grstage {

/// Commutative product of wedge-index variables at one stage. Factors all
/// share one wedge degree; the multiset is kept sorted ascending in the
/// wedge well order.
class Monomial {
 public:
  explicit Monomial(Stage stage);  // the unit monomial
  Monomial(Stage stage, std::vector<WedgeIndex> factors);

  const Stage& stage() const { return stage_; }
  /// Number of factors (the monomial degree in the coordinate ring).
  int degree() const { return static_cast<int>(factors_.size()); }
  /// Common wedge degree of the factors (0 for the unit).
  int factor_degree() const;
  const std::vector<WedgeIndex>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  Monomial times(const Monomial& other) const;

  /// The lex term order induced by the wedge well order: factor words are
  /// compared largest factor first; a proper prefix is smaller. Degree-1
  /// monomials order as their variables; a monomial precedes its proper
  /// multiples.
  static int term_compare(const Monomial& a, const Monomial& b);

  struct TermLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return term_compare(a, b) < 0;
    }
  };

  std::string to_string() const;

  bool operator==(const Monomial& other) const {
    return stage_ == other.stage_ && factors_ == other.factors_;
  }

 private:
  Stage stage_;
  std::vector<WedgeIndex> factors_;
};

/// Sparse polynomial in wedge-index variables with exact coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, Monomial::TermLess>;

  Polynomial(Stage stage, Field field);

  static Polynomial zero(Stage stage, Field field);
  static Polynomial term(const Monomial& m, const Scalar& coeff, Field field);

  const Stage& stage() const { return stage_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;
  void accumulate(const Monomial& m, const Scalar& coeff);

  Polynomial plus(const Polynomial& other) const;
  Polynomial minus(const Polynomial& other) const;
  Polynomial scaled(const Scalar& factor) const;
  Polynomial times_monomial(const Monomial& m) const;

  /// True when every term has the given monomial degree.
  bool is_homogeneous(int degree) const;

  /// Largest term in the term order (throws on the zero polynomial).
  const Monomial& leading_monomial() const;
  Scalar leading_coefficient() const;
  /// Scales so the leading coefficient is 1.
  Polynomial monic() const;

  /// Evaluates with the given sparse coordinate assignment; absent keys
  /// read as zero.
  Scalar evaluate(
      const std::map<WedgeIndex, Scalar, WedgeIndexLess>& coords) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const {
    return stage_ == other.stage_ && field_.spec() == other.field_.spec() &&
           terms_ == other.terms_;
  }

 private:
  Stage stage_;
  Field field_;
  TermMap terms_;
};

}  // namespace grstage
