#include "grstage/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grstage {

Monomial::Monomial(Stage stage) : stage_(stage) {
  if (!stage_.valid()) throw std::invalid_argument("invalid stage");
}

Monomial::Monomial(Stage stage, std::vector<WedgeIndex> factors)
    : stage_(stage), factors_(std::move(factors)) {
  if (!stage_.valid()) throw std::invalid_argument("invalid stage");
  for (const WedgeIndex& f : factors_) {
    if (!f.valid_at(stage_)) {
      throw std::invalid_argument("factor " + f.to_string() +
                                  " is not valid at stage " +
                                  stage_.to_string());
    }
    if (f.degree() != factors_.front().degree()) {
      throw std::invalid_argument("factors must share one wedge degree");
    }
  }
  std::sort(factors_.begin(), factors_.end(), WedgeIndexLess{});
}

int Monomial::factor_degree() const {
  return factors_.empty() ? 0 : factors_.front().degree();
}

Monomial Monomial::times(const Monomial& other) const {
  if (stage_ != other.stage_) {
    throw std::invalid_argument("monomial product requires one stage");
  }
  std::vector<WedgeIndex> merged = factors_;
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  return Monomial(stage_, std::move(merged));
}

int Monomial::term_compare(const Monomial& a, const Monomial& b) {
  if (a.stage_ != b.stage_) {
    throw std::invalid_argument("term order requires one stage");
  }
  // Compare factor words largest-first; exhausted side is smaller.
  auto ia = a.factors_.rbegin();
  auto ib = b.factors_.rbegin();
  for (; ia != a.factors_.rend() && ib != b.factors_.rend(); ++ia, ++ib) {
    if (ia->degree() != ib->degree()) {
      throw std::invalid_argument("term order requires one factor degree");
    }
    const int c = WedgeIndex::compare(*ia, *ib);
    if (c != 0) return c;
  }
  if (ia != a.factors_.rend()) return 1;
  if (ib != b.factors_.rend()) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) out << '*';
    out << 'X' << factors_[k].to_string();
  }
  return out.str();
}

Polynomial::Polynomial(Stage stage, Field field)
    : stage_(stage), field_(std::move(field)) {
  if (!stage_.valid()) throw std::invalid_argument("invalid stage");
}

Polynomial Polynomial::zero(Stage stage, Field field) {
  return Polynomial(stage, std::move(field));
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& coeff,
                            Field field) {
  Polynomial p(m.stage(), std::move(field));
  p.accumulate(m, coeff);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::accumulate(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (m.stage() != stage_) {
    throw std::invalid_argument("term stage mismatch");
  }
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second = field_.add(it->second, coeff);
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  if (stage_ != other.stage_) {
    throw std::invalid_argument("polynomial addition requires one stage");
  }
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.accumulate(m, c);
  return out;
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  return plus(other.scaled(field_.from_int(-1)));
}

Polynomial Polynomial::scaled(const Scalar& factor) const {
  Polynomial out(stage_, field_);
  if (factor.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_.mul(c, factor));
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial out(stage_, field_);
  for (const auto& [t, c] : terms_) out.accumulate(t.times(m), c);
  return out;
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& entry) {
    return entry.first.degree() == degree;
  });
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no terms");
  return terms_.rbegin()->first;
}

Scalar Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no terms");
  return terms_.rbegin()->second;
}

Polynomial Polynomial::monic() const {
  return scaled(field_.inv(leading_coefficient()));
}

Scalar Polynomial::evaluate(
    const std::map<WedgeIndex, Scalar, WedgeIndexLess>& coords) const {
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar value = c;
    for (const WedgeIndex& f : m.factors()) {
      const auto it = coords.find(f);
      if (it == coords.end()) {
        value = field_.zero();
        break;
      }
      value = field_.mul(value, it->second);
    }
    acc = field_.add(acc, value);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << field_.to_string(c) << '*' << m.to_string();
  }
  return out.str();
}

}  // namespace grstage
