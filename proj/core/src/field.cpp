#include "grstage/field.hpp"

#include <charconv>
#include <stdexcept>

namespace grstage {

namespace {

bool is_prime_modulus(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Extended Euclid; requires 0 < a < p with gcd(a, p) == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return inv;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_modulus(p)) {
    throw std::invalid_argument("gf modulus must be a prime below 2^31");
  }
  return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::rationals() { return FieldSpec{Kind::Rationals, 0}; }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "gf:";
  if (text.substr(0, prefix.size()) == prefix) {
    return gf(parse_int(text.substr(prefix.size())));
  }
  throw std::invalid_argument("field must be 'gf:<p>' or 'q', got '" +
                              std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Prime ? "gf:" + std::to_string(p) : "q";
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::int64_t>(&v_)) return *r == 0;
  return std::get<BigRat>(v_).is_zero();
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldSpec::Kind::Prime && !is_prime_modulus(spec_.p)) {
    throw std::invalid_argument("invalid prime modulus");
  }
}

Scalar Field::make_residue(std::int64_t r) const {
  Scalar s;
  s.v_ = r;
  return s;
}

Scalar Field::zero() const {
  if (is_prime()) return make_residue(0);
  Scalar s;
  s.v_ = BigRat(0);
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_prime()) {
    std::int64_t r = n % spec_.p;
    if (r < 0) r += spec_.p;
    return make_residue(r);
  }
  Scalar s;
  s.v_ = BigRat(n);
  return s;
}

Scalar Field::from_rational(const BigRat& q) const {
  if (!is_prime()) {
    Scalar s;
    s.v_ = q;
    return s;
  }
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const auto reduce = [this](const BigInt& n) {
    BigInt r = n % spec_.p;
    if (r < 0) r += spec_.p;
    return static_cast<std::int64_t>(r);
  };
  const std::int64_t d = reduce(den);
  if (d == 0) {
    throw std::domain_error("denominator is divisible by the characteristic");
  }
  return make_residue(reduce(num) * mod_inverse(d, spec_.p) % spec_.p);
}

Scalar Field::parse(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_rational(BigRat(BigInt(std::string(text))));
  }
  const BigInt num(std::string(text.substr(0, slash)));
  const BigInt den(std::string(text.substr(slash + 1)));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return from_rational(BigRat(num, den));
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime()) return std::to_string(residue(a));
  return rational(a).str();
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return make_residue((residue(a) + residue(b)) % spec_.p);
  Scalar s;
  s.v_ = BigRat(rational(a) + rational(b));
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::int64_t r = (residue(a) - residue(b)) % spec_.p;
    if (r < 0) r += spec_.p;
    return make_residue(r);
  }
  Scalar s;
  s.v_ = BigRat(rational(a) - rational(b));
  return s;
}

Scalar Field::neg(const Scalar& a) const { return sub(zero(), a); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return make_residue(residue(a) * residue(b) % spec_.p);
  Scalar s;
  s.v_ = BigRat(rational(a) * rational(b));
  return s;
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (is_prime()) return make_residue(mod_inverse(residue(a), spec_.p));
  Scalar s;
  s.v_ = BigRat(1 / rational(a));
  return s;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

std::int64_t Field::residue(const Scalar& a) const {
  const auto* r = std::get_if<std::int64_t>(&a.v_);
  if (r == nullptr) throw std::logic_error("scalar is not a prime-field value");
  return *r;
}

const BigRat& Field::rational(const Scalar& a) const {
  const auto* q = std::get_if<BigRat>(&a.v_);
  if (q == nullptr) throw std::logic_error("scalar is not a rational value");
  return *q;
}

}  // namespace grstage
