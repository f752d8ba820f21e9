#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace grstage {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Selects the coefficient field: a prime field GF(p) or the rationals.
struct FieldSpec {
  enum class Kind { Prime, Rationals };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;  // modulus when kind == Prime

  static FieldSpec gf(std::int64_t p);
  static FieldSpec rationals();

  /// Accepts "gf:<p>" or "q".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

/// One field element. Prime-field values hold the canonical residue in
/// [0, p); rational values hold a reduced fraction. All arithmetic goes
/// through Field, which knows the modulus.
class Scalar {
 public:
  Scalar() = default;

  bool is_zero() const;
  bool operator==(const Scalar&) const = default;

 private:
  friend class Field;
  std::variant<std::int64_t, BigRat> v_{std::int64_t{0}};
};

/// Arithmetic suite for a FieldSpec. Cheap to copy; immutable.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  bool is_prime() const { return spec_.kind == FieldSpec::Kind::Prime; }
  /// p for prime fields, 0 for the rationals.
  std::int64_t characteristic() const { return is_prime() ? spec_.p : 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// Prime fields reduce the fraction; the denominator must be a unit.
  Scalar from_rational(const BigRat& q) const;
  /// Accepts "n" or "n/d" with optional sign.
  Scalar parse(std::string_view text) const;
  std::string to_string(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Throws std::domain_error on zero input.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  /// Canonical residue of a prime-field value (prime backends only).
  std::int64_t residue(const Scalar& a) const;
  /// Reduced fraction of a rational value (rational backend only).
  const BigRat& rational(const Scalar& a) const;

  bool operator==(const Field& other) const { return spec_ == other.spec_; }

 private:
  Scalar make_residue(std::int64_t r) const;

  FieldSpec spec_;
};

}  // namespace grstage
