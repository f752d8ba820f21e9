#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstage/field.hpp"
#include "grstage/sampling.hpp"

#include <stdexcept>

using namespace grstage;

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("gf:5") == FieldSpec::gf(5));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::gf(101).to_string() == "gf:101");
  CHECK(FieldSpec::rationals().to_string() == "q");
  CHECK_THROWS_AS(FieldSpec::parse("gf:4"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("gf:1"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("real"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  const Field gf5(FieldSpec::gf(5));
  CHECK(gf5.add(gf5.from_int(2), gf5.from_int(4)) == gf5.from_int(1));
  CHECK(gf5.inv(gf5.from_int(2)) == gf5.from_int(3));
  CHECK(gf5.from_int(-1) == gf5.from_int(4));
  CHECK(gf5.residue(gf5.from_int(7)) == 2);
  CHECK_THROWS_AS(gf5.inv(gf5.zero()), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const Field q(FieldSpec::rationals());
  const Scalar half = q.parse("1/2");
  const Scalar third = q.parse("1/3");
  CHECK(q.to_string(q.add(half, third)) == "5/6");
  CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
  CHECK(q.mul(half, q.from_int(2)) == q.one());
  CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
  CHECK_THROWS_AS(q.parse("1/0"), std::invalid_argument);
}

TEST_CASE("fraction reduction into prime fields") {
  const Field gf7(FieldSpec::gf(7));
  // 3/2 = 3 * inv(2) = 3 * 4 = 12 = 5 (mod 7)
  CHECK(gf7.parse("3/2") == gf7.from_int(5));
  CHECK_THROWS_AS(gf7.parse("1/7"), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  for (const char* name : {"gf:2", "gf:101", "q"}) {
    CAPTURE(name);
    const Field f(FieldSpec::parse(name));
    Rng rng(7);
    for (int s = 0; s < 1000; ++s) {
      const Scalar a = random_scalar(rng, f);
      const Scalar b = random_scalar(rng, f);
      const Scalar c = random_scalar(rng, f);
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(a, f.neg(a)).is_zero());
      REQUIRE(f.add(a, f.zero()) == a);
      REQUIRE(f.mul(a, f.one()) == a);
      if (!a.is_zero()) {
        REQUIRE(f.mul(a, f.inv(a)) == f.one());
      }
    }
  }
}

TEST_CASE("prime backends agree with the rationals on integer expressions") {
  const Field q(FieldSpec::rationals());
  for (const std::int64_t p : {2, 101}) {
    CAPTURE(p);
    const Field gf(FieldSpec::gf(p));
    Rng rng(11);
    for (int s = 0; s < 500; ++s) {
      const std::int64_t a = rng.uniform_int(-50, 50);
      const std::int64_t b = rng.uniform_int(-50, 50);
      const std::int64_t c = rng.uniform_int(-50, 50);
      // (a*b - c) * (a + c) + b, evaluated both ways
      const Scalar exact = q.add(
          q.mul(q.sub(q.mul(q.from_int(a), q.from_int(b)), q.from_int(c)),
                q.add(q.from_int(a), q.from_int(c))),
          q.from_int(b));
      const Scalar reduced = gf.from_rational(q.rational(exact));
      const Scalar direct = gf.add(
          gf.mul(gf.sub(gf.mul(gf.from_int(a), gf.from_int(b)), gf.from_int(c)),
                 gf.add(gf.from_int(a), gf.from_int(c))),
          gf.from_int(b));
      REQUIRE(reduced == direct);
    }
  }
}
