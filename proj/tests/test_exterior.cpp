#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstage/exterior.hpp"
#include "grstage/linalg.hpp"
#include "grstage/sampling.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace grstage;

namespace {

const Field kQ(FieldSpec::rationals());

WedgeIndex key(std::vector<SignedIndex> labels) {
  return WedgeIndex::from_set(labels);
}

// Independent sorting-parity oracle: O(n^2) inversion count on mu values.
int parity_oracle(const std::vector<SignedIndex>& raw) {
  int inversions = 0;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a + 1; b < raw.size(); ++b) {
      if (mu(raw[a]) > mu(raw[b])) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExteriorElement basis_dual(const Stage& stage, std::vector<SignedIndex> labels,
                           const Field& f = kQ) {
  return ExteriorElement::basis(stage, Side::Dual, key(std::move(labels)), f);
}

ExteriorElement basis_primal(const Stage& stage,
                             std::vector<SignedIndex> labels,
                             const Field& f = kQ) {
  return ExteriorElement::basis(stage, Side::Primal, key(std::move(labels)), f);
}

ExteriorElement random_element(Rng& rng, const Stage& stage, int degree,
                               Side side, const Field& f) {
  ExteriorElement e(stage, degree, side, f);
  const auto keys = basis_keys(stage, degree);
  for (const WedgeIndex& k : keys) {
    if (rng.uniform_int(0, 2) == 0) e.accumulate(k, random_scalar(rng, f));
  }
  return e;
}

// Covector f as a coefficient list over the stage symbols.
ExteriorElement covector(const Stage& stage,
                         const std::map<SignedIndex, Scalar>& coeffs,
                         const Field& f = kQ) {
  ExteriorElement e(stage, 1, Side::Dual, f);
  for (const auto& [i, c] : coeffs) {
    e.set_coefficient(key({i}), c);
  }
  return e;
}

}  // namespace

TEST_CASE("mu formula") {
  CHECK(mu(-2) == 4);
  CHECK(mu(1) == 1);
  CHECK(mu(5) == 9);
  CHECK_THROWS(mu(0));
}

TEST_CASE("mu is a bijection onto 1..2e6 for |i| <= 1e6") {
  std::vector<bool> hit(2'000'001, false);
  for (SignedIndex i = 1; i <= 1'000'000; ++i) {
    for (const SignedIndex j : {i, static_cast<SignedIndex>(-i)}) {
      const std::int64_t m = mu(j);
      REQUIRE(m >= 1);
      REQUIRE(m <= 2'000'000);
      REQUIRE_FALSE(hit[static_cast<std::size_t>(m)]);
      hit[static_cast<std::size_t>(m)] = true;
    }
  }
}

TEST_CASE("wedge index comparison") {
  CHECK(WedgeIndex::compare(key({1, -1}), key({1, 2})) < 0);
  CHECK(WedgeIndex::compare(key({1, -1}), key({1, -1})) == 0);
  CHECK(WedgeIndex::compare(key({-1, 2}), key({1, -1})) > 0);
  CHECK_THROWS(WedgeIndex::compare(key({1}), key({1, 2})));
}

TEST_CASE("every finite key set has a unique minimum") {
  const Stage stage{3, 3};
  Rng rng(5);
  const auto keys = basis_keys(stage, 3);
  for (int s = 0; s < 200; ++s) {
    std::set<int> chosen;
    const int count = static_cast<int>(rng.uniform_int(1, 8));
    while (static_cast<int>(chosen.size()) < count) {
      chosen.insert(static_cast<int>(
          rng.uniform_int(0, static_cast<std::int64_t>(keys.size()) - 1)));
    }
    std::vector<WedgeIndex> sample;
    for (const int k : chosen) sample.push_back(keys[static_cast<std::size_t>(k)]);
    const auto min_it = std::min_element(
        sample.begin(), sample.end(), [](const auto& a, const auto& b) {
          return WedgeIndex::compare(a, b) < 0;
        });
    int minima = 0;
    for (const WedgeIndex& k : sample) {
      if (WedgeIndex::compare(k, *min_it) == 0) ++minima;
    }
    REQUIRE(minima == 1);
  }
}

TEST_CASE("canonicalize") {
  const std::vector<SignedIndex> sorted{1, 2};
  auto c = WedgeIndex::canonicalize(sorted);
  REQUIRE(c.has_value());
  CHECK(c->index == key({1, 2}));
  CHECK(c->sign == 1);

  const std::vector<SignedIndex> swapped{2, 1};
  c = WedgeIndex::canonicalize(swapped);
  REQUIRE(c.has_value());
  CHECK(c->index == key({1, 2}));
  CHECK(c->sign == -1);

  const std::vector<SignedIndex> repeated{1, 1};
  CHECK_FALSE(WedgeIndex::canonicalize(repeated).has_value());
}

TEST_CASE("canonicalize sign equals the inversion-count oracle") {
  Rng rng(17);
  for (int s = 0; s < 500; ++s) {
    std::vector<SignedIndex> raw;
    std::set<SignedIndex> seen;
    const int len = static_cast<int>(rng.uniform_int(1, 6));
    while (static_cast<int>(raw.size()) < len) {
      SignedIndex i = static_cast<SignedIndex>(rng.uniform_int(-5, 5));
      if (i == 0 || seen.count(i)) continue;
      seen.insert(i);
      raw.push_back(i);
    }
    const auto c = WedgeIndex::canonicalize(raw);
    REQUIRE(c.has_value());
    REQUIRE(c->sign == parity_oracle(raw));
  }
}

TEST_CASE("wedge product examples") {
  const Stage stage{1, 2};
  const auto x1 = basis_primal(stage, {1});
  const auto x2 = basis_primal(stage, {2});
  const auto xm1 = basis_primal(stage, {-1});

  CHECK(wedge(x1, x1).is_zero());

  const auto x2x1 = wedge(x2, x1);
  CHECK(x2x1.coefficient(key({1, 2})) == kQ.from_int(-1));

  // mu(1) = 1 < mu(-1) = 2, so the canonical order is (x_1, x_{-1}).
  const auto m = wedge(xm1, x1);
  CHECK(m.coefficient(key({1, -1})) == kQ.from_int(-1));
}

TEST_CASE("wedge is associative and graded-anticommutative") {
  const Stage stage{2, 3};
  Rng rng(23);
  for (const char* name : {"gf:2", "gf:101", "q"}) {
    const Field f(FieldSpec::parse(name));
    for (int s = 0; s < 170; ++s) {
      const int da = static_cast<int>(rng.uniform_int(0, 2));
      const int db = static_cast<int>(rng.uniform_int(0, 2));
      const int dc = static_cast<int>(rng.uniform_int(0, 2));
      const auto a = random_element(rng, stage, da, Side::Primal, f);
      const auto b = random_element(rng, stage, db, Side::Primal, f);
      const auto c = random_element(rng, stage, dc, Side::Primal, f);
      REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      const auto ab = wedge(a, b);
      auto ba = wedge(b, a);
      if ((da * db) % 2 == 1) ba = ba.scaled(f.from_int(-1));
      REQUIRE(ab == ba);
    }
  }
}

TEST_CASE("pairing examples") {
  const Stage stage{1, 2};
  const auto dual12 = basis_dual(stage, {1, 2});
  CHECK(pairing(dual12, basis_primal(stage, {1, 2})) == kQ.one());

  // Column swap: x_2 wedge x_1 = -X_{1,2}.
  const auto swapped = wedge(basis_primal(stage, {2}), basis_primal(stage, {1}));
  CHECK(pairing(dual12, swapped) == kQ.from_int(-1));

  // ((x_1* + x_{-1}*) ^ x_2*)(x_{-1} ^ x_2) = 1.
  const auto f1 = covector(stage, {{1, kQ.one()}, {-1, kQ.one()}});
  const auto f2 = covector(stage, {{2, kQ.one()}});
  const std::vector<ExteriorElement> covs{f1, f2};
  const auto functional = wedge_of_covectors(covs);
  const auto u = wedge(basis_primal(stage, {-1}), basis_primal(stage, {2}));
  CHECK(pairing(functional, u) == kQ.one());
}

TEST_CASE("pairing of covector wedges equals the evaluation determinant") {
  const Stage stage{2, 2};
  Rng rng(31);
  const auto symbols = stage.symbols();
  for (int s = 0; s < 100; ++s) {
    std::vector<ExteriorElement> covs;
    std::vector<std::map<SignedIndex, Scalar>> raw;
    for (int r = 0; r < 2; ++r) {
      std::map<SignedIndex, Scalar> coeffs;
      for (const SignedIndex i : symbols) {
        coeffs[i] = random_scalar(rng, kQ);
      }
      raw.push_back(coeffs);
      covs.push_back(covector(stage, coeffs));
    }
    const auto functional = wedge_of_covectors(covs);
    for (const WedgeIndex& u : basis_keys(stage, 2)) {
      std::vector<std::vector<Scalar>> eval(2, std::vector<Scalar>(2, kQ.zero()));
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          eval[a][b] = raw[static_cast<std::size_t>(a)]
                           .at(u.labels()[static_cast<std::size_t>(b)]);
        }
      }
      REQUIRE(pairing(functional, ExteriorElement::basis(stage, Side::Primal,
                                                         u, kQ)) ==
              determinant(eval, kQ));
    }
  }
}

TEST_CASE("interior product examples") {
  const Stage stage{1, 3};
  CHECK(interior(2, basis_dual(stage, {2})).coefficient(WedgeIndex{}) ==
        kQ.one());
  CHECK(interior(3, basis_dual(stage, {1, 2})).is_zero());
  const auto contracted = interior(2, basis_dual(stage, {1, 2}));
  CHECK(contracted.coefficient(key({1})) == kQ.from_int(-1));
}

TEST_CASE("interior product agrees with first-slot evaluation") {
  // <i_v w, u> == <w, x_v ^ u> for basis inputs.
  const Stage stage{2, 2};
  for (const WedgeIndex& wkey : basis_keys(stage, 2)) {
    const auto w = basis_dual(stage, wkey.labels());
    for (const SignedIndex v : stage.symbols()) {
      const auto contracted = interior(v, w);
      for (const WedgeIndex& ukey : basis_keys(stage, 1)) {
        const auto u = basis_primal(stage, ukey.labels());
        const auto lhs = pairing(contracted, u);
        const auto rhs =
            pairing(w, wedge(basis_primal(stage, {v}), u));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("interior product is a degree -1 derivation") {
  const Stage stage{2, 3};
  Rng rng(41);
  for (int s = 0; s < 120; ++s) {
    const int da = static_cast<int>(rng.uniform_int(1, 2));
    const int dc = static_cast<int>(rng.uniform_int(1, 2));
    // Products of covectors so both sides stay inside wedges of duals.
    std::vector<ExteriorElement> fa, fc;
    for (int k = 0; k < da; ++k) {
      fa.push_back(random_element(rng, stage, 1, Side::Dual, kQ));
    }
    for (int k = 0; k < dc; ++k) {
      fc.push_back(random_element(rng, stage, 1, Side::Dual, kQ));
    }
    const auto alpha = wedge_of_covectors(fa);
    const auto gamma = wedge_of_covectors(fc);
    const SignedIndex v = stage.symbols()[static_cast<std::size_t>(
        rng.uniform_int(0, stage.symbol_count() - 1))];
    const auto lhs = interior(v, wedge(alpha, gamma));
    auto rhs = wedge(interior(v, alpha), gamma);
    auto second = wedge(alpha, interior(v, gamma));
    if (da % 2 == 1) second = second.scaled(kQ.from_int(-1));
    rhs = rhs.plus(second);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("eta embeds coefficients unchanged") {
  const Stage from{1, 2};
  const auto e = basis_primal(from, {1, 2});
  const auto image = map_eta(e);
  CHECK(image.stage() == Stage{2, 2});
  CHECK(image.coefficient(key({1, 2})) == kQ.one());
  CHECK(map_eta(ExteriorElement::zero(from, 2, Side::Primal, kQ)).is_zero());
  CHECK(map_eta(basis_primal(from, {-1, 1})).coefficient(key({-1, 1})) ==
        kQ.one());
}

TEST_CASE("beta wedges the next positive label") {
  // X_{1,2} at (1,2) -> X_{1,2,3} with sign +1 (mu(3) = 5 is maximal).
  const auto b1 = map_beta(basis_primal(Stage{1, 2}, {1, 2}));
  CHECK(b1.stage() == Stage{1, 3});
  CHECK(b1.coefficient(key({1, 2, 3})) == kQ.one());

  CHECK(map_beta(ExteriorElement::zero(Stage{1, 2}, 2, Side::Primal, kQ))
            .is_zero());

  // X_{-3,1} at (3,1): appending 2 sorts before -3 (mu(2)=3 < mu(-3)=6).
  const auto b2 = map_beta(basis_primal(Stage{3, 1}, {-3, 1}));
  CHECK(b2.coefficient(key({1, 2, -3})) == kQ.from_int(-1));
}

TEST_CASE("xi drops coordinates holding the new negative label") {
  const Stage from{2, 2};
  ExteriorElement omega(from, 2, Side::Dual, kQ);
  omega.set_coefficient(key({1, 2}), kQ.one());
  omega.set_coefficient(key({-2, 1}), kQ.from_int(7));
  const auto image = map_xi(omega);
  CHECK(image.stage() == Stage{1, 2});
  CHECK(image.coefficient(key({1, 2})) == kQ.one());
  CHECK(image.coeffs().size() == 1);
  CHECK(map_xi(ExteriorElement::zero(from, 2, Side::Dual, kQ)).is_zero());
}

TEST_CASE("theta contracts the top positive label") {
  const Stage from{1, 3};
  const auto omega = basis_dual(from, {1, 2, 3});
  const auto image = map_theta(omega);
  CHECK(image.stage() == Stage{1, 2});
  CHECK(image.coefficient(key({1, 2})) == kQ.one());

  CHECK(map_theta(basis_dual(from, {-1, 1, 2})).is_zero());
}

TEST_CASE("xi is adjoint to eta exactly") {
  for (int n = 1; n <= 2; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const Stage small{n, p};
      const Stage big{n + 1, p};
      for (const WedgeIndex& wkey : basis_keys(big, p)) {
        const auto omega = basis_dual(big, wkey.labels());
        const auto xi_omega = map_xi(omega);
        for (const WedgeIndex& ukey : basis_keys(small, p)) {
          const auto u = basis_primal(small, ukey.labels());
          REQUIRE(pairing(xi_omega, u) == pairing(omega, map_eta(u)));
        }
      }
    }
  }
}

TEST_CASE("theta is adjoint to beta up to the parity constant") {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 2; ++p) {
      const Stage small{n, p};
      const Stage big{n, p + 1};
      const Scalar c_p = kQ.from_int(p % 2 == 0 ? 1 : -1);
      for (const WedgeIndex& wkey : basis_keys(big, p + 1)) {
        const auto omega = basis_dual(big, wkey.labels());
        const auto theta_omega = map_theta(omega);
        for (const WedgeIndex& ukey : basis_keys(small, p)) {
          const auto u = basis_primal(small, ukey.labels());
          const auto lhs = pairing(theta_omega, u);
          const auto rhs = kQ.mul(c_p, pairing(omega, map_beta(u)));
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("both embeddings preserve the basis well order") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const Stage stage{n, p};
      const auto keys = basis_keys(stage, p);
      const SignedIndex appended = static_cast<SignedIndex>(p + 1);
      for (const WedgeIndex& a : keys) {
        for (const WedgeIndex& b : keys) {
          const int base = WedgeIndex::compare(a, b);
          std::vector<SignedIndex> ra(a.labels());
          ra.push_back(appended);
          std::vector<SignedIndex> rb(b.labels());
          rb.push_back(appended);
          REQUIRE(WedgeIndex::compare(WedgeIndex::from_set(ra),
                                      WedgeIndex::from_set(rb)) == base);
          // The negative-label embedding fixes keys; order is untouched.
          REQUIRE(WedgeIndex::compare(a, b) == base);
        }
      }
    }
  }
}
