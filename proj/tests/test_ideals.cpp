#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstage/ideals.hpp"
#include "grstage/sampling.hpp"

#include <vector>

using namespace grstage;

namespace {

const Field kQ(FieldSpec::rationals());
const Field kGF2(FieldSpec::gf(2));
const Field kGF101(FieldSpec::gf(101));

WedgeIndex key(std::vector<SignedIndex> labels) {
  return WedgeIndex::from_set(labels);
}

Monomial mono(const Stage& stage, std::vector<std::vector<SignedIndex>> sets) {
  std::vector<WedgeIndex> factors;
  for (auto& s : sets) factors.push_back(key(std::move(s)));
  return Monomial(stage, std::move(factors));
}

// Test-only symbolic expansion oracle: the coordinate of the big-cell
// wedge at a key, as the full symbolic determinant of the evaluation
// matrix (rows = shifted covectors, columns = the key's labels).
AlphaPolynomial symbolic_coordinate(const WedgeIndex& k, const Stage& stage,
                                    const Field& field) {
  const int p = stage.positives;
  std::vector<std::vector<AlphaPolynomial>> eval(
      static_cast<std::size_t>(p),
      std::vector<AlphaPolynomial>(k.labels().size(), AlphaPolynomial(field)));
  for (int a = 1; a <= p; ++a) {
    for (std::size_t b = 0; b < k.labels().size(); ++b) {
      const SignedIndex label = k.labels()[b];
      if (label > 0) {
        if (label == a) {
          eval[static_cast<std::size_t>(a - 1)][b] =
              AlphaPolynomial::constant(field.one(), field);
        }
      } else {
        eval[static_cast<std::size_t>(a - 1)][b] =
            AlphaPolynomial::variable(AlphaVar{a, -label}, field);
      }
    }
  }
  // Laplace expansion along the first row.
  const std::function<AlphaPolynomial(std::vector<int>, std::vector<int>)>
      laplace = [&](std::vector<int> rows,
                    std::vector<int> cols) -> AlphaPolynomial {
    if (rows.empty()) return AlphaPolynomial::constant(field.one(), field);
    AlphaPolynomial acc(field);
    const int row = rows.front();
    const std::vector<int> rest_rows(rows.begin() + 1, rows.end());
    for (std::size_t t = 0; t < cols.size(); ++t) {
      std::vector<int> rest_cols;
      for (std::size_t u = 0; u < cols.size(); ++u) {
        if (u != t) rest_cols.push_back(cols[u]);
      }
      AlphaPolynomial term =
          eval[static_cast<std::size_t>(row)]
              [static_cast<std::size_t>(cols[t])]
                  .times(laplace(rest_rows, rest_cols));
      if (t % 2 == 1) term = term.scaled(field.from_int(-1));
      acc = acc.plus(term);
    }
    return acc;
  };
  std::vector<int> rows, cols;
  for (int a = 0; a < p; ++a) {
    rows.push_back(a);
    cols.push_back(a);
  }
  return laplace(rows, cols);
}

}  // namespace

TEST_CASE("degree-2 space dimensions") {
  CHECK(Degree2Space(Stage{2, 2}).dimension() == 21);   // C(7,2) over 6 vars
  CHECK(Degree2Space(Stage{3, 5}).dimension() == 1596);  // C(57,2)
}

TEST_CASE("degree-2 rows") {
  const Stage stage{2, 2};
  const Degree2Space space(stage);

  const std::vector<Polynomial> none;
  CHECK(degree2_matrix(none, space).empty());

  const Monomial m = mono(stage, {{1, 2}, {-1, 1}});
  const auto row =
      space.row_of(Polynomial::term(m, kQ.one(), kQ));
  REQUIRE(row.size() == 1);
  CHECK(row.front().first == space.index_of(m));
  CHECK(row.front().second == kQ.one());

  const auto relations = pluecker_relations(stage, kQ);
  REQUIRE_FALSE(relations.empty());
  const auto rel_row = space.row_of(relations.front());
  CHECK(rel_row.size() == relations.front().terms().size());

  CHECK_THROWS(space.row_of(Polynomial::term(mono(stage, {{1, 2}}),
                                             kQ.one(), kQ)));
}

TEST_CASE("generator counts at the chain stage") {
  const Stage stage{3, 5};
  const auto gens3 = stage_generators(3, stage);
  CHECK(gens3.size() == 840);
  const auto gens4 = stage_generators(4, stage);
  CHECK(gens4.size() == 840 + 280);
  // Distinct unsigned monomials, term-sorted.
  for (std::size_t k = 1; k < gens4.size(); ++k) {
    CHECK(Monomial::term_compare(gens4[k - 1], gens4[k]) < 0);
  }
}

TEST_CASE("membership certificates at a small stage") {
  const Stage stage{2, 3};
  const Monomial e3 = antichain_element(3, stage);

  const MembershipCertificate cert = membership_degree2(e3, 3, stage, kQ);
  CHECK(cert.in);
  CHECK(cert.adjoined_rank == cert.span_rank);
  REQUIRE(cert.combination.size() == 1);
  CHECK(cert.combination.front().second == "1");
  CHECK(recheck_membership(cert, Polynomial::term(e3, kQ.one(), kQ), 3, stage,
                           kQ));

  // A quadratic relation itself lies in every step of the chain.
  const auto relations = pluecker_relations(stage, kQ);
  REQUIRE_FALSE(relations.empty());
  const MembershipCertificate rel_cert =
      membership_degree2(relations.front(), 3, stage, kQ);
  CHECK(rel_cert.in);
  CHECK(recheck_membership(rel_cert, relations.front(), 3, stage, kQ));
}

TEST_CASE("chain instance: the fourth element enters exactly at step four") {
  const Stage stage{3, 5};
  const Monomial e4 = antichain_element(4, stage);
  for (const Field* f : {&kGF2, &kGF101}) {
    CAPTURE(f->spec().to_string());
    const MembershipCertificate excluded = membership_degree2(e4, 3, stage, *f);
    CHECK_FALSE(excluded.in);
    CHECK(excluded.adjoined_rank == excluded.span_rank + 1);

    const MembershipCertificate included = membership_degree2(e4, 4, stage, *f);
    CHECK(included.in);
    CHECK(recheck_membership(included, Polynomial::term(e4, f->one(), *f), 4,
                             stage, *f));
  }
}

TEST_CASE("membership is monotone in the step") {
  const Stage stage{3, 4};
  const Monomial e3 = antichain_element(3, stage);
  CHECK(membership_degree2(e3, 3, stage, kGF2).in);
  CHECK(membership_degree2(e3, 4, stage, kGF2).in);
}

TEST_CASE("big-cell restriction examples") {
  {
    const Stage stage{2, 3};
    const AlphaPolynomial r =
        big_cell_restriction(mono(stage, {{1, 2, 3}}), stage, kQ);
    CHECK(r == AlphaPolynomial::constant(kQ.one(), kQ));
  }
  {
    const Stage stage{1, 2};
    const AlphaPolynomial r =
        big_cell_restriction(mono(stage, {{-1, 2}}), stage, kQ);
    CHECK(r == AlphaPolynomial::variable(AlphaVar{1, 1}, kQ));
  }
}

TEST_CASE("big-cell restriction agrees with full symbolic expansion") {
  for (const Stage stage : {Stage{1, 2}, Stage{2, 2}, Stage{2, 3}}) {
    for (const WedgeIndex& k : basis_keys(stage, stage.positives)) {
      const AlphaPolynomial via_minor =
          big_cell_restriction(Monomial(stage, {k}), stage, kQ);
      const AlphaPolynomial via_expansion = symbolic_coordinate(k, stage, kQ);
      REQUIRE(via_minor == via_expansion);
    }
  }
}

TEST_CASE("big-cell restriction is multiplicative") {
  const Stage stage{2, 3};
  Rng rng(89);
  for (int s = 0; s < 40; ++s) {
    const Monomial m1 = random_monomial(rng, stage, 1, stage.positives);
    const Monomial m2 = random_monomial(rng, stage, 1, stage.positives);
    CHECK(big_cell_restriction(m1.times(m2), stage, kQ) ==
          big_cell_restriction(m1, stage, kQ)
              .times(big_cell_restriction(m2, stage, kQ)));
  }
}

TEST_CASE("big-cell restriction matches numeric evaluation") {
  const Stage stage{2, 3};
  Rng rng(97);
  for (int s = 0; s < 30; ++s) {
    const Monomial m = random_monomial(rng, stage, 2, stage.positives);
    const AlphaMatrix alpha = random_alpha(rng, stage, kGF101);
    const AlphaPolynomial symbolic = big_cell_restriction(m, stage, kGF101);
    const ConePoint point = big_cell_point(alpha);
    const Scalar direct = Polynomial::term(m, kGF101.one(), kGF101)
                              .evaluate(point.element().coeffs());
    REQUIRE(symbolic.evaluate(alpha) == direct);
  }
}

TEST_CASE("quadratic relations restrict to zero on the big cell") {
  for (const Stage stage : {Stage{2, 2}, Stage{2, 3}}) {
    for (const Polynomial& rel : pluecker_relations(stage, kQ)) {
      CHECK(big_cell_restriction(rel).is_zero());
    }
  }
}

TEST_CASE("the two membership methods agree on random targets") {
  const Stage stage{2, 3};
  Rng rng(101);
  for (int s = 0; s < 50; ++s) {
    const Monomial target = random_monomial(rng, stage, 2, stage.positives);
    for (const Field* f : {&kGF2, &kQ}) {
      const MembershipCertificate direct =
          membership_degree2(target, 3, stage, *f);
      const BigCellVerdict restricted =
          membership_via_bigcell(target, 3, stage, *f);
      REQUIRE(direct.in == restricted.in);
    }
  }
}

TEST_CASE("chain report") {
  const Stage stage{3, 5};
  const ChainReport vacuous = chain_report(3, stage, kGF2);
  CHECK(vacuous.entries.empty());
  CHECK(vacuous.ok());

  const ChainReport report = chain_report(4, stage, kGF2);
  REQUIRE(report.entries.size() == 1);
  const ChainEntry& entry = report.entries.front();
  CHECK(entry.ell == 4);
  CHECK(entry.in_own.in);
  CHECK_FALSE(entry.not_in_prev.in);
  CHECK(entry.not_in_prev.adjoined_rank == entry.not_in_prev.span_rank + 1);
  CHECK(entry.methods_agree);
  CHECK(report.ok());
  CHECK(report.to_json().find("\"verdict\":\"pass\"") != std::string::npos);
}

TEST_CASE("chain verdicts are field independent") {
  // The rational run exercises exact fraction arithmetic end to end.
  const Stage stage{3, 5};
  const Monomial e4 = antichain_element(4, stage);
  const MembershipCertificate rational_excluded =
      membership_degree2(e4, 3, stage, kQ);
  CHECK_FALSE(rational_excluded.in);
  const MembershipCertificate gf2_excluded =
      membership_degree2(e4, 3, stage, kGF2);
  const MembershipCertificate gf101_excluded =
      membership_degree2(e4, 3, stage, kGF101);
  CHECK(rational_excluded.in == gf2_excluded.in);
  CHECK(rational_excluded.in == gf101_excluded.in);

  const MembershipCertificate rational_included =
      membership_degree2(e4, 4, stage, kQ);
  CHECK(rational_included.in);
  CHECK(recheck_membership(rational_included,
                           Polynomial::term(e4, kQ.one(), kQ), 4, stage, kQ));
}

TEST_CASE("synthetic in-targets are found and re-verified") {
  const Stage stage{2, 3};
  Rng rng(103);
  const auto gens = stage_generators(3, stage);
  const auto rels = pluecker_relations(stage, kGF101);
  for (int s = 0; s < 10; ++s) {
    Polynomial target = Polynomial::zero(stage, kGF101);
    for (int t = 0; t < 3; ++t) {
      const auto& g = gens[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(gens.size()) - 1))];
      target = target.plus(
          Polynomial::term(g, random_scalar(rng, kGF101), kGF101));
    }
    if (!rels.empty()) {
      const auto& rel = rels[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(rels.size()) - 1))];
      target = target.plus(rel.scaled(random_scalar(rng, kGF101)));
    }
    if (target.is_zero()) continue;
    const MembershipCertificate cert =
        membership_degree2(target, 3, stage, kGF101);
    REQUIRE(cert.in);
    REQUIRE(recheck_membership(cert, target, 3, stage, kGF101));
  }
}
