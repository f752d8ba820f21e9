#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstage/matroid.hpp"
#include "grstage/sampling.hpp"
#include "grstage/serialize.hpp"

#include <vector>

using namespace grstage;

namespace {

const Field kQ(FieldSpec::rationals());
const Field kGF2(FieldSpec::gf(2));
const Field kGF3(FieldSpec::gf(3));

WedgeIndex key(std::vector<SignedIndex> labels) {
  return WedgeIndex::from_set(labels);
}

Matroid uniform(int rank, std::vector<SignedIndex> ground) {
  std::sort(ground.begin(), ground.end());
  std::set<Matroid::Basis> bases;
  std::vector<int> pick(static_cast<std::size_t>(rank));
  const int n = static_cast<int>(ground.size());
  for (int i = 0; i < rank; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    Matroid::Basis b;
    for (const int k : pick) b.push_back(ground[static_cast<std::size_t>(k)]);
    bases.insert(b);
    int i = rank - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - rank + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < rank; ++t) {
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return Matroid(std::move(ground), rank, std::move(bases));
}

}  // namespace

TEST_CASE("support matroid of the base point") {
  const Stage stage{1, 2};
  AlphaMatrix zero_alpha(stage, kQ);
  const auto m = matroid_of(big_cell_point(zero_alpha));
  REQUIRE(m.has_value());
  CHECK(m->rank() == 2);
  CHECK(m->bases() == std::set<Matroid::Basis>{{1, 2}});
  CHECK(m->is_loop(-1));
  CHECK(m->is_coloop(1));
  CHECK(m->is_coloop(2));

  CHECK_FALSE(matroid_of(ConePoint::zero(stage, kQ)).has_value());
}

TEST_CASE("support matroid of a generic big-cell point is uniform") {
  const Stage stage{1, 2};
  AlphaMatrix alpha(stage, kGF2);
  alpha.at(1, 1) = kGF2.one();
  alpha.at(2, 1) = kGF2.one();
  const auto m = matroid_of(big_cell_point(alpha));
  REQUIRE(m.has_value());
  CHECK(*m == uniform(2, {-1, 1, 2}));

  // Same plane from an explicit matrix (columns in mu order: 1, -1, 2).
  ScalarMatrix mat(2, 3, kGF2);
  mat.at(0, 1) = kGF2.one();
  mat.at(1, 0) = kGF2.one();
  mat.at(0, 2) = kGF2.one();
  mat.at(1, 2) = kGF2.one();
  const auto m2 = matroid_of(pluecker_from_matrix(mat, stage));
  REQUIRE(m2.has_value());
  CHECK(*m2 == uniform(2, {-1, 1, 2}));
}

TEST_CASE("deletion") {
  const Matroid u23 = uniform(2, {1, 2, 3});
  const auto del = delete_element(u23, 3);
  REQUIRE(del.has_value());
  CHECK(*del == uniform(2, {1, 2}));

  // Deleting a loop keeps the bases, shrinks the ground set.
  const Matroid with_loop(std::vector<SignedIndex>{-1, 1, 2}, 2,
                          std::set<Matroid::Basis>{{1, 2}});
  const auto no_loop = delete_element(with_loop, -1);
  REQUIRE(no_loop.has_value());
  CHECK(no_loop->bases() == with_loop.bases());
  CHECK(no_loop->ground() == std::vector<SignedIndex>{1, 2});

  // Deleting a coloop is refused.
  CHECK_FALSE(delete_element(with_loop, 1).has_value());
}

TEST_CASE("contraction") {
  const Matroid u23 = uniform(2, {1, 2, 3});
  const auto con = contract_element(u23, 1);
  REQUIRE(con.has_value());
  CHECK(*con == uniform(1, {2, 3}));

  const Matroid with_loop(std::vector<SignedIndex>{-1, 1, 2}, 2,
                          std::set<Matroid::Basis>{{1, 2}});
  const auto coloop_contracted = contract_element(with_loop, 2);
  REQUIRE(coloop_contracted.has_value());
  CHECK(coloop_contracted->bases() == std::set<Matroid::Basis>{{1}});

  CHECK_FALSE(contract_element(with_loop, -1).has_value());
}

TEST_CASE("deletion and contraction commute") {
  Rng rng(7);
  const Stage stage{2, 3};
  for (int s = 0; s < 40; ++s) {
    const auto m = matroid_of(random_cone_point(rng, stage, kGF3));
    REQUIRE(m.has_value());
    const auto& ground = m->ground();
    for (const SignedIndex e : ground) {
      for (const SignedIndex f : ground) {
        if (e == f) continue;
        if (m->is_loop(e) || m->is_coloop(e)) continue;
        if (m->is_loop(f) || m->is_coloop(f)) continue;
        const auto de = delete_element(*m, e);
        const auto cf = contract_element(*m, f);
        if (!de || !cf) continue;
        if (de->is_loop(f) || cf->is_coloop(e)) continue;
        const auto path1 = contract_element(*de, f);
        const auto path2 = delete_element(*cf, e);
        if (path1 && path2) {
          REQUIRE(*path1 == *path2);
        }
      }
    }
  }
}

TEST_CASE("support matroids satisfy basis exchange") {
  Rng rng(11);
  for (const Field* f : {&kGF2, &kGF3}) {
    for (const Stage stage : {Stage{2, 2}, Stage{3, 4}}) {
      for (int s = 0; s < 25; ++s) {
        const auto m = matroid_of(random_cone_point(rng, stage, *f));
        REQUIRE(m.has_value());
        REQUIRE(m->check_basis_exchange());
      }
    }
  }
}

TEST_CASE("support is scaling invariant") {
  Rng rng(13);
  const Stage stage{2, 3};
  for (int s = 0; s < 20; ++s) {
    const ConePoint p = random_cone_point(rng, stage, kGF3);
    const Scalar t = random_nonzero_scalar(rng, kGF3);
    CHECK(matroid_of(p) == matroid_of(p.scaled(t)));
  }
}

TEST_CASE("minor testing") {
  const Matroid u23 = uniform(2, {1, 2, 3});
  const Matroid u12 = uniform(1, {1, 2});
  const Matroid u24 = uniform(2, {1, 2, 3, 4});

  const auto self = is_minor(u23, u23);
  REQUIRE(self.has_value());
  CHECK(self->steps.empty());

  const auto contraction_minor = is_minor(u12, u23);
  REQUIRE(contraction_minor.has_value());
  CHECK(contraction_minor->steps.size() == 1);
  CHECK(contraction_minor->steps.front().op == MinorStep::Op::Contract);

  CHECK_FALSE(is_minor(u24, u23).has_value());
}

TEST_CASE("minor witness survives a relabeling") {
  const Matroid u23 = uniform(2, {1, 2, 3});
  const Matroid relabeled = uniform(1, {-5, 7});
  const auto w = is_minor(relabeled, u23);
  REQUIRE(w.has_value());
  CHECK(w->relabeling.size() == 2);
}

TEST_CASE("matroid json round trip") {
  const Matroid u23 = uniform(2, {-1, 1, 2});
  const Matroid parsed = matroid_from_json(u23.to_json());
  CHECK(parsed == u23);
}

TEST_CASE("correspondence on generic points") {
  Rng rng(17);
  const Stage stage{2, 3};
  for (int s = 0; s < 30; ++s) {
    const ConePoint p = random_cone_point(rng, stage, kGF3);
    const CorrespondenceReport r = correspondence_check(p);
    REQUIRE(r.ok());
    CHECK(r.contraction.status != CorrespondenceCase::Status::NotApplicable);
    CHECK(r.deletion.status != CorrespondenceCase::Status::NotApplicable);
  }
}

TEST_CASE("correspondence skips the loop case with a reason") {
  const Stage stage{2, 2};
  // Column of the top label (symbol 2) is zero: 2 is a loop.
  ScalarMatrix m(2, 4, kQ);
  m.at(0, 0) = kQ.one();  // column of 1
  m.at(1, 1) = kQ.one();  // column of -1
  const ConePoint p = pluecker_from_matrix(m, stage);
  REQUIRE_FALSE(p.is_zero());
  const CorrespondenceReport r = correspondence_check(p);
  CHECK(r.contraction.status == CorrespondenceCase::Status::SkippedLoop);
  CHECK_FALSE(r.contraction.detail.empty());
  CHECK(r.ok());
}

TEST_CASE("correspondence skips the coloop case with a reason") {
  const Stage stage{2, 2};
  // Symbol -2 carries a pivot no other column can replace: a coloop.
  ScalarMatrix m(2, 4, kQ);
  // Columns in mu order: 1, -1, 2, -2.
  m.at(0, 3) = kQ.one();  // row 0 lives only on -2
  m.at(1, 0) = kQ.one();  // row 1 on 1
  m.at(1, 2) = kQ.one();  // ... and 2
  const ConePoint p = pluecker_from_matrix(m, stage);
  REQUIRE_FALSE(p.is_zero());
  const CorrespondenceReport r = correspondence_check(p);
  CHECK(r.deletion.status == CorrespondenceCase::Status::SkippedColoop);
  CHECK(r.ok());
}
