#include "grstage/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace grstage {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) {  // full 64-bit span
    return static_cast<std::int64_t>(next());
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<std::int64_t>(draw % range);
}

Rng Rng::fork() { return Rng(next()); }

Scalar random_scalar(Rng& rng, const Field& field) {
  if (field.is_prime()) {
    return field.from_int(rng.uniform_int(0, field.characteristic() - 1));
  }
  return field.from_int(rng.uniform_int(-9, 9));
}

Scalar random_nonzero_scalar(Rng& rng, const Field& field) {
  Scalar s = random_scalar(rng, field);
  while (s.is_zero()) s = random_scalar(rng, field);
  return s;
}

ScalarMatrix random_matrix(Rng& rng, const Stage& stage, const Field& field) {
  ScalarMatrix m(stage.positives, stage.symbol_count(), field);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      m.at(r, c) = random_scalar(rng, field);
    }
  }
  return m;
}

AlphaMatrix random_alpha(Rng& rng, const Stage& stage, const Field& field) {
  AlphaMatrix alpha(stage, field);
  for (int i = 1; i <= stage.positives; ++i) {
    for (int j = 1; j <= stage.negatives; ++j) {
      alpha.at(i, j) = random_scalar(rng, field);
    }
  }
  return alpha;
}

ConePoint random_cone_point(Rng& rng, const Stage& stage, const Field& field) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ConePoint p = pluecker_from_matrix(random_matrix(rng, stage, field), stage);
    if (!p.is_zero()) return p;
  }
  throw std::runtime_error("could not sample a nonzero cone point");
}

Permutation random_stage_permutation(Rng& rng, const Stage& stage) {
  std::vector<SignedIndex> symbols = stage.symbols();
  std::sort(symbols.begin(), symbols.end());
  std::vector<SignedIndex> images = symbols;
  // Fisher-Yates with the portable bounded draw.
  for (std::size_t k = images.size(); k > 1; --k) {
    const std::size_t j = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(k) - 1));
    std::swap(images[k - 1], images[j]);
  }
  std::map<SignedIndex, SignedIndex> mapping;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    mapping[symbols[k]] = images[k];
  }
  return Permutation::from_mapping(std::move(mapping));
}

Monomial random_monomial(Rng& rng, const Stage& stage, int degree,
                         int factor_degree) {
  if (factor_degree < 0 || factor_degree > stage.symbol_count()) {
    throw std::invalid_argument("factor degree out of range");
  }
  std::vector<SignedIndex> symbols = stage.symbols();
  std::sort(symbols.begin(), symbols.end());
  std::vector<WedgeIndex> factors;
  factors.reserve(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) {
    std::vector<SignedIndex> pool = symbols;
    std::vector<SignedIndex> chosen;
    for (int t = 0; t < factor_degree; ++t) {
      const std::size_t at = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1));
      chosen.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    factors.push_back(WedgeIndex::from_set(chosen));
  }
  return Monomial(stage, std::move(factors));
}

}  // namespace grstage
