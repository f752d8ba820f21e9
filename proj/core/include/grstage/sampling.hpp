#pragma once

#include "grstage/exterior.hpp"
#include "grstage/field.hpp"
#include "grstage/grassmann.hpp"
#include "grstage/polynomial.hpp"
#include "grstage/symmetry.hpp"

#include <cstdint>
#include <random>

namespace grstage {

/// Deterministic cross-platform randomness: std::mt19937_64 (fully
/// specified by the standard) with rejection sampling for bounded draws.
/// Identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi], inclusive; unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Derives an independent deterministic substream.
  Rng fork();

 private:
  std::mt19937_64 engine_;
};

/// Prime fields draw uniform residues; the rationals draw integers in
/// [-9, 9] (exact and bounded for determinant work).
Scalar random_scalar(Rng& rng, const Field& field);
Scalar random_nonzero_scalar(Rng& rng, const Field& field);

ScalarMatrix random_matrix(Rng& rng, const Stage& stage, const Field& field);
AlphaMatrix random_alpha(Rng& rng, const Stage& stage, const Field& field);

/// Plücker image of a random matrix; resamples until nonzero.
ConePoint random_cone_point(Rng& rng, const Stage& stage, const Field& field);

/// Uniform random permutation of the stage symbols.
Permutation random_stage_permutation(Rng& rng, const Stage& stage);

/// Random monomial with `degree` factors of wedge degree `factor_degree`.
Monomial random_monomial(Rng& rng, const Stage& stage, int degree,
                         int factor_degree);

}  // namespace grstage
