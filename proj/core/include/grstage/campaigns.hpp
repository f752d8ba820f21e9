#pragma once

#include "grstage/exterior.hpp"
#include "grstage/field.hpp"
#include "grstage/ideals.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grstage {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CampaignReport {
  std::string command;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string details = "");
  bool passed() const;
};

/// GF(2), GF(101) and the rationals: the fields every sign-sensitive path
/// gets exercised over.
std::vector<FieldSpec> default_field_trio();

/// Big-cell coordinates as signed minors against direct pairing: every
/// stage with n+p <= max_symbols, every index split, `samples` random
/// parameter matrices per field. Exact equality.
CampaignReport big_cell_identity_campaign(int max_symbols, int samples,
                                          std::span<const FieldSpec> fields,
                                          std::uint64_t seed);

/// Pairwise non-divisibility of the antichain elements up to max_n (both
/// directions), plus quasi-order and signed-action axiom suites.
CampaignReport antichain_campaign(int max_n, std::optional<Stage> stage,
                                  int axiom_samples, std::uint64_t seed);

/// Strict-chain certificates at the stage over each field, both methods,
/// with certificate re-verification.
CampaignReport chain_campaign(int l_max, Stage stage,
                              std::span<const FieldSpec> fields);

/// Square commutativity of the two cone maps on random points, exhaustive
/// GF(2) surjectivity onto the (1,2) cone, and the order-preservation
/// sweeps for the two basis embeddings.
CampaignReport diagram_campaign(Stage max_stage, int samples,
                                std::span<const FieldSpec> fields,
                                std::uint64_t seed);

/// Quadratic-relation soundness on random matrix points plus the
/// exhaustive GF(2) decomposability cross-check at a 4-symbol stage.
CampaignReport plucker_campaign(int samples, std::span<const FieldSpec> fields,
                                std::uint64_t seed);

/// Support-matroid correspondence for the two cone maps on random points;
/// loop/coloop cases are reported as skips.
CampaignReport matroid_campaign(int samples, std::span<const FieldSpec> fields,
                                Stage max_stage, std::uint64_t seed);

}  // namespace grstage
