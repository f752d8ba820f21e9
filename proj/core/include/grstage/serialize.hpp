#pragma once

#include "grstage/campaigns.hpp"
#include "grstage/exterior.hpp"
#include "grstage/grassmann.hpp"
#include "grstage/matroid.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace grstage {

/// [{"indexList": [...], "coeff": "..."}] in key order.
std::string element_to_json(const ExteriorElement& element);

/// [{"set": [...], "value": "..."}] in key order.
std::string cone_point_to_json(const ConePoint& point);

struct MatrixInput {
  std::optional<Stage> stage;  // present only in the JSON form
  ScalarMatrix matrix;
};

/// CSV: one row per line, comma-separated entries, parsed in the field.
/// Columns follow the stage symbols in mu order.
MatrixInput matrix_from_csv(std::string_view text, const Field& field);

/// {"stage": [n, p], "rows": [["...", ...], ...]}; stage optional.
MatrixInput matrix_from_json(std::string_view text, const Field& field);

Matroid matroid_from_json(std::string_view text);

/// The checks array used inside report envelopes.
std::string campaign_checks_to_json(const CampaignReport& report);

}  // namespace grstage
