#include "grstage/serialize.hpp"

#include "grstage/ideals.hpp"
#include "grstage/symmetry.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grstage {

namespace {

using Json = nlohmann::ordered_json;

Json element_terms(const ExteriorElement& element) {
  Json out = Json::array();
  for (const auto& [key, value] : element.coeffs()) {
    Json entry;
    entry["indexList"] = key.labels();
    entry["coeff"] = element.field().to_string(value);
    out.push_back(std::move(entry));
  }
  return out;
}

Json witness_json(const std::optional<DivisionWitness>& witness) {
  if (!witness) return nullptr;
  Json sigma = Json::array();
  for (const auto& [from, to] : witness->sigma.mapping()) {
    sigma.push_back(Json::array({from, to}));
  }
  Json out;
  out["sigma"] = std::move(sigma);
  out["cofactor"] = witness->cofactor.to_string();
  return out;
}

Json stage_json(const Stage& stage) {
  return Json::array({stage.negatives, stage.positives});
}

}  // namespace

std::string element_to_json(const ExteriorElement& element) {
  return element_terms(element).dump();
}

std::string cone_point_to_json(const ConePoint& point) {
  Json out = Json::array();
  for (const auto& [key, value] : point.element().coeffs()) {
    Json entry;
    entry["set"] = key.labels();
    entry["value"] = point.field().to_string(value);
    out.push_back(std::move(entry));
  }
  return out.dump();
}

MatrixInput matrix_from_csv(std::string_view text, const Field& field) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<Scalar> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto begin = cell.find_first_not_of(" \t\r");
      const auto end = cell.find_last_not_of(" \t\r");
      if (begin == std::string::npos) {
        throw std::invalid_argument("empty matrix cell");
      }
      row.push_back(field.parse(cell.substr(begin, end - begin + 1)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  const int cols = static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
  }
  ScalarMatrix m(static_cast<int>(rows.size()), cols, field);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return MatrixInput{std::nullopt, std::move(m)};
}

MatrixInput matrix_from_json(std::string_view text, const Field& field) {
  const Json doc = Json::parse(text);
  std::optional<Stage> stage;
  if (doc.contains("stage")) {
    const auto& s = doc.at("stage");
    stage = Stage{s.at(0).get<int>(), s.at(1).get<int>()};
  }
  const auto& rows = doc.at("rows");
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("rows must be a nonempty array");
  }
  const int cols = static_cast<int>(rows.at(0).size());
  ScalarMatrix m(static_cast<int>(rows.size()), cols, field);
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = rows.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < m.cols(); ++c) {
      const auto& cell = row.at(static_cast<std::size_t>(c));
      m.at(r, c) = cell.is_string() ? field.parse(cell.get<std::string>())
                                    : field.from_int(cell.get<std::int64_t>());
    }
  }
  return MatrixInput{stage, std::move(m)};
}

Matroid matroid_from_json(std::string_view text) {
  const Json doc = Json::parse(text);
  std::vector<SignedIndex> ground;
  for (const auto& g : doc.at("ground")) ground.push_back(g.get<SignedIndex>());
  std::set<Matroid::Basis> bases;
  for (const auto& b : doc.at("bases")) {
    Matroid::Basis basis;
    for (const auto& e : b) basis.push_back(e.get<SignedIndex>());
    std::sort(basis.begin(), basis.end());
    bases.insert(std::move(basis));
  }
  return Matroid(std::move(ground), doc.at("rank").get<int>(),
                 std::move(bases));
}

std::string Matroid::to_json() const {
  Json out;
  out["ground"] = ground_;
  out["rank"] = rank_;
  Json basis_list = Json::array();
  for (const Basis& b : bases_) basis_list.push_back(b);
  out["bases"] = std::move(basis_list);
  return out.dump();
}

std::string AntichainReport::to_json() const {
  Json out;
  Json pair_list = Json::array();
  for (const AntichainPairResult& p : pairs) {
    Json entry;
    entry["n"] = p.n;
    entry["m"] = p.m;
    entry["stage"] = stage_json(p.stage);
    entry["forwardWitness"] = witness_json(p.forward);
    entry["backwardWitness"] = witness_json(p.backward);
    pair_list.push_back(std::move(entry));
  }
  out["pairs"] = std::move(pair_list);
  out["verdict"] = all_incomparable() ? "pass" : "fail";
  return out.dump();
}

std::string MembershipCertificate::to_json() const {
  Json out;
  out["verdict"] = in ? "in" : "notIn";
  out["target"] = target;
  out["spanRank"] = span_rank;
  out["adjoinedRank"] = adjoined_rank;
  out["orbitGenerators"] = orbit_generator_count;
  out["relations"] = relation_count;
  if (in) {
    Json combo = Json::array();
    for (const auto& [idx, coeff] : combination) {
      Json entry;
      entry["generator"] = idx;
      entry["coeff"] = coeff;
      combo.push_back(std::move(entry));
    }
    out["combination"] = std::move(combo);
  }
  return out.dump();
}

std::string ChainReport::to_json() const {
  Json out;
  out["stage"] = stage_json(stage);
  out["field"] = field.to_string();
  out["lMax"] = l_max;
  Json entry_list = Json::array();
  for (const ChainEntry& e : entries) {
    Json entry;
    entry["ell"] = e.ell;
    entry["inOwn"] = Json::parse(e.in_own.to_json());
    entry["notInPrev"] = Json::parse(e.not_in_prev.to_json());
    entry["bigcellOwn"] =
        Json{{"verdict", e.bigcell_own.in ? "in" : "notIn"},
             {"spanRank", e.bigcell_own.span_rank},
             {"adjoinedRank", e.bigcell_own.adjoined_rank}};
    entry["bigcellPrev"] =
        Json{{"verdict", e.bigcell_prev.in ? "in" : "notIn"},
             {"spanRank", e.bigcell_prev.span_rank},
             {"adjoinedRank", e.bigcell_prev.adjoined_rank}};
    entry["methodsAgree"] = e.methods_agree;
    entry_list.push_back(std::move(entry));
  }
  out["entries"] = std::move(entry_list);
  out["verdict"] = ok() ? "pass" : "fail";
  return out.dump();
}

std::string campaign_checks_to_json(const CampaignReport& report) {
  Json out = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["verdict"] = c.pass ? "pass" : "fail";
    entry["details"] = c.details;
    out.push_back(std::move(entry));
  }
  return out.dump();
}

}  // namespace grstage
