// verify: batch verification campaigns over the stage toolkit, with
// machine-readable reports. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include "grstage/campaigns.hpp"
#include "grstage/field.hpp"
#include "grstage/grassmann.hpp"
#include "grstage/matroid.hpp"
#include "grstage/serialize.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using namespace grstage;

constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
  std::vector<std::string> field_names;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "text";
};

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names,
                                    std::vector<FieldSpec> fallback) {
  if (names.empty()) return fallback;
  std::vector<FieldSpec> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(FieldSpec::parse(n));
  return out;
}

Stage parse_stage(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("stage must be 'n,p'");
  }
  const Stage stage{std::stoi(text.substr(0, comma)),
                    std::stoi(text.substr(comma + 1))};
  if (!stage.valid()) throw std::invalid_argument("stage must be positive");
  return stage;
}

std::string utc_timestamp() {
  char buffer[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

Json fields_json(const std::vector<FieldSpec>& fields) {
  Json out = Json::array();
  for (const FieldSpec& f : fields) out.push_back(f.to_string());
  return out;
}

int emit(const CampaignReport& report, const CommonOptions& common,
         const Json& config) {
  Json envelope;
  envelope["tool"] = "verify";
  envelope["version"] = kVersion;
  envelope["command"] = report.command;
  envelope["config"] = config;
  envelope["startedAt"] = utc_timestamp();
  envelope["checks"] = Json::parse(campaign_checks_to_json(report));
  envelope["verdict"] = report.passed() ? "pass" : "fail";

  const std::string serialized = envelope.dump(2) + "\n";
  if (!common.out.empty()) write_atomically(common.out, serialized);

  if (common.format == "json") {
    std::cout << serialized;
  } else {
    for (const CheckResult& c : report.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.details.empty()) std::cout << " — " << c.details;
      std::cout << '\n';
    }
    std::cout << (report.passed() ? "verdict: pass" : "verdict: fail") << '\n';
  }
  return report.passed() ? 0 : 1;
}

MatrixInput load_matrix(const std::string& path, const Field& field) {
  const std::string text = read_file(path);
  const bool csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
  return csv ? matrix_from_csv(text, field) : matrix_from_json(text, field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stage-wise verification of Plücker cones, equivariant "
               "divisibility and ideal chains"};
  app.require_subcommand(1);

  CommonOptions common;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--field", common.field_names,
                    "coefficient field: gf:<p> or q (repeatable)");
    cmd->add_option("--seed", common.seed, "rng seed (mt19937_64 stream)");
    cmd->add_option("--out", common.out, "write the JSON report here");
    cmd->add_option("--format", common.format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  // lemma5: signed-minor identity for big-cell coordinates.
  int max_symbols = 7;
  int lemma5_samples = 25;
  CLI::App* lemma5 = app.add_subcommand(
      "lemma5", "big-cell coordinates equal signed minors, exhaustive splits");
  lemma5->add_option("--max-symbols", max_symbols, "largest n+p to sweep");
  lemma5->add_option("--samples", lemma5_samples, "parameter draws per stage");
  add_common(lemma5);

  // antichain
  int max_n = 6;
  int axiom_samples = 500;
  std::string antichain_stage;
  CLI::App* antichain = app.add_subcommand(
      "antichain", "pairwise non-divisibility of the antichain elements");
  antichain->add_option("--max-n", max_n, "check pairs up to this index");
  antichain->add_option("--stage", antichain_stage,
                        "fixed stage 'n,p' (default: per-pair minimal stage)");
  antichain->add_option("--samples", axiom_samples,
                        "sample count for the axiom suites");
  add_common(antichain);

  // chain
  int l_max = 4;
  std::string chain_stage = "3,5";
  CLI::App* chain = app.add_subcommand(
      "chain", "strict ascending-chain certificates, both methods");
  chain->add_option("--lmax", l_max, "certify steps 4..lmax");
  chain->add_option("--stage", chain_stage, "stage 'n,p'");
  add_common(chain);

  // diagram
  std::string diagram_stage = "3,3";
  int diagram_samples = 100;
  CLI::App* diagram = app.add_subcommand(
      "diagram",
      "cone-map commutativity, surjectivity and order preservation");
  diagram->add_option("--stage", diagram_stage, "largest source stage 'n,p'");
  diagram->add_option("--samples", diagram_samples, "points per stage");
  add_common(diagram);

  // plucker
  int plucker_samples = 100;
  std::string plucker_matrix;
  std::string plucker_stage;
  CLI::App* plucker = app.add_subcommand(
      "plucker", "quadratic-relation soundness, or coordinates of one matrix");
  plucker->add_option("--samples", plucker_samples, "points per stage");
  plucker->add_option("--matrix", plucker_matrix,
                      "CSV or JSON matrix; emit its cone coordinates");
  plucker->add_option("--stage", plucker_stage, "stage 'n,p' for --matrix");
  add_common(plucker);

  // matroid
  int matroid_samples = 100;
  std::string matroid_stage = "3,4";
  std::string matroid_matrix;
  std::string matroid_json;
  std::string minor_of;
  CLI::App* matroid = app.add_subcommand(
      "matroid", "support-matroid correspondence, extraction and minor tests");
  matroid->add_option("--samples", matroid_samples, "points per field");
  matroid->add_option("--stage", matroid_stage,
                      "largest stage 'n,p' for the sweep, or the stage of "
                      "--matrix");
  matroid->add_option("--matrix", matroid_matrix,
                      "CSV or JSON matrix; emit its support matroid");
  matroid->add_option("--matroid", matroid_json,
                      "matroid JSON file for --minor-of");
  matroid->add_option("--minor-of", minor_of,
                      "matroid JSON file; test whether --matroid is a minor");
  add_common(matroid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // Every provided field name must parse, even for field-free commands.
    for (const std::string& n : common.field_names) FieldSpec::parse(n);

    if (lemma5->parsed()) {
      const auto fields = parse_fields(common.field_names, default_field_trio());
      Json config{{"maxSymbols", max_symbols},
                  {"samples", lemma5_samples},
                  {"fields", fields_json(fields)},
                  {"seed", common.seed}};
      return emit(big_cell_identity_campaign(max_symbols, lemma5_samples,
                                             fields, common.seed),
                  common, config);
    }
    if (antichain->parsed()) {
      std::optional<Stage> stage;
      if (!antichain_stage.empty()) stage = parse_stage(antichain_stage);
      Json config{{"maxN", max_n},
                  {"samples", axiom_samples},
                  {"seed", common.seed}};
      if (stage) config["stage"] = Json::array({stage->negatives, stage->positives});
      return emit(antichain_campaign(max_n, stage, axiom_samples, common.seed),
                  common, config);
    }
    if (chain->parsed()) {
      const auto fields = parse_fields(
          common.field_names, {FieldSpec::gf(2), FieldSpec::gf(101)});
      const Stage stage = parse_stage(chain_stage);
      Json config{{"lMax", l_max},
                  {"stage", Json::array({stage.negatives, stage.positives})},
                  {"fields", fields_json(fields)}};
      return emit(chain_campaign(l_max, stage, fields), common, config);
    }
    if (diagram->parsed()) {
      const auto fields = parse_fields(common.field_names, default_field_trio());
      const Stage stage = parse_stage(diagram_stage);
      Json config{{"maxStage", Json::array({stage.negatives, stage.positives})},
                  {"samples", diagram_samples},
                  {"fields", fields_json(fields)},
                  {"seed", common.seed}};
      return emit(diagram_campaign(stage, diagram_samples, fields, common.seed),
                  common, config);
    }
    if (plucker->parsed()) {
      if (!plucker_matrix.empty()) {
        const auto fields =
            parse_fields(common.field_names, {FieldSpec::rationals()});
        const Field field(fields.front());
        MatrixInput input = load_matrix(plucker_matrix, field);
        const Stage stage = !plucker_stage.empty()
                                ? parse_stage(plucker_stage)
                                : input.stage ? *input.stage
                                              : throw std::invalid_argument(
                                                    "no stage given");
        CampaignReport report;
        report.command = "plucker";
        const ConePoint point = pluecker_from_matrix(input.matrix, stage);
        report.add("coordinates computed", true, cone_point_to_json(point));
        report.add("point satisfies the quadratic relations", point.validate());
        Json config{{"matrix", plucker_matrix},
                    {"stage", Json::array({stage.negatives, stage.positives})},
                    {"field", field.spec().to_string()}};
        return emit(report, common, config);
      }
      const auto fields = parse_fields(common.field_names, default_field_trio());
      Json config{{"samples", plucker_samples},
                  {"fields", fields_json(fields)},
                  {"seed", common.seed}};
      return emit(plucker_campaign(plucker_samples, fields, common.seed),
                  common, config);
    }
    if (matroid->parsed()) {
      if (!matroid_json.empty() || !minor_of.empty()) {
        if (matroid_json.empty() || minor_of.empty()) {
          throw std::invalid_argument("--matroid and --minor-of go together");
        }
        const Matroid small = matroid_from_json(read_file(matroid_json));
        const Matroid large = matroid_from_json(read_file(minor_of));
        CampaignReport report;
        report.command = "matroid";
        const auto witness = is_minor(small, large);
        std::string detail;
        if (witness) {
          std::ostringstream steps;
          for (const MinorStep& st : witness->steps) {
            steps << (st.op == MinorStep::Op::Contract ? "contract " : "delete ")
                  << st.element << "; ";
          }
          detail = steps.str();
        }
        report.add("minor embedding exists", witness.has_value(), detail);
        Json config{{"matroid", matroid_json}, {"minorOf", minor_of}};
        return emit(report, common, config);
      }
      if (!matroid_matrix.empty()) {
        const auto fields =
            parse_fields(common.field_names, {FieldSpec::rationals()});
        const Field field(fields.front());
        MatrixInput input = load_matrix(matroid_matrix, field);
        const Stage stage = !matroid_stage.empty()
                                ? parse_stage(matroid_stage)
                                : input.stage ? *input.stage
                                              : throw std::invalid_argument(
                                                    "no stage given");
        CampaignReport report;
        report.command = "matroid";
        const auto m = matroid_of(pluecker_from_matrix(input.matrix, stage));
        report.add("support matroid extracted", m.has_value(),
                   m ? m->to_json() : "the matrix has rank below p");
        Json config{{"matrix", matroid_matrix},
                    {"stage", Json::array({stage.negatives, stage.positives})},
                    {"field", field.spec().to_string()}};
        return emit(report, common, config);
      }
      const auto fields = parse_fields(common.field_names,
                                       {FieldSpec::gf(2), FieldSpec::gf(3)});
      const Stage stage = parse_stage(matroid_stage);
      Json config{{"samples", matroid_samples},
                  {"maxStage", Json::array({stage.negatives, stage.positives})},
                  {"fields", fields_json(fields)},
                  {"seed", common.seed}};
      return emit(matroid_campaign(matroid_samples, fields, stage, common.seed),
                  common, config);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
