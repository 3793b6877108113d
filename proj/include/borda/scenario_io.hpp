#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "borda/theorems.hpp"

namespace borda {

/// Malformed or inconsistent input. The message starts with the field path,
/// e.g. "network.edges[2].weight: ...".
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LoadedScenario {
  ScenarioConfig config;
  /// Alternative names used by the file; reports print with the same names.
  OrderFormat format;
};

/// Builds a scenario from a parsed document. Throws InputError.
LoadedScenario parse_scenario(const nlohmann::json& doc, const std::string& default_label = "scenario");

/// Reads and parses a scenario file. Throws InputError, including for a
/// missing file or invalid JSON.
LoadedScenario load_scenario(const std::filesystem::path& path);

/// One row per recorded time step: "time" then one column per node.
std::string trajectory_csv(const ScenarioConfig& sc, const OrderFormat& format, const OrbitReport& report);

nlohmann::ordered_json orbit_report_json(const ScenarioConfig& sc, const OrderFormat& format,
                                         const OrbitReport& report);

struct SuiteEntryResult {
  std::string label;
  std::string verifier;
  bool expect_pass = true;
  VerificationOutcome outcome;

  bool matched() const { return outcome.passed() == expect_pass; }
  nlohmann::ordered_json to_json() const;
};

/// Verifier names accepted in suite manifests.
const std::vector<std::string>& verifier_names();

/// Runs every entry of a suite manifest in order. Scenario paths are
/// resolved against the manifest's directory. Throws InputError for
/// malformed manifests, unknown verifiers and unreadable scenarios.
std::vector<SuiteEntryResult> run_suite(const std::filesystem::path& manifest);

nlohmann::ordered_json suite_json(const std::vector<SuiteEntryResult>& results);

}  // namespace borda
