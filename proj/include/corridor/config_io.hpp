// JSON configuration files: experiment matrix, demand tables and timing plans.
// Every file carries a "schema" string; parsing reports all problems at once.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "corridor/calibration.hpp"

namespace corridor {

inline constexpr const char* kExperimentSchema = "corridor-experiment v1";
inline constexpr const char* kDemandSchema = "corridor-demand v1";
inline constexpr const char* kPlansSchema = "corridor-plans v1";

/// One problem per entry, each prefixed with "file:/json/pointer".
class ConfigErrors : public std::runtime_error {
 public:
  explicit ConfigErrors(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct ExperimentConfig {
  std::vector<ScenarioName> scenarios;
  std::vector<Strategy> strategies;
  std::vector<double> sensing_ranges;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output;

  double warmup = 600.0;
  double duration = 3600.0;
  CorridorGeometry geometry;
  std::array<PhaseConfig, kNumPhases> phases = default_phase_configs();
  SensingParams sensing;
  SoaParams soa;
  int paa_horizon = 120;
  int paa_max_labels = 1;

  double xc_target = 0.75;
  PlanSearch plan_search;

  std::filesystem::path demand_file;
  std::filesystem::path plans_file;
  /// Loaded from demand_file; empty when the file does not exist yet.
  std::map<ScenarioName, ScenarioConfig> demand;
  /// Loaded from plans_file; empty when the file does not exist yet.
  std::map<ScenarioName, TimingPlan> plans;

  /// Run configuration of one cell. Throws ConfigError if its demand or,
  /// for CA and PAA, its plan is missing.
  RunConfig cell(ScenarioName scenario, Strategy strategy, double range, std::uint64_t seed) const;
};

/// Parses and validates; throws ConfigErrors listing every problem found.
/// Relative demand/plans/output paths resolve against the config's directory.
ExperimentConfig load_experiment(const std::filesystem::path& path);

std::map<ScenarioName, ScenarioConfig> load_demand(const std::filesystem::path& path, int num_intersections);
std::map<ScenarioName, TimingPlan> load_plans(const std::filesystem::path& path,
                                              const std::array<PhaseConfig, kNumPhases>& phases,
                                              int num_intersections);

std::string demand_json(const std::map<ScenarioName, ScenarioConfig>& demand);
std::string plans_json(const std::map<ScenarioName, TimingPlan>& plans);

/// Writes via a temporary file and rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace corridor
