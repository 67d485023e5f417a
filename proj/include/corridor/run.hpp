// One simulation run: world + controllers + strategy, and the RunRecord it
// produces. Records serialize to a gzip CSV with one section per table.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corridor/microsim.hpp"
#include "corridor/strategies.hpp"

namespace corridor {

inline constexpr const char* kRecordSchema = "corridor-run-record v1";

struct RunConfig {
  CorridorGeometry geometry;
  ScenarioConfig scenario;
  Strategy strategy = Strategy::FA;
  /// Sensing range in feet; ignored by FA and CA.
  double range = 2000.0;
  std::array<PhaseConfig, kNumPhases> phases = default_phase_configs();
  /// Coordinated plan. CA needs it; PAA draws its priority windows from it.
  std::optional<TimingPlan> plan;
  MicrosimParams microsim;
  SoaParams soa;
  SensingParams sensing;
  int paa_horizon = 120;
  int paa_max_labels = 1;

  /// Throws ConfigError before any stepping.
  void validate() const;
};

struct RunRecord {
  ScenarioName scenario = ScenarioName::Symmetric;
  Strategy strategy = Strategy::FA;
  double range = 0.0;
  std::uint64_t seed = 0;
  double warmup = 0.0;
  double end_time = 0.0;
  double approach_length = 0.0;
  double free_flow_speed = 0.0;
  std::vector<double> intersection_positions;

  std::vector<VehicleSummary> vehicles;
  std::vector<CrossingEvent> crossings;
  std::vector<PartialEvent> partials;
  /// Interval changes; every phase also gets a row at t = 0.
  std::vector<std::vector<SignalEvent>> signals;
  std::vector<ExtensionDecision> decisions;
  /// Formatted plan log rows (t, int_id, stage lengths, order, splits, v(T)).
  std::vector<std::string> plans;

  long long spawned = 0;
  long long entered = 0;
  long long exited = 0;
  long long on_network = 0;
  long long waiting = 0;
  long long safety_violations = 0;
  long long conservation_violations = 0;
  long long paa_windows_dropped = 0;
  long long paa_fallbacks = 0;
  double min_gap = 0.0;

  int num_intersections() const { return static_cast<int>(intersection_positions.size()); }
  double measured_end() const { return end_time; }
};

RunRecord run_simulation(const RunConfig& config);

/// Plain CSV text with a schema header and `#table` sections.
std::string serialize(const RunRecord& record);
RunRecord parse_record(const std::string& text);

std::string gzip_compress(const std::string& data);
std::string gzip_decompress(const std::string& data);

void write_record(const RunRecord& record, const std::string& path);
RunRecord read_record(const std::string& path);

}  // namespace corridor
