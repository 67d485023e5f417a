// Batch execution of the scenario x strategy x range x seed matrix and the
// aggregate datasets built from its run records.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "corridor/config_io.hpp"
#include "corridor/metrics.hpp"

namespace corridor {

inline constexpr const char* kCellsSchema = "corridor-cells v1";
inline constexpr const char* kSummarySchema = "corridor-summary v1";
inline constexpr const char* kJobsEnv = "CORRIDOR_JOBS";

struct Cell {
  ScenarioName scenario = ScenarioName::Symmetric;
  Strategy strategy = Strategy::FA;
  /// 0 for FA and CA.
  double range = 0.0;
  std::uint64_t seed = 0;

  /// File-name stem, e.g. "symmetric_SOA_r165_s3".
  std::string key() const;
};

/// FA and CA once per seed, SOA and PAA once per range and seed, in a fixed
/// scenario-major order.
std::vector<Cell> expand_matrix(const ExperimentConfig& config, std::uint64_t seed_offset = 0);

/// Canonical text of everything that determines a run's output.
std::string config_fingerprint(const RunConfig& config);
std::uint64_t fnv1a(const std::string& text);

struct MatrixOptions {
  std::filesystem::path out;
  int jobs = 1;
  std::uint64_t seed_offset = 0;
  /// Called after each cell under a lock; may be empty.
  std::function<void(const Cell&, const std::string& status)> progress;
};

struct MatrixResult {
  int cells = 0;
  int simulated = 0;
  int skipped = 0;
  /// "key: message" per quarantined cell.
  std::vector<std::string> failures;
  /// Wall-clock seconds per simulated cell.
  std::map<std::string, double> seconds;
};

/// Default worker count: $CORRIDOR_JOBS if set and positive, else the
/// hardware concurrency.
int default_jobs();

/// Runs every cell whose stored record hash does not match its config.
/// Failed cells are written to out/failed/<key>.txt and skipped. Run times
/// are merged into out/summary/timings.csv.
MatrixResult run_matrix(const ExperimentConfig& config, const MatrixOptions& options);

/// Per-run numbers used by the datasets and acceptance checks.
struct CellMetrics {
  Cell cell;
  DelayReport delay;
  /// POG of phases 2 and 6 per intersection; NaN when no arrivals.
  std::vector<std::array<double, 2>> pog;
  /// Webster-cycle X_c of measured departures per intersection.
  std::vector<double> x_c;
  long long safety_violations = 0;
  long long conservation_violations = 0;
  long long spawned = 0;
  long long exited = 0;
  long long on_network = 0;
  long long waiting = 0;
  long long extensions = 0;
  int max_extensions_per_cycle = 0;
  double max_hold = 0.0;
  long long paa_windows_dropped = 0;
  long long paa_fallbacks = 0;
};

/// Granted secondary extensions: most in any one green of an arterial phase,
/// and the longest hold.
struct ExtensionDiscipline {
  long long granted = 0;
  int max_per_cycle = 0;
  double max_hold = 0.0;
};
ExtensionDiscipline extension_discipline(const RunRecord& record);

CellMetrics cell_metrics(const Cell& cell, const RunRecord& record);

/// Seconds per cell key from out/summary/timings.csv; empty if absent.
std::map<std::string, double> read_timings(const std::filesystem::path& out);

/// Path of a cell's record inside an output directory.
std::filesystem::path record_path(const std::filesystem::path& out, const Cell& cell);

struct ReportResult {
  std::vector<CellMetrics> cells;
  /// Keys of cells with no record on disk.
  std::vector<std::string> missing;
};

/// Reads every record of the matrix and writes the aggregate datasets:
/// summary/cells.csv, datasets/{delay_vs_range, arterial_vs_non_arterial,
/// travel_time_cdf, pog}.csv, datasets/coordination/<key>.csv (first seed)
/// and summary.json.
ReportResult report(const ExperimentConfig& config, const std::filesystem::path& out, std::uint64_t seed_offset = 0);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
  int n = 0;
};
/// Sample standard deviation (n - 1); sd = 0 for n < 2.
MeanSd mean_sd(const std::vector<double>& xs);
/// sqrt((sd_a^2 + sd_b^2) / 2).
double pooled_sd(const MeanSd& a, const MeanSd& b);

}  // namespace corridor
