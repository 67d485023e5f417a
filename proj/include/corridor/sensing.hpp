// Range-limited trajectory feed and the arrival tables built from it.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "corridor/core.hpp"

namespace corridor {

/// Ground-truth observation of a vehicle on an inbound link.
struct SensedVehicle {
  int vehicle_id = 0;
  Movement movement;
  double distance_to_stopbar = 0.0;
  double speed = 0.0;
  double timestamp = 0.0;
};

struct SensingParams {
  double floor_speed = 5.0;
  /// Vehicles slower than `queue_speed` within `queue_distance` of the stop
  /// bar are counted as queued rather than binned. With `queue_chain` a slow
  /// vehicle within `queue_distance` of a queued vehicle of the same phase
  /// ahead of it is queued too.
  double queue_speed = 5.0;
  double queue_distance = 100.0;
  bool queue_chain = true;
};

/// Per-phase projected stop-bar arrivals in 1 s bins starting now.
struct ArrivalTable {
  int horizon = 0;
  std::array<std::vector<int>, kNumPhases> counts;
  std::array<int, kNumPhases> initial_queue{};

  explicit ArrivalTable(int horizon_bins = 1);

  int bin(PhaseId p, int k) const {
    return k < horizon ? counts[static_cast<std::size_t>(p.index())][static_cast<std::size_t>(k)] : 0;
  }
  int total() const;
};

/// Vehicles approaching `intersection` no farther than `range` from its stop
/// bar. Vehicles past the stop bar are never reported.
std::vector<SensedVehicle> filter_by_range(const std::vector<SensedVehicle>& all_vehicles,
                                           int intersection, SensingRange range);

/// Bins needed so that every vehicle inside `range` fits, and at least `min_horizon`.
int arrival_table_horizon(double range, int min_horizon, const SensingParams& params = {});

ArrivalTable build_arrival_table(const std::vector<SensedVehicle>& sensed, int horizon,
                                 const SensingParams& params = {});

/// Arrivals in bins 0..t for `phase`; empty when t lies beyond the horizon.
std::optional<int> cumulative_arrivals(const ArrivalTable& table, PhaseId phase, int t);

/// Debug dump: one row per non-zero bin and one per non-empty queue.
std::string arrival_table_csv(const ArrivalTable& table, double t, int intersection);

}  // namespace corridor
