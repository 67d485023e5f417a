// Post-processing of RunRecords: delay, travel-time distributions,
// percent on green, coordination diagrams and measured utilization.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "corridor/run.hpp"

namespace corridor {

struct MovementDelay {
  Movement movement;
  long long samples = 0;
  long long partial_samples = 0;
  double mean = 0.0;
};

/// Delay in seconds per vehicle-movement. Every stop-bar crossing of a
/// measured vehicle is one sample: time on the link minus its free-flow
/// time. Vehicles still inside at the end contribute the delay accrued so far.
struct DelayReport {
  double total = 0.0;
  double arterial = 0.0;      // EB/WB through
  double non_arterial = 0.0;  // everything else
  double arterial_left = 0.0; // EB/WB left, also part of non_arterial
  long long samples = 0;
  long long arterial_samples = 0;
  long long non_arterial_samples = 0;
  long long arterial_left_samples = 0;
  long long partial_samples = 0;
  long long vehicles = 0;
  double stops_per_vehicle = 0.0;
  double delay_hours = 0.0;
  long long stops = 0;
  std::vector<MovementDelay> movements;
};

/// Vehicles spawned inside [warmup, end) are measured.
bool is_measured(const RunRecord& record, const VehicleSummary& v);

DelayReport control_delay(const RunRecord& record);

/// Sorted end-to-end times of through trips across every intersection.
std::vector<double> travel_time_cdf(const RunRecord& record, Approach direction);

/// Linear-interpolated quantile of sorted samples, q in [0, 1].
std::optional<double> quantile(const std::vector<double>& sorted, double q);

/// Interval shown by `phase` at time t.
Interval interval_at(const std::vector<SignalEvent>& events, PhaseId phase, double t);

/// Share of the phase's measured vehicles whose undelayed arrival at the stop
/// bar (link entry plus free-flow time) falls in green. Empty without arrivals.
std::optional<double> percent_on_green(const RunRecord& record, int intersection, PhaseId phase);

/// Rows: cycle,kind,start,end with times relative to the cycle's green start.
/// kind is arrival (end empty), green, yellow, red or extension.
std::string coordination_diagram_csv(const RunRecord& record, int intersection, PhaseId phase);

struct UtilizationReport {
  std::array<double, kNumPhases> flow_ratio{};
  double critical_sum = 0.0;
  double cycle = 0.0;
  double x_c = 0.0;
  /// X_c at the Webster cycle for the measured Y, independent of the controller.
  double webster_x_c = 0.0;
};

/// Flow ratios from measured-period departures, cycle from phase 2 green
/// starts, X_c = Y C / (C - lost_time).
UtilizationReport measured_utilization(const RunRecord& record, int intersection, double lost_time = 16.0,
                                       double sat_flow_per_lane = 1800.0, int through_lanes = 2);

}  // namespace corridor
