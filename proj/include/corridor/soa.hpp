// Secondary extension of the arterial through phases.
#pragma once

#include <array>
#include <deque>
#include <limits>
#include <optional>
#include <string>

#include "corridor/sensing.hpp"

namespace corridor {

inline constexpr double kNoVehicles = std::numeric_limits<double>::infinity();

struct SoaParams {
  double h_sat = 2.0;
  double sx_cap = 30.0;
  double sx_floor = 10.0;
  double lost_time_per_critical_phase = 4.0;
  int xc_window = 5;
  bool once_per_cycle = true;
  double xc_prior = 0.75;
  double sat_flow_per_lane = 1800.0;

  void validate() const;
};

/// Departures per phase over one completed cycle.
struct CycleFlow {
  double duration = 0.0;
  std::array<int, kNumPhases> departures{};
};

struct SoaState {
  double x_c = 0.75;
  std::array<double, 2> delta_c{};
  /// Indexed by ring: phase 2 is ring 1, phase 6 is ring 2.
  std::array<bool, 2> used_this_cycle{};
  std::deque<CycleFlow> flow_history;
};

struct ExtensionDecision {
  double t = 0.0;
  int intersection = 0;
  PhaseId phase{2};
  double x_c = 0.0;
  double l_a = 0.0;
  double sx_max = 0.0;
  int t_star = 0;
  double l_v_star = kNoVehicles;
  bool granted = false;
  double hold = 0.0;
};

double lost_time_per_vehicle(double t, int n, double h_sat);

struct ExtensionChoice {
  int t_star = 0;
  double l_v_star = kNoVehicles;
};

ExtensionChoice optimal_secondary_extension(const ArrivalTable& table, PhaseId phase, double sx_max,
                                            double h_sat);

double affordable_lost_time(double x_c);

/// Missing neighbours are passed as 0.
double max_secondary_extension(double dc1, double dc2, const SoaParams& params = {});

/// Sum of critical flow ratios over the stored cycles; empty without history.
std::optional<double> critical_flow_ratio_sum(const std::deque<CycleFlow>& history,
                                              const std::array<int, kNumPhases>& lanes,
                                              double sat_flow_per_lane);

double estimate_xc(std::optional<double> sum_y, double measured_cycle, double lost_time,
                   double prior = 0.75);

/// Evaluated at the gap-out instant of phase 2 or 6. `lanes` is the phase's
/// lane count; the discharge headway per approach is h_sat / lanes.
ExtensionDecision decide_secondary_extension(SoaState& state, const SoaParams& params,
                                             const ArrivalTable& table, PhaseId phase, int lanes);

std::string extension_decision_csv_row(const ExtensionDecision& d);

}  // namespace corridor
