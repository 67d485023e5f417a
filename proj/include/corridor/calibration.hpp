// Demand calibration and coordinated baseline plan generation.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "corridor/run.hpp"
#include "corridor/timing_plans.hpp"

namespace corridor {

inline constexpr double kSatFlowPerLane = 1800.0;
inline constexpr double kLostTime = 16.0;

/// Unscaled demand shape of a named scenario.
ScenarioConfig scenario_template(ScenarioName name, int num_intersections = 3);

/// Expected hourly volume per phase at each intersection, following turn
/// fractions from the edge entries through the corridor.
std::vector<std::array<double, kNumPhases>> expected_phase_volumes(const ScenarioConfig& scenario,
                                                                   const CorridorGeometry& geometry);

FlowRatios demand_flow_ratios(const ScenarioConfig& scenario, const CorridorGeometry& geometry);

/// Y C / (C - L) with C the Webster cycle for Y.
double webster_xc(double y_sum, double lost_time = kLostTime);

struct CalibrationResult {
  ScenarioConfig scenario;
  double scale = 1.0;
  /// Extra factor on each intersection's cross-street entries.
  std::vector<double> cross_scale;
  /// Webster X_c per intersection at the calibrated volumes.
  std::vector<double> x_c;
};

/// Scales the template's entry volumes (rounded to whole veh/h) towards a
/// Webster X_c of `target`: one factor for the whole corridor so the mean
/// hits it, then one per intersection on its cross-street entries.
CalibrationResult calibrate_demand(const ScenarioConfig& shape, const CorridorGeometry& geometry,
                                   double target = 0.75);

struct PlanSearch {
  std::vector<std::uint64_t> seeds{101, 102};
  double warmup = 300.0;
  double duration = 1200.0;
  int budget = 60;
  /// Proportional plans tried across the cycle range before climbing; 0 skips.
  double cycle_step = 10.0;
  PiParams pi;
};

/// PI of a plan under coordinated-actuated control, summed over seeds.
double evaluate_plan(const TimingPlan& plan, const RunConfig& base, const PlanSearch& search);

/// Start from the best of the Webster plan and proportional plans over the
/// cycle range, then hill climb on simulated PI.
HillClimbResult plan_baseline(const RunConfig& base, const PlanSearch& search);

}  // namespace corridor
