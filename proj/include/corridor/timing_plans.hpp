// Coordinated timing plans: Webster start, performance index, hill climbing.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "corridor/core.hpp"
#include "corridor/paa.hpp"

namespace corridor {

/// Common-cycle plan. Splits include clearance. Each ring serves its left
/// first, then its through; cycle zero at an intersection is the start of
/// group A there, shifted by the offset.
struct TimingPlan {
  double cycle = 90.0;
  std::vector<double> offsets;
  std::vector<std::array<double, kNumPhases>> splits;

  int num_intersections() const { return static_cast<int>(splits.size()); }
  double split(int i, PhaseId p) const { return splits[static_cast<std::size_t>(i)][static_cast<std::size_t>(p.index())]; }
  /// Length of group A at intersection i.
  double group_a(int i) const;
  /// Local cycle time at absolute time t.
  double local_time(int i, double t) const;
  /// Local time at which phase p's green must end.
  double force_off(int i, PhaseId p, const std::array<PhaseConfig, kNumPhases>& config) const;
  /// Local start of the nominal green of p.
  double nominal_start(int i, PhaseId p) const;
  /// Throws ConfigError naming the first violated invariant.
  void validate(const std::array<PhaseConfig, kNumPhases>& config) const;
};

/// Per-phase flow ratios (volume / saturation flow) at each intersection.
using FlowRatios = std::vector<std::array<double, kNumPhases>>;

/// Critical flow ratio sum: largest ring path per barrier group.
double critical_sum(const std::array<double, kNumPhases>& y);

double webster_cycle(double lost_time, double y_sum);

TimingPlan webster_initial(const FlowRatios& y, double lost_time, const std::array<PhaseConfig, kNumPhases>& config,
                           const CorridorGeometry& geometry);

/// Splits proportional to critical flow ratios for a given cycle, offsets
/// from free-flow travel time. Throws ConfigError if the plan is invalid.
TimingPlan proportional_plan(const FlowRatios& y, double cycle, const std::array<PhaseConfig, kNumPhases>& config,
                             const CorridorGeometry& geometry);

struct PiParams {
  double stop_weight = 0.2;
  /// When true the weight applies per hundred stops.
  bool per_hundred_stops = true;
};

double performance_index(double delay_hours, double stops, const PiParams& params = {});

using PlanEvaluator = std::function<double(const TimingPlan&)>;

struct HillClimbResult {
  TimingPlan plan;
  double pi = 0.0;
  double initial_pi = 0.0;
  int evaluations = 0;
  int passes = 0;
};

/// Coordinate search: cycle +-5 s, offsets +-2 s, zero-sum split moves of 2 s
/// within each ring pair and across the barrier. Accepts strict improvements
/// until a pass finds none or `budget` evaluations are spent.
HillClimbResult hill_climb(const TimingPlan& initial, const PlanEvaluator& evaluate, int budget,
                           const std::array<PhaseConfig, kNumPhases>& config);

/// Nominal green windows of phases 2 and 6 from the plan, in whole steps
/// relative to `now`, clipped to [0, horizon).
std::vector<PriorityWindow> coordination_windows(const TimingPlan& plan, int intersection, double now, int horizon,
                                                 const std::array<PhaseConfig, kNumPhases>& config);

}  // namespace corridor
