// Phase allocation by dynamic programming over barrier-group durations.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corridor/ring_barrier.hpp"
#include "corridor/sensing.hpp"

namespace corridor {

struct PaaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PaaPhaseTiming {
  int min_green = 5;
  int max_green = 35;
  int clearance = 5;
  int lanes = 1;
};

/// Phase `phase` must be green over steps [start, end) of the horizon.
struct PriorityWindow {
  PhaseId phase{2};
  int start = 0;
  int end = 0;
};

struct DpProblem {
  int horizon = 120;
  BarrierGroup first_group = BarrierGroup::A;
  std::array<PaaPhaseTiming, kNumPhases> phases{};
  /// Saturation headway per lane, in steps.
  double h_sat = 2.0;
  /// arrivals[p][n - 1] vehicles join phase p's queue during step n.
  std::array<std::vector<int>, kNumPhases> arrivals;
  std::array<int, kNumPhases> initial_queue{};
  std::vector<PriorityWindow> windows;
  int stage_cap = 8;
  /// Labels kept per state and ring options kept per stage length, lowest
  /// delay first. 0 keeps every non-dominated one (exact); 1 carries only the
  /// best queue state forward.
  int max_labels = 0;

  const PaaPhaseTiming& timing(PhaseId p) const { return phases[static_cast<std::size_t>(p.index())]; }
  int arrival(PhaseId p, int step) const;
  void validate() const;
};

struct StageBounds {
  int x_min = 0;
  int x_max = 0;
};

StageBounds stage_bounds(const DpProblem& problem, BarrierGroup group);

/// Stage lengths x that can end in state s_j; {0} when none can.
std::vector<int> feasible_controls(int s_j, StageBounds bounds, int horizon);

/// Ring choice inside a stage: lead phase, lead green and lag green.
struct RingChoice {
  PhaseId lead{1};
  PhaseId lag{2};
  int lead_green = 0;
  int lag_green = 0;
  int lag_offset = 0;  // lag green start relative to the stage start
};

struct LowerLevelResult {
  long long delay = 0;
  std::array<RingChoice, 2> rings;
  std::array<int, kNumPhases> queues_out{};
};

/// Minimum-delay sequence and split for one stage of `group` over steps
/// [start, start + duration). Empty when no candidate satisfies the bounds
/// and priority windows.
std::optional<LowerLevelResult> lower_level_delay(const DpProblem& problem, BarrierGroup group,
                                                  int start, int duration,
                                                  const std::array<int, kNumPhases>& queues_in);

/// Delay and end queues of one given sequence and split.
std::optional<LowerLevelResult> evaluate_stage(const DpProblem& problem, BarrierGroup group, int start,
                                               int duration, const std::array<RingChoice, 2>& rings,
                                               const std::array<int, kNumPhases>& queues_in);

struct DpLabel {
  long long delay = 0;
  std::array<int, kNumPhases> queues{};
  int pred = -1;  // label index at the predecessor state
  int x = 0;
  std::array<RingChoice, 2> rings;
};

struct ValueTable {
  int horizon = 0;
  BarrierGroup first_group = BarrierGroup::A;
  /// labels[j][s]: non-dominated labels after j stages ending at s. labels[0][0] is the start.
  std::vector<std::vector<std::vector<DpLabel>>> labels;
  int stages = 0;       // J
  int best_stages = 0;  // stage count the plan is retrieved from

  std::optional<long long> value(int j, int s) const;
  /// Stage length of the minimum-delay label at (j, s).
  std::optional<int> best_x(int j, int s) const;
  BarrierGroup group_of(int j) const;
};

ValueTable forward_recursion(const DpProblem& problem);

struct PlanStage {
  BarrierGroup group = BarrierGroup::A;
  int start = 0;
  int length = 0;
  std::array<RingChoice, 2> rings;
};

struct PlannedGreen {
  PhaseId phase{1};
  int start = 0;
  int duration = 0;
};

struct PhasePlan {
  std::vector<PlanStage> stages;
  std::vector<PlannedGreen> greens;
  long long delay = 0;
};

PhasePlan backward_retrieve(const ValueTable& table);

/// Adds fixed priority requests; throws PaaError on a request no plan can meet.
DpProblem apply_priority_requests(DpProblem problem, const std::vector<PriorityWindow>& windows);

/// True on the tick where both rings wait at the barrier; the next step
/// starts the following group.
bool replan_trigger(const PhasePlanState& state);

/// Arrival table and controller timings folded into a planning problem.
DpProblem make_problem(const ArrivalTable& table, const std::array<PhaseConfig, kNumPhases>& config,
                       BarrierGroup first_group, int horizon, int through_lanes);

std::string plan_csv_row(double t, int intersection, const PhasePlan& plan);

}  // namespace corridor
