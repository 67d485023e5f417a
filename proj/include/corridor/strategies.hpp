// Per-intersection control strategies that drive a ring-barrier controller:
// fully actuated, coordinated actuated, SOA holds and PAA plan execution.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corridor/microsim.hpp"
#include "corridor/paa.hpp"
#include "corridor/ring_barrier.hpp"
#include "corridor/soa.hpp"
#include "corridor/timing_plans.hpp"

namespace corridor {

enum class Strategy : std::uint8_t { FA, CA, SOA, PAA };
const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& s);
/// True for strategies that consume the trajectory feed.
inline bool uses_range(Strategy s) { return s == Strategy::SOA || s == Strategy::PAA; }

/// What a strategy may look at each tick.
struct ControlContext {
  int intersection = 0;
  const World* world = nullptr;
  const std::vector<RingBarrierController>* controllers = nullptr;

  const RingBarrierController& self() const { return (*controllers)[static_cast<std::size_t>(intersection)]; }
  double now() const { return self().state().time; }
};

class SignalStrategy {
 public:
  virtual ~SignalStrategy() = default;
  /// Command for the controller's next step.
  virtual ControllerCommand command(const ControlContext& ctx) = 0;
  /// Called after the controller stepped.
  virtual void after_step(const ControlContext&) {}
};

class FullyActuated : public SignalStrategy {
 public:
  ControllerCommand command(const ControlContext&) override { return {}; }
};

/// Actuated engine under a fixed cycle: 2/6 always called and held until
/// their yield point, other phases forced off at their split boundary.
class CoordinatedActuated : public SignalStrategy {
 public:
  CoordinatedActuated(TimingPlan plan, std::array<PhaseConfig, kNumPhases> config);
  ControllerCommand command(const ControlContext& ctx) override;

 private:
  TimingPlan plan_;
  std::array<PhaseConfig, kNumPhases> config_;
};

struct SoaSettings {
  SoaParams params;
  SensingParams sensing;
  double range = 2000.0;
  /// Bins kept in the arrival table beyond those the range needs.
  int min_horizon = 30;
};

class SelfOrganizing : public SignalStrategy {
 public:
  SelfOrganizing(SoaSettings settings, std::vector<ExtensionDecision>* log);
  ControllerCommand command(const ControlContext& ctx) override;
  void after_step(const ControlContext& ctx) override;

  const SoaState& state() const { return state_; }

 private:
  SoaSettings settings_;
  std::vector<ExtensionDecision>* log_;
  SoaState state_;
  std::array<double, 2> hold_until_{-1.0, -1.0};
  std::array<double, 2> next_check_{};
  std::size_t crossing_cursor_ = 0;
  std::array<int, kNumPhases> departures_{};
  double cycle_start_ = -1.0;
  int cycles_since_update_ = 0;

  ArrivalTable sense(const ControlContext& ctx) const;
  void update_delta_c(const ControlContext& ctx);
};

struct PaaSettings {
  SensingParams sensing;
  double range = 2000.0;
  int horizon = 120;
  int max_labels = 1;
  /// Source of the arterial priority windows; none plans without them.
  std::optional<TimingPlan> coordination;
};

struct PaaLogEntry {
  double t = 0.0;
  int intersection = 0;
  PhasePlan plan;
  int windows_kept = 0;
  int windows_dropped = 0;
  bool fallback = false;
};

/// Replans at every barrier and executes the first stage of the plan.
class PhaseAllocation : public SignalStrategy {
 public:
  PhaseAllocation(PaaSettings settings, std::array<PhaseConfig, kNumPhases> config,
                  std::vector<PaaLogEntry>* log);
  ControllerCommand command(const ControlContext& ctx) override;
  void after_step(const ControlContext& ctx) override;

  /// Plans one stage starting at `start` from the given observations.
  PaaLogEntry plan(double start, int intersection, BarrierGroup group,
                   const std::vector<SensedVehicle>& observed) const;

 private:
  PaaSettings settings_;
  std::array<PhaseConfig, kNumPhases> config_;
  std::vector<PaaLogEntry>* log_;
  std::optional<PlanStage> stage_;
  PhaseSet served_;
};

}  // namespace corridor
