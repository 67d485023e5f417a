// Eight-phase dual-ring actuated controller.
//
// Each ring walks its phases in a fixed order inside the active barrier group.
// A green phase becomes "ready" to end on gap-out, max-out or force-off once
// its minimum green has elapsed; the ready flag latches. Crossing the barrier
// needs both rings ready at the same time (non-simultaneous gap-out), and
// the crossing itself happens on the tick after both rings finish clearance.
#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "corridor/core.hpp"

namespace corridor {

enum class Interval : std::uint8_t { Red = 0, Green = 1, Yellow = 2, AllRed = 3 };
const char* to_string(Interval i);

enum class EndCause : std::uint8_t { None, GapOut, MaxOut, ForceOff };

using PhaseSet = std::bitset<kNumPhases>;

inline void set_phase(PhaseSet& s, PhaseId p) { s.set(static_cast<std::size_t>(p.index())); }
inline bool has_phase(const PhaseSet& s, PhaseId p) { return s.test(static_cast<std::size_t>(p.index())); }

/// Per-phase detector state for one tick. Lane channels are OR-ed together;
/// `advance` is a pulse on zone entry.
struct DetectorInputs {
  PhaseSet stopbar;
  PhaseSet advance;
};

struct ControllerCommand {
  PhaseSet holds;
  PhaseSet calls;
  PhaseSet force_offs;
  /// Optional lead phase per ring for the next group entered (PAA sequencing).
  std::array<std::optional<PhaseId>, 2> lead;
};

struct PhaseTimers {
  Interval interval = Interval::Red;
  double interval_elapsed = 0.0;
  double green_elapsed = 0.0;
  double since_stopbar = std::numeric_limits<double>::infinity();
  double since_advance = std::numeric_limits<double>::infinity();
  double max_timer = 0.0;
  bool max_timer_running = false;
  bool call = false;
  bool hold = false;
  bool secondary_extension_active = false;
  bool ready = false;
  bool ready_this_tick = false;
  EndCause cause = EndCause::None;
};

enum class RingMode : std::uint8_t { Active, BarrierWait };

struct RingState {
  RingMode mode = RingMode::Active;
  PhaseId phase{2};
  /// Phase to serve after the current clearance; empty means the barrier.
  std::optional<PhaseId> next;
  std::array<PhaseId, 2> order{PhaseId(1), PhaseId(2)};
};

struct PhasePlanState {
  double time = 0.0;
  std::array<PhaseTimers, kNumPhases> phases{};
  std::array<RingState, 2> rings{};
  BarrierGroup group = BarrierGroup::A;
  int cycle_counter = 0;
  /// Disabled in PAA drive mode: phases then follow calls and force-offs only.
  bool detector_driven = true;

  const PhaseTimers& operator[](PhaseId p) const { return phases[static_cast<std::size_t>(p.index())]; }
  PhaseTimers& operator[](PhaseId p) { return phases[static_cast<std::size_t>(p.index())]; }
};

struct SignalEvent {
  double t = 0.0;
  PhaseId phase;
  Interval interval = Interval::Red;
};

/// Green phase starts and ends reported by one step.
struct StepEvents {
  std::vector<SignalEvent> changes;
  PhaseSet green_started;
  PhaseSet green_ended;
  PhaseSet gapped_out;
  bool barrier_crossed = false;
};

class RingBarrierController {
 public:
  /// Starts with phases 2 and 6 green (rest state of the arterial).
  explicit RingBarrierController(std::array<PhaseConfig, kNumPhases> config,
                                 bool detector_driven = true);

  /// Starts with both rings waiting at the barrier ahead of group A.
  static RingBarrierController at_barrier(std::array<PhaseConfig, kNumPhases> config,
                                          bool detector_driven);

  /// Advances all timers by `dt`. Returns an error and leaves the state
  /// untouched when the command is invalid.
  std::optional<std::string> step(const DetectorInputs& detectors, const ControllerCommand& command,
                                  double dt = kDt);

  const PhasePlanState& state() const { return state_; }
  const StepEvents& last_events() const { return events_; }
  const std::array<PhaseConfig, kNumPhases>& config() const { return config_; }
  const PhaseConfig& config(PhaseId p) const { return config_[static_cast<std::size_t>(p.index())]; }

  /// Green-start timestamps of `p` over the whole run.
  const std::vector<double>& green_starts(PhaseId p) const {
    return green_starts_[static_cast<std::size_t>(p.index())];
  }

  Interval interval(PhaseId p) const { return state_[p].interval; }
  bool is_green(PhaseId p) const { return state_[p].interval == Interval::Green; }

  /// True when `p` cannot stay green forever because some other call needs it
  /// to end.
  bool demand_requires_end(PhaseId p) const;

 private:
  bool later_in_ring(int ring, PhaseId q) const;
  std::optional<PhaseId> next_in_group(int ring) const;
  bool ring_barrier_ready(int ring) const;
  void begin_green(PhaseId p, double t);
  void begin_clearance(int ring, std::optional<PhaseId> next, double t);
  void set_interval(PhaseId p, Interval iv, double t);
  void cross_barrier(const ControllerCommand& command, double t);

  std::array<PhaseConfig, kNumPhases> config_;
  PhasePlanState state_;
  StepEvents events_;
  std::array<std::vector<double>, kNumPhases> green_starts_;
};

/// True iff no two green-or-yellow phases conflict.
bool is_safe(const PhasePlanState& state);

/// Mean of successive differences over the last `window` intervals.
std::optional<double> effective_cycle_length(const std::vector<double>& green_starts, int window);

/// Writes signal events as CSV rows (t, int_id, phase, interval).
std::string signal_events_csv_row(const SignalEvent& e, int intersection);

}  // namespace corridor
