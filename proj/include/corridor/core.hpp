// Shared vocabulary for the corridor testbed: NEMA phases, movements,
// geometry and scenario configuration. Units are feet and seconds throughout.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corridor {

/// Simulation and controller tick.
inline constexpr double kDt = 0.1;
inline constexpr int kNumPhases = 8;
inline constexpr int kNumIntersections = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Approach : std::uint8_t { EB = 0, WB = 1, NB = 2, SB = 3 };
enum class Turn : std::uint8_t { Left = 0, Through = 1, Right = 2 };
enum class BarrierGroup : std::uint8_t { A = 0, B = 1 };

inline constexpr std::array<Approach, 4> kApproaches{Approach::EB, Approach::WB, Approach::NB,
                                                     Approach::SB};

const char* to_string(Approach a);
const char* to_string(Turn t);
Approach parse_approach(const std::string& s);

/// NEMA phase number 1..8. Ring 1 holds 1-4, ring 2 holds 5-8; group A
/// {1,2,5,6} serves the arterial, group B {3,4,7,8} the cross street.
class PhaseId {
 public:
  constexpr PhaseId() = default;
  constexpr explicit PhaseId(int v) : value_(v) {
    if (v < 1 || v > kNumPhases) throw std::out_of_range("phase id must be in 1..8");
  }
  constexpr int value() const { return value_; }
  constexpr int index() const { return value_ - 1; }
  constexpr int ring() const { return value_ <= 4 ? 1 : 2; }
  constexpr BarrierGroup group() const {
    const int k = (value_ - 1) % 4;
    return k < 2 ? BarrierGroup::A : BarrierGroup::B;
  }
  constexpr bool is_through() const { return value_ % 2 == 0; }
  constexpr bool is_arterial_through() const { return value_ == 2 || value_ == 6; }
  friend constexpr bool operator==(PhaseId, PhaseId) = default;
  friend constexpr auto operator<=>(PhaseId, PhaseId) = default;

 private:
  int value_ = 2;
};

/// Phases of `group` in `ring` in default (left-leading) order.
std::array<PhaseId, 2> ring_group_phases(int ring, BarrierGroup group);

/// True iff `a` and `b` may not display green at the same time.
bool conflicts(PhaseId a, PhaseId b);

/// Phase that serves a turn from an approach. Rights share the through phase.
PhaseId phase_for(Approach approach, Turn turn);

/// Through phase whose traffic opposes a left turn from `approach`.
PhaseId opposing_through(Approach approach);

struct PhaseConfig {
  double min_green = 5.0;
  double max_green = 35.0;
  double yellow = 4.0;
  double all_red = 1.0;
  double passage_time = 2.1;
  double advance_passage_time = 3.0;

  double clearance() const { return yellow + all_red; }
  void validate() const;
};

/// Default timing: 5 s minimum green, 35 s max on minor phases, 60 s on the
/// arterial throughs, 2.1/3.0 s stop-bar/advance passage.
std::array<PhaseConfig, kNumPhases> default_phase_configs();

struct Movement {
  int intersection = 0;
  Approach approach = Approach::EB;
  Turn turn = Turn::Through;

  PhaseId phase() const { return phase_for(approach, turn); }
  bool is_arterial_through() const {
    return turn == Turn::Through && (approach == Approach::EB || approach == Approach::WB);
  }
  friend bool operator==(const Movement&, const Movement&) = default;
};

struct CorridorGeometry {
  std::vector<double> intersection_positions{0.0, 1320.0, 2640.0};
  double approach_length = 2200.0;
  int through_lanes = 2;
  int left_lanes = 1;
  double stopbar_detector_length = 40.0;
  double advance_detector_offset = 330.0;
  double advance_detector_length = 6.0;
  double free_flow_speed = 66.0;

  int num_intersections() const { return static_cast<int>(intersection_positions.size()); }
  /// Length of the inbound link feeding `approach` at intersection `i`.
  double inbound_length(int i, Approach approach) const;
  /// Ground distance of an EB or WB through trip across the whole corridor.
  double corridor_length() const;
  void validate(double largest_range = 2000.0) const;
};

enum class ScenarioName : std::uint8_t { Symmetric, Asymmetric, Balanced };
const char* to_string(ScenarioName n);
ScenarioName parse_scenario_name(const std::string& s);

struct TurnFractions {
  double left = 0.1;
  double through = 0.8;
  double right = 0.1;
};

struct ScenarioConfig {
  ScenarioName name = ScenarioName::Symmetric;
  /// Hourly volume entering the network on each edge approach, indexed by
  /// [intersection][approach]. Only edge entries may be non-zero: EB at the
  /// first intersection, WB at the last, NB/SB everywhere.
  std::vector<std::array<double, 4>> entry_volume;
  /// Turning proportions at every intersection approach.
  std::vector<std::array<TurnFractions, 4>> turns;
  std::uint64_t seed = 1;
  double warmup = 600.0;
  double duration = 3600.0;

  bool is_edge_entry(int intersection, Approach a) const;
  void validate(int num_intersections) const;
};

/// True iff `a` enters the corridor from outside at intersection `i`.
bool is_edge_entry(int num_intersections, int intersection, Approach a);

struct SensingRange {
  double range = 2000.0;
  explicit SensingRange(double r);
};

inline constexpr std::array<double, 6> kTestedRanges{165.0, 330.0, 660.0, 1000.0, 1500.0, 2000.0};

/// Constant-speed projection of the time to reach the stop bar.
double eta_to_stopbar(double distance, double speed, double floor_speed = 5.0);

}  // namespace corridor
