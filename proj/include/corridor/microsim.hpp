// Fixed-step corridor microsimulation: demand, car following, queue
// discharge, permitted lefts and detector emulation.
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "corridor/core.hpp"
#include "corridor/ring_barrier.hpp"
#include "corridor/sensing.hpp"

namespace corridor {

struct MicrosimParams {
  double reaction_time = 1.6;      // Newell wave trip time
  double jam_spacing = 26.4;       // front-to-front at standstill
  double vehicle_length = 16.0;
  double comfortable_decel = 10.0;
  double startup_lost_time = 2.0;
  /// A released queue keeps discharging this long into yellow.
  double yellow_discharge = 1.0;
  double right_turn_speed = 22.0;
  double right_turn_zone = 150.0;
  double critical_gap = 4.5;
  double permissive_zone = 150.0;
  /// Stopped opposing vehicles this close to the stop bar block a permitted left.
  double opposing_queue_zone = 60.0;

  void validate() const;
};

/// Free-flow time over the last `length` feet of an approach for a movement.
double free_flow_link_time(double length, Turn turn, double free_flow_speed,
                           const MicrosimParams& params = {});

/// The inbound link a movement feeds, or nothing when it leaves the corridor.
std::optional<std::pair<int, Approach>> downstream(int num_intersections, const Movement& m);

/// Seeded Poisson arrivals for one edge entry. Each arrival also carries
/// three uniform draws used for its turning decisions.
class DemandStream {
 public:
  DemandStream(std::uint64_t seed, int entry_index, double veh_per_hour);

  struct Arrival {
    double t = 0.0;
    std::array<double, 3> turn_draws{};
  };
  /// Next arrival after the previous one; t is +inf when the rate is zero.
  Arrival next();

 private:
  std::uint64_t state_;
  double rate_;
  double t_ = 0.0;
  double uniform();
};

/// Arrival times at one entry over [0, horizon).
std::vector<double> spawn_demand(std::uint64_t seed, int entry_index, double veh_per_hour, double horizon);

struct CrossingEvent {
  int vehicle = 0;
  int intersection = 0;
  Approach approach = Approach::EB;
  Turn turn = Turn::Through;
  int lane = 0;  // 0 left, 1-2 through
  double link_entry = 0.0;
  double cross = 0.0;
  double free_flow = 0.0;
};

/// Progress of a vehicle still on the network (or waiting at the edge) at the end.
struct PartialEvent {
  int vehicle = 0;
  int intersection = 0;
  Approach approach = Approach::EB;
  Turn turn = Turn::Through;
  double link_entry = 0.0;
  double free_flow_covered = 0.0;
};

struct VehicleSummary {
  int id = 0;
  int entry_intersection = 0;
  Approach entry_approach = Approach::EB;
  double spawn = 0.0;
  double exit = std::numeric_limits<double>::quiet_NaN();
  int stops = 0;
  std::vector<Movement> route;
};

class World {
 public:
  World(CorridorGeometry geometry, ScenarioConfig scenario, MicrosimParams params = {});

  /// Advances one tick given the signal display at each intersection.
  void advance(const std::vector<std::array<Interval, kNumPhases>>& signals);

  DetectorInputs detectors(int intersection) const;

  /// Ground-truth observations of vehicles approaching `intersection`.
  std::vector<SensedVehicle> observe(int intersection) const;

  /// Queues a vehicle with a fixed route at its edge entry, arriving now.
  /// The route must start on an edge approach and follow the corridor.
  int add_vehicle(const std::vector<Movement>& route);

  /// Logs partial progress of every vehicle not yet out of the network.
  void finish();

  double time() const { return time_; }
  const CorridorGeometry& geometry() const { return geometry_; }
  const std::vector<VehicleSummary>& vehicles() const { return summaries_; }
  const std::vector<CrossingEvent>& crossings() const { return crossings_; }
  const std::vector<PartialEvent>& partials() const { return partials_; }

  long long spawned() const { return static_cast<long long>(summaries_.size()); }
  long long entered() const { return entered_; }
  long long exited() const { return exited_; }
  long long on_network() const;
  long long waiting_at_edge() const;

  /// Smallest leader-follower gap (rear bumper to front bumper) seen so far.
  double min_gap() const { return min_gap_; }

 private:
  static constexpr int kHist = 32;

  struct Track {
    std::array<double, kHist> pos{};
    int head = 0;
    void fill(double d);
    void push(double d);
    double at(int k) const { return pos[static_cast<std::size_t>((head - k + kHist) % kHist)]; }
    void shift(double offset);
  };

  struct Vehicle {
    int id = 0;
    std::vector<Movement> route;
    std::size_t leg = 0;
    int link = -1;
    int lane = 0;
    double d = 0.0;
    double v = 0.0;
    double link_entry = 0.0;
    bool committed = false;
    bool stopping = false;
    bool armed = false;  // exceeded the stop hysteresis upper speed
    Track track;
  };

  struct Lane {
    std::deque<int> queue;  // vehicle indices, front is closest to the stop bar
    bool has_ghost = false;
    Track ghost;
    bool go = false;
    bool signal_go = false;
    bool was_green = false;
    double yellow_since = 0.0;
    double release = std::numeric_limits<double>::infinity();
  };

  struct Link {
    int intersection = 0;
    Approach approach = Approach::EB;
    double length = 0.0;
    std::array<Lane, 3> lanes;
  };

  struct Entry {
    int intersection = 0;
    Approach approach = Approach::EB;
    DemandStream stream;
    DemandStream::Arrival pending_arrival;
    std::deque<int> waiting;
  };

  CorridorGeometry geometry_;
  ScenarioConfig scenario_;
  MicrosimParams params_;
  int tau_steps_ = 16;
  double time_ = 0.0;
  std::vector<Link> links_;
  std::vector<Entry> entries_;
  std::vector<Vehicle> vehicles_;
  std::vector<VehicleSummary> summaries_;
  std::vector<CrossingEvent> crossings_;
  std::vector<PartialEvent> partials_;
  long long entered_ = 0;
  long long exited_ = 0;
  double min_gap_ = std::numeric_limits<double>::infinity();
  bool finished_ = false;
  std::vector<PhaseSet> advance_pulse_;

  int link_index(int intersection, Approach a) const { return intersection * 4 + static_cast<int>(a); }
  std::vector<Movement> draw_route(int intersection, Approach a, const std::array<double, 3>& u) const;
  int lane_for(const Link& link, Turn turn) const;
  double lane_room(const Link& link, int lane) const;
  int pick_target_lane(const Vehicle& v, double d) const;
  bool lane_accepts(const Link& link, int lane, double d) const;
  bool permissive_gap(int intersection, Approach a) const;
  void update_lane_states(const std::vector<std::array<Interval, kNumPhases>>& signals);
  void spawn(double t_next);
  void insert_waiting(double t_next);
  void move_vehicles(double t_next);
  void handle_crossings(double t_prev, double t_next);
  void place(Vehicle& v, int link, int lane, double d, double t);
};

}  // namespace corridor
