#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "borda/influence.hpp"
#include "borda/move_graph.hpp"
#include "borda/preference_space.hpp"

namespace borda {

/// One weak order per node.
using Profile = std::vector<OrderId>;

/// Persistent nodes split into two camps pinned to rho and its antipode.
struct Camps {
  std::vector<Node> plus;
  std::vector<Node> minus;
  OrderId rho = 0;
};

struct PersistentConfig {
  std::map<Node, OrderId> pinned;
  std::optional<Camps> camps;

  /// Pins every plus node to rho and every minus node to antipode(rho).
  static PersistentConfig contrarian(const PreferenceSpace& space, std::vector<Node> plus, std::vector<Node> minus,
                                     OrderId rho);

  bool is_pinned(Node v) const { return pinned.contains(v); }
  NodeSet nodes() const;
};

struct Schedule {
  enum class Kind { synchronous, sequence, seeded_uniform };
  Kind kind = Kind::synchronous;
  std::vector<Node> sequence;
  std::uint64_t seed = 0;

  static Schedule synchronous() { return {}; }
  static Schedule fixed_sequence(std::vector<Node> nodes) { return {Kind::sequence, std::move(nodes), 0}; }
  static Schedule seeded_uniform(std::uint64_t seed) { return {Kind::seeded_uniform, {}, seed}; }

  bool deterministic() const { return kind != Kind::seeded_uniform; }
  /// "S", "seq:[i,j,...]" or "uniform:<seed>".
  std::string describe() const;
};

/// Transient, period and orbit of one run.
///
/// Times count synchronous steps; for a fixed-sequence schedule one unit is a
/// full pass over the sequence, and for seeded-uniform runs one unit is a
/// single update and the orbit is the fixed point the run converged to.
struct OrbitReport {
  std::size_t transient = 0;
  std::size_t period = 0;
  std::vector<Profile> orbit;
  /// Minimum margin_from_ties over all free nodes and orbit states; empty
  /// when every such score vector is fully tied.
  std::optional<Rational> min_margin;
  /// States at times 0 .. transient + period - 1.
  std::vector<Profile> trajectory;
  /// Targets at the same times (pinned nodes carry their pinned order).
  std::vector<Profile> targets;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bounded Borda dynamics on an influence network with persistent nodes.
class BordaSystem {
 public:
  BordaSystem(std::shared_ptr<const MoveGraph> graph, InfluenceNetwork network, PersistentConfig persistent,
              StepPolicy policy = {});

  const MoveGraph& graph() const { return *graph_; }
  std::shared_ptr<const MoveGraph> shared_graph() const { return graph_; }
  const PreferenceSpace& space() const { return graph_->space(); }
  const InfluenceNetwork& network() const { return network_; }
  const PersistentConfig& persistent() const { return persistent_; }
  const StepPolicy& policy() const { return policy_; }
  std::size_t size() const { return network_.size(); }
  const std::vector<Node>& free_nodes() const { return free_; }

  /// Throws std::invalid_argument when the profile has the wrong length,
  /// an unknown order id, or a pinned node off its pinned order.
  void check_profile(const Profile& profile) const;
  /// Copy of `profile` with pinned coordinates overwritten.
  Profile with_pins(Profile profile) const;

  ScoreVector aggregate_scores(const Profile& profile, Node i) const;
  OrderId target(const Profile& profile, Node i) const;
  Profile targets(const Profile& profile) const;

  Profile step_sync(const Profile& profile) const;
  /// Throws ScheduleError when i is pinned.
  Profile step_async(const Profile& profile, Node i) const;

  /// Iterates from `initial` until a state repeats (deterministic
  /// schedules) or a fixed point is reached (seeded-uniform). Throws
  /// BudgetExceeded after max_steps units.
  OrbitReport run_until_cycle(const Profile& initial, const Schedule& schedule, std::size_t max_steps) const;

  /// Every free node sits at its target.
  bool is_fixed_point(const Profile& profile) const;

  /// All profiles (over free nodes, pins fixed) with step_sync(p) == p.
  /// Throws BudgetExceeded when F(m)^|free| exceeds `budget`.
  std::vector<Profile> enumerate_fixed_points(std::size_t budget = 1'000'000) const;

  /// Minimum margin_from_ties over the free nodes' aggregate scores.
  std::optional<Rational> profile_margin(const Profile& profile) const;

 private:
  Profile apply_sequence(Profile profile, const std::vector<Node>& sequence) const;

  std::shared_ptr<const MoveGraph> graph_;
  InfluenceNetwork network_;
  PersistentConfig persistent_;
  StepPolicy policy_;
  std::vector<Node> free_;
};

/// Smaller of two margins, where an empty margin is infinite.
std::optional<Rational> min_margin(const std::optional<Rational>& a, const std::optional<Rational>& b);

/// Result of checking the frozen-targets property on a finished run.
struct FrozenTargetCheck {
  /// Targets are constant from some time on (only possible for p = 1).
  bool applicable = false;
  std::size_t frozen_from = 0;
  /// d_H(state, frozen target) drops by exactly one per step until zero.
  bool monotone = true;
  /// Every free node reached its target within its distance at frozen_from.
  bool reached_in_time = true;
  /// All frozen targets coincide.
  bool consensus = false;
  /// Steps after frozen_from until the run became stationary.
  std::size_t settle_steps = 0;
};

FrozenTargetCheck check_frozen_targets(const BordaSystem& system, const OrbitReport& report);

/// Re-simulates one lap of a synchronous orbit and checks it closes.
bool orbit_closes(const BordaSystem& system, const OrbitReport& report);

}  // namespace borda
