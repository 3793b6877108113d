#include "borda/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "borda/random.hpp"

namespace borda {
namespace {

struct ProfileHash {
  std::size_t operator()(const Profile& p) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (OrderId v : p) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

PersistentConfig PersistentConfig::contrarian(const PreferenceSpace& space, std::vector<Node> plus,
                                              std::vector<Node> minus, OrderId rho) {
  PersistentConfig pc;
  for (Node p : plus) pc.pinned[p] = rho;
  for (Node q : minus) {
    if (pc.pinned.contains(q)) throw std::invalid_argument("camps overlap at node " + std::to_string(q));
    pc.pinned[q] = space.antipode(rho);
  }
  pc.camps = Camps{std::move(plus), std::move(minus), rho};
  return pc;
}

NodeSet PersistentConfig::nodes() const {
  NodeSet out;
  for (const auto& [v, order] : pinned) out.insert(v);
  return out;
}

std::string Schedule::describe() const {
  switch (kind) {
    case Kind::synchronous:
      return "S";
    case Kind::sequence: {
      std::ostringstream out;
      out << "seq:[";
      for (std::size_t k = 0; k < sequence.size(); ++k) out << (k ? "," : "") << sequence[k];
      out << "]";
      return out.str();
    }
    case Kind::seeded_uniform:
      return "uniform:" + std::to_string(seed);
  }
  return "";
}

BordaSystem::BordaSystem(std::shared_ptr<const MoveGraph> graph, InfluenceNetwork network,
                         PersistentConfig persistent, StepPolicy policy)
    : graph_(std::move(graph)), network_(std::move(network)), persistent_(std::move(persistent)), policy_(policy) {
  if (!graph_) throw std::invalid_argument("dynamics need a move graph");
  for (const auto& [v, order] : persistent_.pinned) {
    if (v >= network_.size()) throw std::invalid_argument("pinned node " + std::to_string(v) + " out of range");
    if (order >= space().size()) throw std::invalid_argument("pinned order id out of range");
  }
  if (const auto& camps = persistent_.camps) {
    std::size_t members = 0;
    for (Node p : camps->plus) {
      if (!persistent_.is_pinned(p) || persistent_.pinned.at(p) != camps->rho) {
        throw std::invalid_argument("plus-camp node " + std::to_string(p) + " is not pinned to rho");
      }
      ++members;
    }
    for (Node q : camps->minus) {
      if (!persistent_.is_pinned(q) || persistent_.pinned.at(q) != space().antipode(camps->rho)) {
        throw std::invalid_argument("minus-camp node " + std::to_string(q) + " is not pinned to the antipode of rho");
      }
      ++members;
    }
    if (members != persistent_.pinned.size()) {
      throw std::invalid_argument("camps must cover every pinned node exactly once");
    }
  }
  for (Node v = 0; v < network_.size(); ++v) {
    if (!persistent_.is_pinned(v)) free_.push_back(v);
  }
}

void BordaSystem::check_profile(const Profile& profile) const {
  if (profile.size() != size()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " states for " +
                                std::to_string(size()) + " nodes");
  }
  for (OrderId id : profile) {
    if (id >= space().size()) throw std::invalid_argument("profile holds an unknown order id");
  }
  for (const auto& [v, order] : persistent_.pinned) {
    if (profile[v] != order) throw std::invalid_argument("pinned node " + std::to_string(v) + " is off its pinned order");
  }
}

Profile BordaSystem::with_pins(Profile profile) const {
  profile.resize(size(), 0);
  for (const auto& [v, order] : persistent_.pinned) profile[v] = order;
  return profile;
}

ScoreVector BordaSystem::aggregate_scores(const Profile& profile, Node i) const {
  ScoreVector s(static_cast<std::size_t>(space().alternatives()));
  for (Node j : network_.in_neighbors(i)) {
    const Rational& w = network_.weight(i, j);
    const auto& b = space().scores(profile[j]);
    for (std::size_t a = 0; a < s.size(); ++a) s[a] += w * b[a];
  }
  return s;
}

OrderId BordaSystem::target(const Profile& profile, Node i) const {
  return space().project_id(aggregate_scores(profile, i));
}

Profile BordaSystem::targets(const Profile& profile) const {
  Profile out = profile;
  for (Node i : free_) out[i] = target(profile, i);
  return out;
}

Profile BordaSystem::step_sync(const Profile& profile) const {
  Profile next = profile;
  for (Node i : free_) next[i] = graph_->step(policy_, profile[i], target(profile, i));
  return next;
}

Profile BordaSystem::step_async(const Profile& profile, Node i) const {
  if (i >= size()) throw ScheduleError("scheduled node " + std::to_string(i) + " out of range");
  if (persistent_.is_pinned(i)) throw ScheduleError("scheduled node " + std::to_string(i) + " is persistent");
  Profile next = profile;
  next[i] = graph_->step(policy_, profile[i], target(profile, i));
  return next;
}

Profile BordaSystem::apply_sequence(Profile profile, const std::vector<Node>& sequence) const {
  for (Node i : sequence) profile = step_async(profile, i);
  return profile;
}

bool BordaSystem::is_fixed_point(const Profile& profile) const {
  check_profile(profile);
  const bool targets_met =
      std::all_of(free_.begin(), free_.end(), [&](Node i) { return target(profile, i) == profile[i]; });
  if (targets_met && step_sync(profile) != profile) {
    throw std::logic_error("profile meets every target but the synchronous step moves it");
  }
  return targets_met;
}

std::vector<Profile> BordaSystem::enumerate_fixed_points(std::size_t budget) const {
  const std::size_t orders = space().size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < free_.size(); ++k) {
    if (total > budget / orders) throw BudgetExceeded("fixed-point enumeration exceeds the profile budget");
    total *= orders;
  }
  if (total > budget) throw BudgetExceeded("fixed-point enumeration exceeds the profile budget");

  std::vector<Profile> out;
  Profile profile = with_pins(Profile(size(), 0));
  for (std::size_t count = 0; count < total; ++count) {
    if (step_sync(profile) == profile) out.push_back(profile);
    // Odometer over the free coordinates.
    for (Node i : free_) {
      if (++profile[i] < orders) break;
      profile[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Rational> min_margin(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> BordaSystem::profile_margin(const Profile& profile) const {
  std::optional<Rational> best;
  for (Node i : free_) best = min_margin(best, margin_from_ties(aggregate_scores(profile, i)));
  return best;
}

OrbitReport BordaSystem::run_until_cycle(const Profile& initial, const Schedule& schedule,
                                         std::size_t max_steps) const {
  check_profile(initial);
  for (Node i : schedule.sequence) {
    if (i >= size() || persistent_.is_pinned(i)) throw ScheduleError("schedule names a non-free node " + std::to_string(i));
  }
  OrbitReport report;

  if (schedule.kind == Schedule::Kind::seeded_uniform) {
    if (free_.empty()) throw ScheduleError("asynchronous schedule needs at least one free node");
    SeededRng rng(schedule.seed);
    Profile state = initial;
    for (std::size_t t = 0;; ++t) {
      report.trajectory.push_back(state);
      report.targets.push_back(targets(state));
      if (is_fixed_point(state)) {
        report.transient = t;
        report.period = 1;
        report.orbit = {state};
        report.min_margin = profile_margin(state);
        return report;
      }
      if (t >= max_steps) throw BudgetExceeded("no fixed point within " + std::to_string(max_steps) + " updates");
      state = step_async(state, free_[rng.below(free_.size())]);
    }
  }

  std::unordered_map<Profile, std::size_t, ProfileHash> first_seen;
  Profile state = initial;
  for (std::size_t t = 0;; ++t) {
    const auto [it, fresh] = first_seen.emplace(state, t);
    if (!fresh) {
      report.transient = it->second;
      report.period = t - it->second;
      report.orbit.assign(report.trajectory.begin() + static_cast<std::ptrdiff_t>(report.transient),
                          report.trajectory.end());
      for (const auto& s : report.orbit) report.min_margin = min_margin(report.min_margin, profile_margin(s));
      return report;
    }
    if (t >= max_steps) throw BudgetExceeded("no repeated state within " + std::to_string(max_steps) + " steps");
    report.trajectory.push_back(state);
    report.targets.push_back(targets(state));
    state = schedule.kind == Schedule::Kind::synchronous ? step_sync(state) : apply_sequence(state, schedule.sequence);
  }
}

FrozenTargetCheck check_frozen_targets(const BordaSystem& system, const OrbitReport& report) {
  FrozenTargetCheck check;
  const auto& targets = report.targets;
  if (targets.empty()) return check;
  // Targets on the orbit must be constant; then walk back to the first
  // time they took that value for good.
  const auto orbit_start = report.transient;
  for (std::size_t t = orbit_start; t < targets.size(); ++t) {
    if (targets[t] != targets.back()) return check;
  }
  std::size_t t0 = orbit_start;
  while (t0 > 0 && targets[t0 - 1] == targets.back()) --t0;
  check.applicable = true;
  check.frozen_from = t0;

  const auto& graph = system.graph();
  const auto& frozen = targets.back();
  const auto& traj = report.trajectory;
  std::optional<OrderId> common;
  check.consensus = true;
  for (Node i : system.free_nodes()) {
    if (!common) common = frozen[i];
    if (frozen[i] != *common) check.consensus = false;
    const auto d0 = graph.distance(traj[t0][i], frozen[i]);
    std::size_t reached = traj.size();
    for (std::size_t t = t0; t < traj.size(); ++t) {
      const auto d = graph.distance(traj[t][i], frozen[i]);
      if (d == 0 && reached == traj.size()) reached = t;
      if (t + 1 < traj.size()) {
        const auto next = graph.distance(traj[t + 1][i], frozen[i]);
        if (next > d) check.monotone = false;
      }
    }
    // The final trajectory state is the fixed point, which sits on target.
    if (reached == traj.size() || reached - t0 > d0) check.reached_in_time = false;
  }
  check.settle_steps = report.transient > t0 ? report.transient - t0 : 0;
  return check;
}

bool orbit_closes(const BordaSystem& system, const OrbitReport& report) {
  if (report.orbit.empty() || report.orbit.size() != report.period) return false;
  for (std::size_t t = 0; t < report.period; ++t) {
    if (system.step_sync(report.orbit[t]) != report.orbit[(t + 1) % report.period]) return false;
  }
  // Minimal transient: the state before the orbit is not on it.
  if (report.transient > 0) {
    const auto& before = report.trajectory[report.transient - 1];
    if (std::find(report.orbit.begin(), report.orbit.end(), before) != report.orbit.end()) return false;
  }
  return true;
}

}  // namespace borda
