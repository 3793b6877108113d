#include "borda/theorems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "borda/random.hpp"

namespace borda {
namespace {

using json = nlohmann::ordered_json;

std::string margin_text(const std::optional<Rational>& margin) { return margin ? margin->to_string() : "inf"; }

json profile_json(const PreferenceSpace& space, const Profile& profile) { return profile_text(space, profile); }

json report_summary(const PreferenceSpace& space, const OrbitReport& report) {
  json out;
  out["mu"] = report.transient;
  out["period"] = report.period;
  out["min_margin"] = margin_text(report.min_margin);
  json orbit = json::array();
  for (const auto& s : report.orbit) orbit.push_back(profile_json(space, s));
  out["orbit"] = std::move(orbit);
  return out;
}

// States at times 0..steps for deterministic schedules.
std::vector<Profile> simulate(const ScenarioConfig& sc, std::size_t steps) {
  std::vector<Profile> out{sc.initial};
  out.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t) {
    Profile next = out.back();
    if (sc.schedule.kind == Schedule::Kind::synchronous) {
      next = sc.system.step_sync(next);
    } else {
      for (Node i : sc.schedule.sequence) next = sc.system.step_async(next, i);
    }
    out.push_back(std::move(next));
  }
  return out;
}

// Smallest d dividing seq.size() with seq cyclically d-periodic.
std::size_t cyclic_period(const std::vector<Profile>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) ok = seq[t] == seq[(t + d) % n];
    if (ok) return d;
  }
  return n;
}

}  // namespace

ScenarioConfig ScenarioConfig::with_network(InfluenceNetwork network) const {
  return ScenarioConfig{label,
                        BordaSystem(system.shared_graph(), std::move(network), system.persistent(), system.policy()),
                        initial,
                        schedule,
                        max_steps,
                        node_names};
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::refuted:
      return "refuted";
    case Verdict::hypothesis_not_met:
      return "hypothesis_not_met";
    case Verdict::not_certifiable:
      return "not_certifiable";
    case Verdict::degenerate:
      return "degenerate";
  }
  return "unknown";
}

json VerificationOutcome::to_json() const {
  json out;
  out["claim"] = claim;
  out["passed"] = passed();
  out["verdict"] = to_string(verdict);
  out["evidence"] = evidence;
  return out;
}

std::vector<std::string> profile_text(const PreferenceSpace& space, const Profile& profile) {
  std::vector<std::string> out;
  out.reserve(profile.size());
  for (OrderId id : profile) out.push_back(space.to_text(id));
  return out;
}

ScenarioConfig build_traveling_wave(std::size_t length, const std::vector<OrderId>& h_cycle,
                                    std::shared_ptr<const MoveGraph> graph) {
  const std::size_t k = h_cycle.size();
  if (k < 3) throw std::domain_error("a move-graph cycle needs at least 3 orders");
  if (std::set<OrderId>(h_cycle.begin(), h_cycle.end()).size() != k) {
    throw std::domain_error("move-graph cycle repeats an order");
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (h_cycle[r] >= graph->order_count() || !graph->adjacent(h_cycle[r], h_cycle[(r + 1) % k])) {
      throw std::domain_error("consecutive orders of the cycle are not adjacent in the move graph");
    }
  }
  if (length < 3) throw std::invalid_argument("the influence cycle needs at least 3 nodes");
  if (length % k != 0) {
    throw std::invalid_argument("cycle length " + std::to_string(k) + " does not divide ring length " +
                                std::to_string(length) + "; the wave initialization would be inconsistent");
  }
  InfluenceNetwork::Matrix w(length, std::vector<Rational>(length));
  Profile initial(length);
  for (std::size_t i = 0; i < length; ++i) {
    w[i][(i + length - 1) % length] = Rational(1);
    initial[i] = h_cycle[i % k];
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < length; ++i) names.push_back("n" + std::to_string(i));
  return ScenarioConfig{"traveling-wave-l" + std::to_string(length) + "-k" + std::to_string(k),
                        BordaSystem(std::move(graph), InfluenceNetwork(std::move(w)), {}),
                        std::move(initial),
                        Schedule::synchronous(),
                        100'000,
                        std::move(names)};
}

ScenarioConfig build_gadget(int m, const WeakOrder& rho, const Rational& epsilon,
                            std::optional<std::pair<OrderId, OrderId>> initial) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) throw std::invalid_argument("gadget needs 0 < epsilon < 1");
  if (!rho.is_strict()) throw std::invalid_argument("gadget needs a strict base order");
  auto graph = cover_graph(m);
  const auto& space = graph->space();
  const OrderId rho_id = space.id_of(rho);
  const OrderId anti = space.antipode(rho_id);
  constexpr Node i = 0, j = 1, p = 2, q = 3;
  InfluenceNetwork::Matrix w(4, std::vector<Rational>(4));
  w[i][j] = Rational(1) - epsilon;
  w[i][p] = epsilon;
  w[j][i] = Rational(1) - epsilon;
  w[j][q] = epsilon;
  w[p][p] = Rational(1);
  w[q][q] = Rational(1);
  const auto [si, sj] = initial.value_or(std::pair{rho_id, anti});
  auto label = "gadget-m" + std::to_string(m) + "-" + space.to_text(rho_id) + "-eps" + epsilon.to_string();
  return ScenarioConfig{std::move(label),
                        BordaSystem(graph, InfluenceNetwork(std::move(w)),
                                    PersistentConfig::contrarian(space, {p}, {q}, rho_id)),
                        Profile{si, sj, rho_id, anti},
                        Schedule::synchronous(),
                        100'000,
                        {"i", "j", "p", "q"}};
}

VerificationOutcome verify_traveling_wave(const ScenarioConfig& sc, std::size_t expected_k) {
  VerificationOutcome out;
  out.claim = "directed-cycle copying yields a traveling wave of period " + std::to_string(expected_k);
  const auto& sys = sc.system;
  const auto& net = sys.network();
  const std::size_t n = sys.size();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(sys.space(), sc.initial);
  ev["expected_k"] = expected_k;

  // Hypotheses re-read from the network: no pins, each node copies a unique
  // predecessor, and the predecessors close into one ring.
  std::vector<Node> pred(n);
  std::string problem;
  if (!sys.persistent().pinned.empty()) problem = "persistent nodes present";
  for (Node i = 0; i < n && problem.empty(); ++i) {
    const auto& in = net.in_neighbors(i);
    if (in.size() != 1 || in.front() == i) {
      problem = "node " + std::to_string(i) + " does not copy a unique predecessor";
    } else {
      pred[i] = in.front();
    }
  }
  if (problem.empty()) {
    Node v = 0;
    std::size_t steps = 0;
    do {
      v = pred[v];
      ++steps;
    } while (v != 0 && steps <= n);
    if (steps != n) problem = "predecessors do not form a single ring";
  }
  if (!problem.empty()) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = problem;
    return out;
  }

  const auto report = sc.run();
  ev["measured"] = report_summary(sys.space(), report);

  std::optional<json> violation;
  bool steps_reach = true;
  for (std::size_t t = 0; t < report.trajectory.size() && !violation; ++t) {
    const auto& state = report.trajectory[t];
    for (Node i = 0; i < n; ++i) {
      if (report.targets[t][i] != state[pred[i]]) {
        violation = json{{"step", t}, {"node", i}, {"target", sys.space().to_text(report.targets[t][i])},
                         {"predecessor_state", sys.space().to_text(state[pred[i]])}};
        break;
      }
      if (state[i] != state[pred[i]] && !sys.graph().adjacent(state[i], state[pred[i]])) steps_reach = false;
    }
  }
  ev["target_copies_predecessor"] = !violation.has_value();
  if (violation) ev["hypothesis_violation"] = *violation;
  ev["one_step_reaches_predecessor"] = steps_reach;

  if (violation) {
    out.verdict = Verdict::hypothesis_not_met;
  } else if (!steps_reach) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "some node is more than one move away from its predecessor";
  } else if (report.period == 1) {
    out.verdict = Verdict::degenerate;
    ev["reason"] = "non-oscillating: the run settles on a fixed point";
  } else if (report.period == expected_k && report.transient == 0) {
    out.verdict = Verdict::confirmed;
  } else {
    out.verdict = Verdict::refuted;
    ev["reason"] = "measured period " + std::to_string(report.period) + " with transient " +
                   std::to_string(report.transient);
  }
  return out;
}

Verdict classify_forced_run(std::size_t period, const std::optional<Rational>& margin) {
  if (period <= 1 || period % 2 != 0) return Verdict::refuted;
  // An all-tied orbit has no active hyperplane and an empty margin.
  if (margin && margin->sign() <= 0) return Verdict::not_certifiable;
  return Verdict::confirmed;
}

VerificationOutcome verify_forced_even_period(const ScenarioConfig& sc, const ForcedPeriodOptions& options) {
  VerificationOutcome out;
  out.claim = "contrarian camps on a period-2 class force an even period";
  const auto& sys = sc.system;
  const auto& space = sys.space();
  const auto& net = sys.network();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(space, sc.initial);

  const auto baseline = sc.run();
  ev["baseline"] = report_summary(space, baseline);

  const auto& camps = sys.persistent().camps;
  if (!camps || camps->plus.empty() || camps->minus.empty()) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "persistent nodes do not form two nonempty contrarian camps";
    ev["oscillates"] = baseline.period > 1;
    return out;
  }

  const NodeSet free_set(sys.free_nodes().begin(), sys.free_nodes().end());
  const auto structure = class_structure(net, free_set);
  const CommunicatingClass* cls = nullptr;
  for (const auto& c : structure.classes) {
    if (c.closed && c.period == 2) {
      cls = &c;
      break;
    }
  }
  if (!cls) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "no closed communicating class of period 2 among free nodes";
    ev["oscillates"] = baseline.period > 1;
    return out;
  }
  const auto& [part_a, part_b] = *cls->cyclic_parts;
  ev["class"] = cls->nodes;
  ev["parts"] = {part_a, part_b};

  // Structural presence, both in the strict form (one node per part hearing
  // both camps) and per part (each camp heard somewhere in each part).
  auto hears = [&](Node v, const std::vector<Node>& camp) {
    return std::any_of(camp.begin(), camp.end(), [&](Node p) { return net.weight(v, p).sign() > 0; });
  };
  auto strict_presence = [&](const std::vector<Node>& part) {
    return std::any_of(part.begin(), part.end(), [&](Node v) { return hears(v, camps->plus) && hears(v, camps->minus); });
  };
  auto part_presence = [&](const std::vector<Node>& part, const std::vector<Node>& camp) {
    return std::any_of(part.begin(), part.end(), [&](Node v) { return hears(v, camp); });
  };
  ev["presence_single_node"] = strict_presence(part_a) && strict_presence(part_b);
  ev["presence_per_part"] = (part_presence(part_a, camps->plus) || part_presence(part_a, camps->minus)) &&
                            (part_presence(part_b, camps->plus) || part_presence(part_b, camps->minus)) &&
                            (part_presence(part_a, camps->plus) || part_presence(part_b, camps->plus)) &&
                            (part_presence(part_a, camps->minus) || part_presence(part_b, camps->minus));

  try {
    const auto fixed = sys.enumerate_fixed_points(options.fixed_point_budget);
    ev["fixed_points"] = fixed.size();
    json listed = json::array();
    for (std::size_t k = 0; k < fixed.size() && k < 16; ++k) listed.push_back(profile_json(space, fixed[k]));
    ev["fixed_point_examples"] = std::move(listed);
  } catch (const BudgetExceeded&) {
    ev["fixed_points"] = "over budget";
  }

  auto record_witness = [&](const Profile& start, const OrbitReport& report, Verdict verdict) {
    out.verdict = verdict;
    ev["witness_initial"] = profile_json(space, start);
    ev["witness"] = report_summary(space, report);
  };

  Verdict verdict = classify_forced_run(baseline.period, baseline.min_margin);
  if (verdict == Verdict::confirmed) {
    record_witness(sc.initial, baseline, verdict);
    ev["swept"] = 0;
    return out;
  }
  bool margin_failure = verdict == Verdict::not_certifiable;

  // Sweep initial states on the class, other coordinates as configured.
  std::size_t swept = 0;
  std::size_t total = 1;
  bool within_budget = options.sweep_budget > 0;
  for (std::size_t k = 0; k < cls->nodes.size() && within_budget; ++k) {
    if (total > options.sweep_budget / space.size()) within_budget = false;
    total *= space.size();
  }
  if (within_budget) {
    Profile start = sc.initial;
    for (Node v : cls->nodes) start[v] = 0;
    for (std::size_t count = 0; count < total; ++count) {
      ++swept;
      const auto report = sys.run_until_cycle(start, Schedule::synchronous(), sc.max_steps);
      verdict = classify_forced_run(report.period, report.min_margin);
      if (verdict == Verdict::confirmed) {
        record_witness(start, report, verdict);
        ev["swept"] = swept;
        return out;
      }
      margin_failure = margin_failure || verdict == Verdict::not_certifiable;
      for (Node v : cls->nodes) {
        if (++start[v] < space.size()) break;
        start[v] = 0;
      }
    }
  }
  ev["swept"] = swept;
  ev["reason"] = margin_failure ? "even period found only on orbits touching a tie hyperplane"
                                : "no even-period orbit with period above one was found";
  out.verdict = margin_failure ? Verdict::not_certifiable : Verdict::refuted;
  return out;
}

VerificationOutcome verify_even_period_lifting(const ScenarioConfig& sc) {
  VerificationOutcome out;
  out.claim = "a k-cycle of the two-step half map lifts to a 2k-cycle of the synchronous map";
  const auto& sys = sc.system;
  const auto& space = sys.space();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(space, sc.initial);

  const NodeSet free_set(sys.free_nodes().begin(), sys.free_nodes().end());
  const auto parts = bipartition(sys.network(), free_set);
  if (!parts || parts->first.empty() || parts->second.empty()) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "influence among free nodes does not cross a bipartition";
    return out;
  }
  const auto& [part_a, part_b] = *parts;
  ev["parts"] = {part_a, part_b};

  // Two-step map iterated directly on full states; the half map is its
  // action read on the A side.
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<Profile> visited;
  auto key = [](const Profile& p) {
    std::size_t h = 1469598103934665603ULL;
    for (OrderId v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  };
  Profile state = sc.initial;
  std::size_t cycle_start = 0;
  for (std::size_t t = 0;; ++t) {
    auto& bucket = buckets[key(state)];
    const auto hit = std::find_if(bucket.begin(), bucket.end(), [&](std::size_t s) { return visited[s] == state; });
    if (hit != bucket.end()) {
      cycle_start = *hit;
      break;
    }
    if (t > sc.max_steps) throw BudgetExceeded("two-step map did not cycle within the step budget");
    bucket.push_back(visited.size());
    visited.push_back(state);
    state = sys.step_sync(sys.step_sync(state));
  }
  std::vector<Profile> half_cycle;
  for (std::size_t t = cycle_start; t < visited.size(); ++t) {
    Profile half;
    for (Node a : part_a) half.push_back(visited[t][a]);
    half_cycle.push_back(std::move(half));
  }
  const std::size_t k = cyclic_period(half_cycle);
  ev["half_map_k"] = k;
  ev["half_map_cycle_start"] = cycle_start;

  const auto report = sc.run();
  ev["measured"] = report_summary(space, report);
  ev["lifted_period"] = 2 * k;

  if (report.period == 1) {
    out.verdict = Verdict::degenerate;
    ev["reason"] = "trivial case: the lifted orbit is a fixed point";
  } else if (report.period == 2 * k) {
    out.verdict = Verdict::confirmed;
  } else {
    out.verdict = Verdict::refuted;
    ev["reason"] = "measured period " + std::to_string(report.period) + " differs from 2k = " + std::to_string(2 * k);
  }
  return out;
}

Rational robustness_bound(const Rational& margin, int m, std::size_t n) {
  return margin / Rational(2 * static_cast<std::int64_t>(m - 1) * static_cast<std::int64_t>(n));
}

VerificationOutcome verify_robustness(const ScenarioConfig& sc, std::size_t trials, std::uint64_t seed,
                                      std::optional<Rational> epsilon_override) {
  VerificationOutcome out;
  out.claim = "the periodic symbolic orbit survives weight perturbations below the margin bound";
  const auto& sys = sc.system;
  const auto& space = sys.space();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(space, sc.initial);

  const auto baseline = sc.run();
  ev["baseline"] = report_summary(space, baseline);
  if (!baseline.min_margin || baseline.min_margin->sign() <= 0) {
    out.verdict = Verdict::not_certifiable;
    ev["reason"] = "orbit has no positive margin from the tie hyperplanes";
    return out;
  }
  const Rational bound = robustness_bound(*baseline.min_margin, sc.alternatives(), sys.size());
  const Rational epsilon = epsilon_override.value_or(bound / Rational(2));
  ev["epsilon_star"] = bound.to_string();
  ev["epsilon"] = epsilon.to_string();
  ev["bound_formula"] = "delta / (2 (m-1) n)";
  ev["trials"] = trials;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = mix_seed(seed, trial);
    const auto perturbed = perturb_weights(sys.network(), epsilon, trial_seed);
    const auto report = sc.with_network(perturbed).run();
    if (report.targets == baseline.targets && report.trajectory == baseline.trajectory &&
        report.period == baseline.period) {
      continue;
    }
    std::size_t diverge = 0;
    const std::size_t common = std::min(report.trajectory.size(), baseline.trajectory.size());
    while (diverge < common && report.trajectory[diverge] == baseline.trajectory[diverge] &&
           report.targets[diverge] == baseline.targets[diverge]) {
      ++diverge;
    }
    out.verdict = Verdict::refuted;
    ev["failed_trial"] = trial;
    ev["failed_seed"] = trial_seed;
    ev["first_divergence_step"] = diverge;
    ev["perturbed"] = report_summary(space, report);
    ev["max_weight_change"] = max_entry_distance(sys.network(), perturbed).to_string();
    return out;
  }
  out.verdict = Verdict::confirmed;
  return out;
}

VerificationOutcome verify_unreachable_persistence(const ScenarioConfig& sc,
                                                   const std::map<Node, OrderId>& alt_pins) {
  VerificationOutcome out;
  out.claim = "persistent nodes do not affect free nodes they cannot reach";
  const auto& sys = sc.system;
  const auto& space = sys.space();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(space, sc.initial);

  for (const auto& [v, order] : alt_pins) {
    if (!sys.persistent().is_pinned(v)) {
      out.verdict = Verdict::hypothesis_not_met;
      ev["reason"] = "alternative pins name non-persistent node " + std::to_string(v);
      return out;
    }
    if (order >= space.size()) throw std::invalid_argument("alternative pin order id out of range");
  }
  if (!sc.schedule.deterministic()) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "paired runs need a deterministic schedule";
    return out;
  }
  const NodeSet reached = reach(sys.network(), sys.persistent().nodes());
  std::vector<Node> unreached;
  for (Node v : sys.free_nodes()) {
    if (!reached.contains(v)) unreached.push_back(v);
  }
  ev["reach"] = std::vector<Node>(reached.begin(), reached.end());
  ev["unreached_free"] = unreached;
  if (unreached.empty()) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "every free node is reachable from the persistent set";
    return out;
  }

  PersistentConfig twin_pins;
  twin_pins.pinned = sys.persistent().pinned;
  for (const auto& [v, order] : alt_pins) twin_pins.pinned[v] = order;
  ScenarioConfig twin{sc.label + "-repinned",
                      BordaSystem(sys.shared_graph(), sys.network(), twin_pins, sys.policy()),
                      sc.initial,
                      sc.schedule,
                      sc.max_steps,
                      sc.node_names};
  twin.initial = twin.system.with_pins(twin.initial);

  const auto first = sc.run();
  const auto second = twin.run();
  const std::size_t horizon = std::max(first.trajectory.size(), second.trajectory.size()) +
                              std::max(first.period, second.period);
  const auto traj_a = simulate(sc, horizon);
  const auto traj_b = simulate(twin, horizon);
  ev["compared_steps"] = horizon + 1;
  ev["periods"] = {first.period, second.period};
  for (std::size_t t = 0; t <= horizon; ++t) {
    for (Node v = 0; v < sys.size(); ++v) {
      if (reached.contains(v)) continue;
      if (traj_a[t][v] != traj_b[t][v]) {
        out.verdict = Verdict::refuted;
        ev["counterexample"] = json{{"step", t}, {"node", v}, {"state", space.to_text(traj_a[t][v])},
                                    {"twin_state", space.to_text(traj_b[t][v])}};
        return out;
      }
    }
  }
  out.verdict = Verdict::confirmed;
  return out;
}

bool is_single_peaked(const WeakOrder& order, const std::vector<Alternative>& axis) {
  const auto m = static_cast<std::size_t>(order.alternatives());
  if (axis.size() != m) throw std::invalid_argument("axis must list every alternative once");
  std::vector<int> pos(m, -1);
  for (std::size_t r = 0; r < m; ++r) {
    const auto a = static_cast<std::size_t>(axis[r]);
    if (axis[r] < 0 || a >= m || pos[a] >= 0) throw std::invalid_argument("axis must be a permutation");
    pos[a] = static_cast<int>(r);
  }
  const auto& peak = order.classes().front();
  int lo = static_cast<int>(m);
  int hi = -1;
  for (Alternative a : peak) {
    lo = std::min(lo, pos[static_cast<std::size_t>(a)]);
    hi = std::max(hi, pos[static_cast<std::size_t>(a)]);
  }
  if (hi - lo + 1 != static_cast<int>(peak.size())) return false;
  // Walking outward from the peak, each step must be strictly worse.
  for (int r = lo - 1; r > 0; --r) {
    if (order.level_of(axis[static_cast<std::size_t>(r)]) >= order.level_of(axis[static_cast<std::size_t>(r - 1)])) {
      return false;
    }
  }
  for (int r = hi + 1; r + 1 < static_cast<int>(m); ++r) {
    if (order.level_of(axis[static_cast<std::size_t>(r)]) >= order.level_of(axis[static_cast<std::size_t>(r + 1)])) {
      return false;
    }
  }
  return true;
}

std::vector<WeakOrder> enumerate_single_peaked(int m, const std::vector<Alternative>& axis) {
  std::vector<WeakOrder> out;
  for (auto& order : enumerate_weak_orders(m)) {
    if (is_single_peaked(order, axis)) out.push_back(std::move(order));
  }
  return out;
}

VerificationOutcome verify_single_peaked_invariance(const ScenarioConfig& sc, const std::vector<Alternative>& axis) {
  VerificationOutcome out;
  out.claim = "single-peaked targets keep the profile single-peaked";
  const auto& sys = sc.system;
  const auto& space = sys.space();
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["initial"] = profile_json(space, sc.initial);
  ev["axis"] = axis;
  ev["definition"] =
      "top class is a contiguous axis interval; on each side, alternatives farther from it rank strictly lower";

  auto sp = [&](OrderId id) { return is_single_peaked(space.order(id), axis); };
  for (Node v = 0; v < sys.size(); ++v) {
    if (!sp(sc.initial[v])) {
      out.verdict = Verdict::hypothesis_not_met;
      ev["reason"] = "initial state of node " + std::to_string(v) + " is not single-peaked";
      return out;
    }
  }

  const auto report = sc.run();
  ev["measured"] = report_summary(space, report);
  for (std::size_t t = 0; t < report.trajectory.size(); ++t) {
    for (Node v : sys.free_nodes()) {
      if (!sp(report.trajectory[t][v])) {
        out.verdict = Verdict::refuted;
        ev["counterexample"] = json{{"step", t},
                                    {"node", v},
                                    {"state", space.to_text(report.trajectory[t][v])},
                                    {"previous_state", space.to_text(report.trajectory[t - 1][v])},
                                    {"previous_target", space.to_text(report.targets[t - 1][v])}};
        return out;
      }
    }
    for (Node v : sys.free_nodes()) {
      if (!sp(report.targets[t][v])) {
        out.verdict = Verdict::hypothesis_not_met;
        ev["reason"] = "a target left the single-peaked domain";
        ev["target_violation"] =
            json{{"step", t}, {"node", v}, {"target", space.to_text(report.targets[t][v])}};
        return out;
      }
    }
  }
  out.verdict = Verdict::confirmed;
  return out;
}

std::variant<ScenarioConfig, StrictRestrictionReport> restrict_to_strict(const ScenarioConfig& sc) {
  const auto& sys = sc.system;
  const auto& space = sys.space();
  StrictRestrictionReport report;
  for (OrderId id : sc.initial) {
    if (!space.order(id).is_strict()) report.strict_inputs = false;
  }
  std::vector<bool> keep(space.size());
  for (OrderId id = 0; id < space.size(); ++id) {
    keep[id] = space.order(id).is_strict();
    if (keep[id]) ++report.strict_orders;
  }
  auto induced = std::make_shared<const MoveGraph>(sys.graph().induced(keep));
  report.induced_edges = induced->edge_count();
  std::vector<bool> seen(space.size(), false);
  for (OrderId id = 0; id < space.size(); ++id) {
    if (!keep[id] || seen[id]) continue;
    ++report.components;
    for (OrderId u = 0; u < space.size(); ++u) {
      if (keep[u] && induced->distance(id, u) != MoveGraph::kUnreachable) seen[u] = true;
    }
  }
  if (!report.strict_inputs) {
    report.reason = "initial or pinned states include ties";
    return report;
  }
  if (report.components != 1) {
    report.reason = "strict orders form " + std::to_string(report.components) +
                    " components of the induced move graph (" + std::to_string(report.induced_edges) +
                    " edges); no bounded step connects two strict orders";
    return report;
  }
  return ScenarioConfig{sc.label + "-strict",
                        BordaSystem(induced, sys.network(), sys.persistent(), sys.policy()),
                        sc.initial,
                        sc.schedule,
                        sc.max_steps,
                        sc.node_names};
}

}  // namespace borda
