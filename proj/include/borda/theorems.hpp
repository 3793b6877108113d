#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "borda/dynamics.hpp"

namespace borda {

/// One experiment end to end: dynamics, initial profile and schedule.
struct ScenarioConfig {
  std::string label;
  BordaSystem system;
  Profile initial;
  Schedule schedule = Schedule::synchronous();
  std::size_t max_steps = 100'000;
  std::vector<std::string> node_names;

  int alternatives() const { return system.space().alternatives(); }
  OrbitReport run() const { return system.run_until_cycle(initial, schedule, max_steps); }
  /// Copy with a different network; pins, initial profile and schedule kept.
  ScenarioConfig with_network(InfluenceNetwork network) const;
};

enum class Verdict {
  confirmed,
  refuted,
  hypothesis_not_met,
  not_certifiable,
  degenerate,
};

std::string to_string(Verdict verdict);

struct VerificationOutcome {
  std::string claim;
  Verdict verdict = Verdict::refuted;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();

  bool passed() const { return verdict == Verdict::confirmed; }
  nlohmann::ordered_json to_json() const;
};

/// Directed l-cycle where node i copies node i-1 with weight 1, no pins,
/// and node i starts at h_cycle[i mod k]. Throws std::domain_error when
/// h_cycle is not a simple cycle of the move graph and
/// std::invalid_argument when k does not divide l.
ScenarioConfig build_traveling_wave(std::size_t length, const std::vector<OrderId>& h_cycle,
                                    std::shared_ptr<const MoveGraph> graph);

/// Four nodes i, j, p, q: i listens to j (1 - eps) and p (eps), j listens to
/// i (1 - eps) and q (eps); p is pinned to rho and q to its antipode.
/// Pinned rows carry a unit self-loop. Throws std::invalid_argument unless
/// 0 < eps < 1 and rho is strict.
ScenarioConfig build_gadget(int m, const WeakOrder& rho, const Rational& epsilon,
                            std::optional<std::pair<OrderId, OrderId>> initial = std::nullopt);

VerificationOutcome verify_traveling_wave(const ScenarioConfig& sc, std::size_t expected_k);

struct ForcedPeriodOptions {
  /// Profiles swept over the free class when the configured start does not
  /// oscillate; zero disables the sweep.
  std::size_t sweep_budget = 1'000'000;
  std::size_t fixed_point_budget = 1'000'000;
};

VerificationOutcome verify_forced_even_period(const ScenarioConfig& sc, const ForcedPeriodOptions& options = {});

/// Pass/fail logic for one forced-oscillation run: confirmed only for an
/// even period above one with a positive margin.
Verdict classify_forced_run(std::size_t period, const std::optional<Rational>& margin);

VerificationOutcome verify_even_period_lifting(const ScenarioConfig& sc);

/// The sufficient perturbation size delta / (2 (m-1) n).
Rational robustness_bound(const Rational& margin, int m, std::size_t n);

VerificationOutcome verify_robustness(const ScenarioConfig& sc, std::size_t trials, std::uint64_t seed,
                                      std::optional<Rational> epsilon_override = std::nullopt);

VerificationOutcome verify_unreachable_persistence(const ScenarioConfig& sc,
                                                   const std::map<Node, OrderId>& alt_pins);

/// Single-peakedness for weak orders along `axis` (axis[r] is the
/// alternative at position r): the top class is a contiguous axis interval,
/// and on each side of it, alternatives farther from the top class are
/// ranked strictly lower.
bool is_single_peaked(const WeakOrder& order, const std::vector<Alternative>& axis);

std::vector<WeakOrder> enumerate_single_peaked(int m, const std::vector<Alternative>& axis);

VerificationOutcome verify_single_peaked_invariance(const ScenarioConfig& sc, const std::vector<Alternative>& axis);

struct StrictRestrictionReport {
  bool strict_inputs = true;
  std::size_t strict_orders = 0;
  std::size_t induced_edges = 0;
  std::size_t components = 0;
  std::string reason;
};

/// Restricts the move graph to strict orders when the induced subgraph is
/// connected; otherwise reports why the restriction is infeasible.
std::variant<ScenarioConfig, StrictRestrictionReport> restrict_to_strict(const ScenarioConfig& sc);

/// Text of every node's state, in node order.
std::vector<std::string> profile_text(const PreferenceSpace& space, const Profile& profile);

}  // namespace borda
