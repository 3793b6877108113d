#include <doctest.h>

#include <set>

#include "borda/theorems.hpp"
#include "support/generators.hpp"

using namespace borda;

namespace {

std::vector<OrderId> orders(const PreferenceSpace& s, std::initializer_list<const char*> texts) {
  std::vector<OrderId> out;
  for (const char* t : texts) out.push_back(s.parse(t));
  return out;
}

const std::initializer_list<const char*> kSquare{"(xyz)", "x>(yz)", "x>y>z", "(xy)>z"};
const std::initializer_list<const char*> kRim{"x>y>z",  "x>(yz)", "x>z>y",  "(xz)>y", "z>x>y",  "z>(xy)",
                                              "z>y>x",  "(yz)>x", "y>z>x",  "y>(xz)", "y>x>z",  "(xy)>z"};

ScenarioConfig plain(std::shared_ptr<const MoveGraph> g, InfluenceNetwork net, Profile initial,
                     PersistentConfig pins = {}) {
  return ScenarioConfig{"test", BordaSystem(std::move(g), std::move(net), std::move(pins)), std::move(initial),
                        Schedule::synchronous(), 100000, {}};
}

// Single-peakedness by the triple criterion: for axis positions a < b < c,
// the middle one ranks strictly above the worse end, unless all three share
// the top class.
bool single_peaked_oracle(const WeakOrder& w, const std::vector<Alternative>& axis) {
  const auto m = axis.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        const int la = w.level_of(axis[a]), lb = w.level_of(axis[b]), lc = w.level_of(axis[c]);
        if (la == 0 && lb == 0 && lc == 0) continue;
        if (!(lb < std::max(la, lc))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("traveling-wave builder") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  const auto sq = orders(s, kSquare);
  const auto sc = build_traveling_wave(8, sq, g);
  CHECK(sc.system.size() == 8);
  CHECK(sc.system.persistent().pinned.empty());
  for (Node i = 0; i < 8; ++i) {
    CHECK(sc.system.network().in_neighbors(i) == std::vector<Node>{(i + 7) % 8});
    CHECK(sc.initial[i] == sq[i % 4]);
  }
  CHECK_THROWS_AS(build_traveling_wave(6, sq, g), std::invalid_argument);
  CHECK_THROWS_AS(build_traveling_wave(4, orders(s, {"x>y>z", "x>z>y", "(xyz)", "(xy)>z"}), g), std::domain_error);
  CHECK_THROWS_AS(build_traveling_wave(4, orders(s, {"x>y>z", "(xy)>z"}), g), std::domain_error);
}

TEST_CASE("traveling waves oscillate with the cycle length") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  struct Case {
    std::size_t length;
    std::vector<OrderId> cycle;
  };
  for (const auto& c : {Case{4, orders(s, kSquare)}, Case{8, orders(s, kSquare)}, Case{12, orders(s, kRim)},
                        Case{12, *g->find_cycle(12)}, Case{24, orders(s, kRim)}}) {
    const auto sc = build_traveling_wave(c.length, c.cycle, g);
    const auto out = verify_traveling_wave(sc, c.cycle.size());
    CHECK(out.verdict == Verdict::confirmed);
    CHECK(out.evidence["measured"]["period"] == c.cycle.size());
    CHECK(out.evidence["measured"]["mu"] == 0);
    CHECK(out.evidence["target_copies_predecessor"] == true);
    // The wave advances one node per step.
    const auto r = sc.run();
    for (Node i = 0; i < c.length; ++i) CHECK(r.trajectory[1][i] == r.trajectory[0][(i + c.length - 1) % c.length]);
    CHECK_FALSE(sc.system.is_fixed_point(r.orbit[0]));
  }
  const auto m4 = cover_graph(4);
  const auto c6 = m4->find_cycle(6);
  REQUIRE(c6.has_value());
  CHECK(verify_traveling_wave(build_traveling_wave(6, *c6, m4), 6).passed());
}

TEST_CASE("traveling-wave negative controls") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  auto sc = build_traveling_wave(4, orders(s, kSquare), g);
  sc.initial = Profile(4, s.parse("x>y>z"));
  const auto flat = verify_traveling_wave(sc, 4);
  CHECK(flat.verdict == Verdict::degenerate);
  CHECK(flat.evidence["measured"]["period"] == 1);

  sc.initial = orders(s, {"z>y>x", "x>(yz)", "x>y>z", "(xy)>z"});
  const auto off = verify_traveling_wave(sc, 4);
  CHECK_FALSE(off.passed());
  CHECK(off.evidence["one_step_reaches_predecessor"] == false);
  CHECK(off.evidence.contains("measured"));

  // Wrong expectation is a refutation with the measured period.
  const auto wrong = verify_traveling_wave(build_traveling_wave(4, orders(s, kSquare), g), 3);
  CHECK(wrong.verdict == Verdict::refuted);

  // A network that does not copy is rejected on its hypotheses.
  const auto walk = normalize_random_walk(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(verify_traveling_wave(plain(g, walk, orders(s, kSquare)), 4).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("gadget builder") {
  const auto s3 = cover_graph(3);
  const auto rho = s3->space().order(0);
  const auto sc = build_gadget(3, rho, Rational(1, 10));
  const auto& w = sc.system.network();
  CHECK(w.weight(0, 1) == Rational(9, 10));
  CHECK(w.weight(0, 2) == Rational(1, 10));
  CHECK(w.weight(1, 0) == Rational(9, 10));
  CHECK(w.weight(1, 3) == Rational(1, 10));
  CHECK(w.weight(2, 2) == Rational(1));
  CHECK(sc.initial == Profile{0, 12, 0, 12});
  CHECK(sc.system.persistent().camps.has_value());
  CHECK_NOTHROW(build_gadget(3, rho, Rational(1, 2)));
  CHECK_THROWS_AS(build_gadget(3, rho, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(build_gadget(3, rho, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_gadget(3, s3->space().order(4), Rational(1, 10)), std::invalid_argument);
  CHECK(build_gadget(3, rho, Rational(1, 10), std::pair<OrderId, OrderId>{4, 4}).initial == Profile{4, 4, 0, 12});
}

TEST_CASE("forced oscillation on the gadget") {
  const auto rho = cover_graph(3)->space().order(0);
  const auto out = verify_forced_even_period(build_gadget(3, rho, Rational(1, 10)));
  CHECK(out.verdict == Verdict::confirmed);
  CHECK(out.evidence["witness"]["period"] == 2);
  CHECK(out.evidence["witness"]["min_margin"] == "1/10");
  CHECK(out.evidence["fixed_points"] == 6);
  CHECK(out.evidence["presence_single_node"] == false);
  CHECK(out.evidence["presence_per_part"] == true);

  // Working range of epsilon on the 1/100 grid.
  std::vector<int> oscillating;
  for (int k = 1; k < 100; ++k) {
    const auto sc = build_gadget(3, rho, Rational(k, 100));
    if (sc.run().period == 2) oscillating.push_back(k);
  }
  REQUIRE_FALSE(oscillating.empty());
  CHECK(oscillating.front() == 1);
  CHECK(oscillating.back() == 42);
  CHECK(oscillating.size() == 42);
}

TEST_CASE("forced oscillation negative controls") {
  const auto g = cover_graph(3);
  auto sc = build_gadget(3, g->space().order(0), Rational(1, 10));
  PersistentConfig same;
  same.pinned = {{2, 0}, {3, 0}};
  ScenarioConfig single{"single", BordaSystem(g, sc.system.network(), same), {0, 12, 0, 0}, Schedule::synchronous(),
                        1000, {}};
  const auto out = verify_forced_even_period(single);
  CHECK(out.verdict == Verdict::hypothesis_not_met);
  CHECK(out.evidence["oscillates"] == false);

  // Classification of single runs.
  CHECK(classify_forced_run(2, Rational(1, 10)) == Verdict::confirmed);
  CHECK(classify_forced_run(4, std::nullopt) == Verdict::confirmed);
  CHECK(classify_forced_run(2, Rational(0)) == Verdict::not_certifiable);
  CHECK(classify_forced_run(3, Rational(1)) == Verdict::refuted);
  CHECK(classify_forced_run(1, Rational(1)) == Verdict::refuted);
}

TEST_CASE("even-period lifting") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  const auto walk = normalize_random_walk(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto swap = verify_even_period_lifting(plain(g, walk, orders(s, {"x>y>z", "(xy)>z", "x>y>z", "(xy)>z"})));
  CHECK(swap.verdict == Verdict::confirmed);
  CHECK(swap.evidence["half_map_k"] == 1);
  CHECK(swap.evidence["measured"]["period"] == 2);

  const auto consensus = verify_even_period_lifting(plain(g, walk, Profile(4, 0)));
  CHECK(consensus.verdict == Verdict::degenerate);

  const auto gadget = verify_even_period_lifting(build_gadget(3, s.order(0), Rational(1, 10)));
  CHECK(gadget.verdict == Verdict::confirmed);
  CHECK(gadget.evidence["half_map_k"] == 1);

  const auto tri = normalize_random_walk(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(verify_even_period_lifting(plain(g, tri, {0, 6, 12})).verdict == Verdict::hypothesis_not_met);

  // Exhaustively, the 4-cycle at m = 3 only has periods 1 and 2, and every
  // lifting outcome is consistent.
  std::set<std::size_t> periods;
  SeededRng rng(41);
  const BordaSystem sys(g, walk, {});
  for (OrderId a = 0; a < 13; ++a) {
    for (OrderId b = 0; b < 13; ++b) {
      for (OrderId c = 0; c < 13; ++c) {
        for (OrderId d = 0; d < 13; ++d) periods.insert(sys.run_until_cycle({a, b, c, d}, Schedule::synchronous(), 1000).period);
      }
    }
  }
  CHECK(periods == std::set<std::size_t>{1, 2});
  for (int trial = 0; trial < 200; ++trial) {
    const auto out = verify_even_period_lifting(plain(g, walk, testing::random_profile(rng, 4, 13)));
    CHECK(out.verdict != Verdict::refuted);
  }
}

TEST_CASE("robustness under small perturbations") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  CHECK(robustness_bound(Rational(1, 10), 3, 4) == Rational(1, 160));
  CHECK(robustness_bound(Rational(1), 3, 4) == Rational(1, 16));

  const auto wave = verify_robustness(build_traveling_wave(4, orders(s, kSquare), g), 20, 11);
  CHECK(wave.verdict == Verdict::confirmed);
  CHECK(wave.evidence["epsilon_star"] == "1/16");

  const auto gadget_sc = build_gadget(3, s.order(0), Rational(1, 10));
  const auto gadget = verify_robustness(gadget_sc, 20, 11);
  CHECK(gadget.verdict == Verdict::confirmed);
  CHECK(gadget.evidence["epsilon_star"] == "1/160");
  CHECK(gadget.evidence["epsilon"] == "1/320");

  // Independent check of one perturbed run at the bound.
  const auto perturbed = perturb_weights(gadget_sc.system.network(), Rational(1, 320), 5);
  const auto r = gadget_sc.with_network(perturbed).run();
  CHECK(r.period == 2);
  CHECK(r.orbit == gadget_sc.run().orbit);

  const auto big = verify_robustness(gadget_sc, 20, 11, Rational(9, 10));
  CHECK(big.verdict == Verdict::refuted);
  CHECK(big.evidence.contains("first_divergence_step"));
  CHECK(big.evidence.contains("failed_seed"));

  // An all-tied orbit has no margin to certify.
  const auto tied = plain(g, normalize_random_walk(2, {{0, 1}}), Profile(2, s.parse("(xyz)")));
  CHECK(verify_robustness(tied, 5, 1).verdict == Verdict::not_certifiable);
}

TEST_CASE("unreachable persistence") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  InfluenceNetwork::Matrix w(5, std::vector<Rational>(5));
  w[0][0] = 1;
  w[1][0] = Rational(1, 2);
  w[1][2] = Rational(1, 2);
  w[2][1] = 1;
  w[3][4] = 1;
  w[4][3] = 1;
  PersistentConfig pins;
  pins.pinned[0] = 0;
  const auto sc = plain(g, InfluenceNetwork(w), {0, 4, 12, 0, 3}, pins);
  const auto out = verify_unreachable_persistence(sc, {{0, s.parse("z>y>x")}});
  CHECK(out.verdict == Verdict::confirmed);
  CHECK(out.evidence["unreached_free"] == std::vector<Node>{3, 4});

  CHECK(verify_unreachable_persistence(sc, {{1, 0}}).verdict == Verdict::hypothesis_not_met);
  const auto gadget = build_gadget(3, s.order(0), Rational(1, 10));
  CHECK(verify_unreachable_persistence(gadget, {{2, 6}}).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("single-peaked orders") {
  const auto s = cover_graph(3)->space();
  const std::vector<Alternative> xyz{0, 1, 2};
  CHECK(is_single_peaked(s.order(s.parse("y>x>z")), xyz));
  CHECK_FALSE(is_single_peaked(s.order(s.parse("x>z>y")), xyz));
  CHECK(is_single_peaked(s.order(s.parse("(xyz)")), xyz));
  CHECK_FALSE(is_single_peaked(s.order(s.parse("(xz)>y")), xyz));
  CHECK(enumerate_single_peaked(3, xyz).size() == 8);
  CHECK(enumerate_single_peaked(4, {0, 1, 2, 3}).size() == 20);
  CHECK_THROWS_AS(is_single_peaked(s.order(0), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_single_peaked(s.order(0), {0, 0, 1}), std::invalid_argument);

  for (int m = 2; m <= 4; ++m) {
    std::vector<Alternative> axis(static_cast<std::size_t>(m));
    std::iota(axis.begin(), axis.end(), 0);
    do {
      for (const auto& w : enumerate_weak_orders(m)) CHECK(is_single_peaked(w, axis) == single_peaked_oracle(w, axis));
    } while (std::next_permutation(axis.begin(), axis.end()));
  }
}

TEST_CASE("single-peaked invariance") {
  const auto g = cover_graph(3);
  const auto& s = g->space();
  const std::vector<Alternative> xyz{0, 1, 2};
  const auto walk = normalize_random_walk(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(verify_single_peaked_invariance(plain(g, walk, Profile(4, s.parse("y>x>z"))), xyz).passed());
  CHECK(verify_single_peaked_invariance(plain(g, walk, Profile(4, s.parse("x>z>y"))), xyz).verdict ==
        Verdict::hypothesis_not_met);

  const auto domain = enumerate_single_peaked(3, xyz);
  SeededRng rng(50);
  int confirmed = 0, lapsed = 0, refuted = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    Profile p(n);
    for (auto& v : p) v = s.id_of(domain[rng.below(domain.size())]);
    const auto out = verify_single_peaked_invariance(plain(g, testing::random_network(rng, n), p), xyz);
    confirmed += out.verdict == Verdict::confirmed;
    lapsed += out.verdict == Verdict::hypothesis_not_met;
    refuted += out.verdict == Verdict::refuted;
    if (out.verdict != Verdict::refuted) continue;
    // The default tie-break left the domain although a single-peaked
    // geodesic move was available.
    const auto& ce = out.evidence["counterexample"];
    const auto from = s.parse(ce["previous_state"].get<std::string>());
    const auto to = s.parse(ce["previous_target"].get<std::string>());
    const auto state = s.parse(ce["state"].get<std::string>());
    CHECK(state == g->step(StepPolicy{}, from, to));
    CHECK_FALSE(is_single_peaked(s.order(state), xyz));
    bool alternative = false;
    for (OrderId v : g->geodesic_moves(from, to)) alternative |= is_single_peaked(s.order(v), xyz);
    CHECK(alternative);
  }
  MESSAGE("tally: confirmed " << confirmed << ", hypothesis_not_met " << lapsed << ", refuted " << refuted);
  CHECK(confirmed + lapsed + refuted == 50);
  CHECK(confirmed == 35);
  CHECK(lapsed == 0);
  CHECK(refuted == 15);
}

TEST_CASE("restriction to strict orders is infeasible under the cover graph") {
  for (int m : {2, 3}) {
    const auto g = cover_graph(m);
    InfluenceNetwork::Matrix w(2, std::vector<Rational>(2));
    w[0][1] = 1;
    w[1][0] = 1;
    const auto result = restrict_to_strict(plain(g, InfluenceNetwork(w), {0, 0}));
    REQUIRE(std::holds_alternative<StrictRestrictionReport>(result));
    const auto& report = std::get<StrictRestrictionReport>(result);
    CHECK(report.strict_inputs);
    CHECK(report.induced_edges == 0);
    CHECK(report.strict_orders == (m == 2 ? 2u : 6u));
    CHECK(report.components == report.strict_orders);
  }
  const auto g = cover_graph(3);
  InfluenceNetwork::Matrix w(1, std::vector<Rational>(1, Rational(1)));
  const auto tied = restrict_to_strict(plain(g, InfluenceNetwork(w), {4}));
  CHECK_FALSE(std::get<StrictRestrictionReport>(tied).strict_inputs);
}

TEST_CASE("outcomes serialize with their verdict") {
  VerificationOutcome out;
  out.claim = "c";
  out.verdict = Verdict::degenerate;
  const auto j = out.to_json();
  CHECK(j["verdict"] == "degenerate");
  CHECK(j["passed"] == false);
  CHECK(to_string(Verdict::hypothesis_not_met) == "hypothesis_not_met");
}
