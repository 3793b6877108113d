#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "borda/preference_space.hpp"

using namespace borda;

namespace {

// Ordered set partitions by brute force: every map alternatives -> labels
// {0..m-1} whose image is an initial segment.
std::set<std::vector<int>> brute_force_partitions(int m) {
  std::set<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  std::function<void(int)> go = [&](int pos) {
    if (pos == m) {
      const int top = *std::max_element(f.begin(), f.end());
      for (int l = 0; l <= top; ++l) {
        if (std::find(f.begin(), f.end(), l) == f.end()) return;
      }
      out.insert(f);
      return;
    }
    for (int l = 0; l < m; ++l) {
      f[static_cast<std::size_t>(pos)] = l;
      go(pos + 1);
    }
  };
  go(0);
  return out;
}

// Pairwise relation: -1 a below b, 0 tied, 1 a above b.
int relation(const WeakOrder& w, int a, int b) {
  const int la = w.level_of(a), lb = w.level_of(b);
  return la < lb ? 1 : (la > lb ? -1 : 0);
}

Rational kemeny_oracle(const WeakOrder& u, const WeakOrder& v) {
  int total = 0;
  for (int a = 0; a < u.alternatives(); ++a) {
    for (int b = a + 1; b < u.alternatives(); ++b) {
      const int ru = relation(u, a, b), rv = relation(v, a, b);
      total += std::abs(ru - rv);
    }
  }
  return Rational(total);
}

}  // namespace

TEST_CASE("fubini numbers") {
  CHECK(fubini(1) == 1);
  CHECK(fubini(2) == 3);
  CHECK(fubini(3) == 13);
  CHECK(fubini(4) == 75);
  CHECK(fubini(5) == 541);
  CHECK(fubini(6) == 4683);
}

TEST_CASE("enumeration matches the brute-force ordered partitions") {
  for (int m = 1; m <= 5; ++m) {
    const auto orders = enumerate_weak_orders(m);
    const auto oracle = brute_force_partitions(m);
    CHECK(orders.size() == oracle.size());
    CHECK(orders.size() == fubini(m));
    std::set<std::vector<int>> seen;
    for (const auto& w : orders) seen.insert(w.levels());
    CHECK(seen == oracle);
    CHECK(std::is_sorted(orders.begin(), orders.end()));
  }
  CHECK_THROWS_AS(enumerate_weak_orders(0), std::domain_error);
  CHECK_THROWS_AS(enumerate_weak_orders(7), std::domain_error);
}

TEST_CASE("canonical ids for three alternatives") {
  const PreferenceSpace space(3);
  const std::vector<std::string> expected{"x>y>z",  "x>(yz)", "x>z>y",  "(xy)>z", "(xyz)",  "(xz)>y", "y>x>z",
                                          "y>(xz)", "y>z>x",  "(yz)>x", "z>x>y",  "z>(xy)", "z>y>x"};
  REQUIRE(space.size() == expected.size());
  for (OrderId id = 0; id < space.size(); ++id) {
    CHECK(space.to_text(id) == expected[id]);
    CHECK(space.parse(expected[id]) == id);
  }
}

TEST_CASE("borda scores use the averaged convention") {
  const PreferenceSpace space(3);
  auto scores = [&](const char* text) { return space.scores(space.parse(text)); };
  CHECK(scores("x>y>z") == ScoreVector{2, 1, 0});
  CHECK(scores("(xyz)") == ScoreVector{1, 1, 1});
  CHECK(scores("(xy)>z") == ScoreVector{Rational(3, 2), Rational(3, 2), 0});
  CHECK(scores("z>(xy)") == ScoreVector{Rational(1, 2), Rational(1, 2), 2});
}

TEST_CASE("projection inverts the score map and scores are injective") {
  for (int m = 1; m <= 5; ++m) {
    std::set<ScoreVector> distinct;
    for (const auto& w : enumerate_weak_orders(m)) {
      const auto s = borda_scores(w);
      CHECK(project(s) == w);
      Rational sum;
      for (const auto& v : s) sum += v;
      CHECK(sum == Rational(m * (m - 1), 2));
      distinct.insert(s);
    }
    CHECK(distinct.size() == fubini(m));
  }
  CHECK(project(ScoreVector{2, 1, 0}) == WeakOrder({{0}, {1}, {2}}));
  CHECK(project(ScoreVector{1, 1, 1}) == WeakOrder({{0, 1, 2}}));
  CHECK(project(ScoreVector{Rational(1, 3), 5, Rational(1, 3)}) == WeakOrder({{1}, {0, 2}}));
}

TEST_CASE("antipode reverses classes and negates centered scores") {
  const PreferenceSpace space(3);
  CHECK(space.to_text(space.antipode(space.parse("x>y>z"))) == "z>y>x");
  CHECK(space.to_text(space.antipode(space.parse("(xyz)"))) == "(xyz)");
  for (int m = 2; m <= 4; ++m) {
    for (const auto& w : enumerate_weak_orders(m)) {
      const auto a = antipode(w);
      CHECK(antipode(a) == w);
      const auto sw = borda_scores(w), sa = borda_scores(a);
      for (std::size_t k = 0; k < sw.size(); ++k) CHECK(sw[k] + sa[k] == Rational(m - 1));
    }
  }
}

TEST_CASE("margin from ties") {
  CHECK(margin_from_ties(ScoreVector{2, 1, 0}) == Rational(1));
  CHECK(margin_from_ties(ScoreVector{Rational(3, 2), Rational(3, 2), 0}) == Rational(3, 2));
  CHECK_FALSE(margin_from_ties(ScoreVector{1, 1, 1}).has_value());
  CHECK(margin_from_ties(ScoreVector{Rational(11, 10), 1, Rational(9, 10)}) == Rational(1, 10));
}

TEST_CASE("kemeny distance") {
  const PreferenceSpace space(3);
  auto d = [&](const char* a, const char* b) {
    return kemeny_distance(space.order(space.parse(a)), space.order(space.parse(b)));
  };
  CHECK(d("(xyz)", "x>y>z") == Rational(3));
  CHECK(d("x>y>z", "x>y>z") == Rational(0));
  CHECK(d("x>y>z", "z>y>x") == Rational(6));
  CHECK_THROWS_AS(kemeny_distance(space.order(0), PreferenceSpace(4).order(0)), std::domain_error);

  // Metric axioms and the pair-count oracle, exhaustively.
  const auto& orders = space.orders();
  for (const auto& a : orders) {
    for (const auto& b : orders) {
      const auto dab = kemeny_distance(a, b);
      CHECK(dab == kemeny_oracle(a, b));
      CHECK(dab == kemeny_distance(b, a));
      CHECK((dab.is_zero() == (a == b)));
      for (const auto& c : orders) CHECK(kemeny_distance(a, c) <= dab + kemeny_distance(b, c));
    }
  }
  // Every strict order sits at distance 3 from full indifference.
  for (const auto& w : orders) {
    if (w.is_strict()) CHECK(kemeny_distance(w, orders[4]) == Rational(3));
  }
}

TEST_CASE("order text format") {
  const OrderFormat f3(3);
  CHECK(f3.format(WeakOrder({{0, 1}, {2}})) == "(xy)>z");
  CHECK(f3.parse("(xy)>z") == WeakOrder({{0, 1}, {2}}));
  CHECK(f3.parse("0>1>2") == WeakOrder({{0}, {1}, {2}}));
  CHECK(f3.parse("(yx)>z") == WeakOrder({{0, 1}, {2}}));
  CHECK_THROWS_AS(f3.parse("x>y"), std::invalid_argument);
  CHECK_THROWS_AS(f3.parse("x>x>z"), std::invalid_argument);
  CHECK_THROWS_AS(f3.parse("x>(yz"), std::invalid_argument);
  CHECK_THROWS_AS(f3.parse("x>w>z"), std::invalid_argument);
  CHECK_THROWS_AS(f3.parse(""), std::invalid_argument);
  const OrderFormat f5(5);
  CHECK(f5.format(WeakOrder({{4}, {0, 2}, {1, 3}})) == "4>(02)>(13)");
  const OrderFormat named(3, "abc");
  CHECK(named.format(WeakOrder({{2}, {0, 1}})) == "c>(ab)");
  CHECK_THROWS_AS(OrderFormat(3, "aab"), std::invalid_argument);
  for (int m = 1; m <= 5; ++m) {
    const OrderFormat f(m);
    for (const auto& w : enumerate_weak_orders(m)) CHECK(f.parse(f.format(w)) == w);
  }
}

TEST_CASE("space lookup tables agree with the free functions") {
  for (int m = 2; m <= 4; ++m) {
    const PreferenceSpace space(m);
    for (OrderId id = 0; id < space.size(); ++id) {
      CHECK(space.id_of(space.order(id)) == id);
      CHECK(space.order(space.antipode(id)) == antipode(space.order(id)));
      CHECK(space.project_id(space.scores(id)) == id);
    }
  }
}
