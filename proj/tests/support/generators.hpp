#pragma once

// Seeded generators shared by the property tests and the acceptance binary.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "borda/dynamics.hpp"
#include "borda/random.hpp"

namespace borda::testing {

// Random row-stochastic network on n nodes. Each row gets 1..max_support
// positive entries (self-loops allowed) with small-denominator weights.
inline InfluenceNetwork random_network(SeededRng& rng, std::size_t n, std::size_t max_support = 3) {
  InfluenceNetwork::Matrix w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    const std::size_t k = 1 + rng.below(std::min(max_support, n));
    // Partial Fisher-Yates for k distinct in-neighbors.
    for (std::size_t s = 0; s < k; ++s) std::swap(cols[s], cols[s + rng.below(n - s)]);
    std::vector<std::int64_t> raw(k);
    std::int64_t total = 0;
    for (auto& r : raw) total += (r = 1 + static_cast<std::int64_t>(rng.below(6)));
    for (std::size_t s = 0; s < k; ++s) w[i][cols[s]] = Rational(raw[s], total);
  }
  return InfluenceNetwork(std::move(w));
}

inline std::vector<std::pair<Node, Node>> random_bipartite_edges(SeededRng& rng, std::size_t left, std::size_t right) {
  // Every node keeps at least one neighbor across the cut.
  std::set<std::pair<Node, Node>> edges;
  for (Node a = 0; a < left; ++a) edges.emplace(a, left + rng.below(right));
  for (Node b = left; b < left + right; ++b) edges.emplace(rng.below(left), b);
  for (Node a = 0; a < left; ++a) {
    for (Node b = left; b < left + right; ++b) {
      if (rng.below(3) == 0) edges.emplace(a, b);
    }
  }
  return {edges.begin(), edges.end()};
}

inline Profile random_profile(SeededRng& rng, std::size_t n, std::size_t orders) {
  Profile p(n);
  for (auto& v : p) v = static_cast<OrderId>(rng.below(orders));
  return p;
}

}  // namespace borda::testing
