#include "borda/influence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "borda/random.hpp"

namespace borda {

InfluenceNetwork::InfluenceNetwork(Matrix weights, std::optional<std::set<std::pair<Node, Node>>> edges)
    : weights_(std::move(weights)) {
  const std::size_t n = weights_.size();
  in_.resize(n);
  out_.resize(n);
  for (Node i = 0; i < n; ++i) {
    if (weights_[i].size() != n) throw std::invalid_argument("weight matrix is not square");
    Rational row_sum;
    for (Node j = 0; j < n; ++j) {
      const Rational& w = weights_[i][j];
      if (w.sign() < 0) {
        throw std::invalid_argument("negative weight w[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
      if (w.sign() > 0) {
        if (edges && !edges->contains({i, j})) {
          throw std::invalid_argument("positive weight w[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "] on an undeclared edge");
        }
        in_[i].push_back(j);
        out_[j].push_back(i);
      }
      row_sum += w;
    }
    if (row_sum != Rational(1)) {
      throw std::invalid_argument("row " + std::to_string(i) + " sums to " + row_sum.to_string() + ", not 1");
    }
  }
  if (edges) {
    for (const auto& [i, j] : *edges) {
      if (i >= n || j >= n) throw std::invalid_argument("declared edge references a missing node");
    }
    edges_ = std::move(*edges);
  } else {
    for (Node i = 0; i < n; ++i) {
      for (Node j : in_[i]) edges_.emplace(i, j);
    }
  }
}

std::string InfluenceNetwork::to_dot(const std::vector<std::string>& names) const {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Node v = 0; v < size(); ++v) {
    out << "  " << v << " [label=\"" << (v < names.size() ? names[v] : std::to_string(v)) << "\"];\n";
  }
  for (Node i = 0; i < size(); ++i) {
    for (Node j : in_[i]) {
      out << "  " << j << " -> " << i << " [label=\"" << weights_[i][j].numerator() << "/"
          << weights_[i][j].denominator() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

InfluenceNetwork normalize_random_walk(std::size_t n, const std::vector<std::pair<Node, Node>>& undirected_edges) {
  std::vector<std::set<Node>> adjacency(n);
  for (const auto& [a, b] : undirected_edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge references a missing node");
    adjacency[a].insert(b);
    adjacency[b].insert(a);
  }
  InfluenceNetwork::Matrix weights(n, std::vector<Rational>(n));
  for (Node i = 0; i < n; ++i) {
    if (adjacency[i].empty()) {
      throw std::invalid_argument("node " + std::to_string(i) + " is isolated; random-walk normalization needs a neighbor");
    }
    const Rational share(1, static_cast<std::int64_t>(adjacency[i].size()));
    for (Node j : adjacency[i]) weights[i][j] = share;
  }
  return InfluenceNetwork(std::move(weights));
}

NodeSet reach(const InfluenceNetwork& net, const NodeSet& sources) {
  NodeSet seen;
  std::vector<Node> stack;
  for (Node s : sources) {
    if (s >= net.size()) throw std::out_of_range("reach source out of range");
    if (seen.insert(s).second) stack.push_back(s);
  }
  while (!stack.empty()) {
    const Node j = stack.back();
    stack.pop_back();
    for (Node i : net.out_neighbors(j)) {
      if (seen.insert(i).second) stack.push_back(i);
    }
  }
  return seen;
}

ClassStructure class_structure(const InfluenceNetwork& net, const NodeSet& free_nodes) {
  const std::size_t n = net.size();
  std::vector<bool> is_free(n, false);
  for (Node v : free_nodes) {
    if (v >= n) throw std::out_of_range("free node out of range");
    is_free[v] = true;
  }

  // Tarjan's SCC over free nodes with arcs j -> i.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Node> stack;
  std::vector<std::size_t> component(n, kUnvisited);
  std::vector<std::vector<Node>> components;
  std::size_t counter = 0;

  std::function<void(Node)> visit = [&](Node j) {
    index[j] = low[j] = counter++;
    stack.push_back(j);
    on_stack[j] = true;
    for (Node i : net.out_neighbors(j)) {
      if (!is_free[i]) continue;
      if (index[i] == kUnvisited) {
        visit(i);
        low[j] = std::min(low[j], low[i]);
      } else if (on_stack[i]) {
        low[j] = std::min(low[j], index[i]);
      }
    }
    if (low[j] == index[j]) {
      std::vector<Node> members;
      Node v;
      do {
        v = stack.back();
        stack.pop_back();
        on_stack[v] = false;
        component[v] = components.size();
        members.push_back(v);
      } while (v != j);
      std::sort(members.begin(), members.end());
      components.push_back(std::move(members));
    }
  };
  for (Node v : free_nodes) {
    if (index[v] == kUnvisited) visit(v);
  }
  std::sort(components.begin(), components.end());
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (Node v : components[c]) component[v] = c;
  }

  ClassStructure out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    CommunicatingClass cls;
    cls.nodes = components[c];
    cls.closed = std::all_of(cls.nodes.begin(), cls.nodes.end(), [&](Node i) {
      return std::none_of(net.in_neighbors(i).begin(), net.in_neighbors(i).end(),
                          [&](Node j) { return is_free[j] && component[j] != c; });
    });

    // BFS levels from the smallest member; the period is the gcd of
    // level[j] + 1 - level[i] over internal arcs j -> i.
    std::vector<long> level(n, -1);
    const Node root = cls.nodes.front();
    level[root] = 0;
    std::vector<Node> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node j = queue[head];
      for (Node i : net.out_neighbors(j)) {
        if (is_free[i] && component[i] == c && level[i] < 0) {
          level[i] = level[j] + 1;
          queue.push_back(i);
        }
      }
    }
    long period = 0;
    for (Node j : cls.nodes) {
      for (Node i : net.out_neighbors(j)) {
        if (is_free[i] && component[i] == c) period = std::gcd(period, std::labs(level[j] + 1 - level[i]));
      }
    }
    cls.period = static_cast<int>(period);
    if (cls.period == 2) {
      std::pair<std::vector<Node>, std::vector<Node>> parts;
      for (Node v : cls.nodes) (level[v] % 2 == 0 ? parts.first : parts.second).push_back(v);
      cls.cyclic_parts = std::move(parts);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::optional<std::pair<std::vector<Node>, std::vector<Node>>> bipartition(const InfluenceNetwork& net,
                                                                           const NodeSet& nodes) {
  std::vector<int> color(net.size(), -1);
  for (Node root : nodes) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<Node> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node v = queue[head];
      auto visit = [&](Node u) {
        if (!nodes.contains(u)) return true;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
          return true;
        }
        return color[u] != color[v];
      };
      for (Node u : net.in_neighbors(v)) {
        if (!visit(u)) return std::nullopt;
      }
      for (Node u : net.out_neighbors(v)) {
        if (!visit(u)) return std::nullopt;
      }
    }
  }
  std::pair<std::vector<Node>, std::vector<Node>> parts;
  for (Node v : nodes) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool verify_minus_one_mode(const InfluenceNetwork& net, const std::vector<Node>& part_a,
                           const std::vector<Node>& part_b) {
  std::vector<int> f(net.size(), 0);
  for (Node v : part_a) {
    if (v >= net.size()) throw std::out_of_range("part node out of range");
    f[v] = 1;
  }
  for (Node v : part_b) {
    if (v >= net.size()) throw std::out_of_range("part node out of range");
    if (f[v] != 0) throw std::domain_error("bipartition parts overlap at node " + std::to_string(v));
    f[v] = -1;
  }
  for (Node i = 0; i < net.size(); ++i) {
    if (f[i] == 0) continue;
    Rational wf;
    for (Node j : net.in_neighbors(i)) wf += net.weight(i, j) * Rational(f[j]);
    if (wf != Rational(-f[i])) return false;
  }
  return true;
}

InfluenceNetwork perturb_weights(const InfluenceNetwork& net, const Rational& epsilon, std::uint64_t seed) {
  if (epsilon.sign() < 0) throw std::invalid_argument("perturbation size must be nonnegative");
  constexpr std::int64_t kResolution = 1000;
  SeededRng rng(seed);
  auto weights = net.weights();
  for (Node i = 0; i < net.size(); ++i) {
    const auto& support = net.in_neighbors(i);
    if (support.empty()) throw std::invalid_argument("row " + std::to_string(i) + " has no positive entry");
    if (support.size() == 1 || epsilon.is_zero()) continue;
    // Centered draws give a zero-sum delta; halving the spread keeps every
    // entry within epsilon.
    std::vector<std::int64_t> draws;
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      draws.push_back(rng.between(-kResolution, kResolution));
      sum += draws.back();
    }
    const auto k = static_cast<std::int64_t>(support.size());
    std::vector<Rational> delta;
    for (auto d : draws) {
      delta.push_back(epsilon * Rational(d * k - sum, 2 * kResolution * k));
    }
    // Shrink until every support entry stays positive.
    auto positive = [&] {
      for (std::size_t s = 0; s < support.size(); ++s) {
        if ((weights[i][support[s]] + delta[s]).sign() <= 0) return false;
      }
      return true;
    };
    while (!positive()) {
      for (auto& d : delta) d /= Rational(2);
    }
    for (std::size_t s = 0; s < support.size(); ++s) weights[i][support[s]] += delta[s];
  }
  return InfluenceNetwork(std::move(weights), net.edges());
}

Rational max_entry_distance(const InfluenceNetwork& a, const InfluenceNetwork& b) {
  if (a.size() != b.size()) throw std::invalid_argument("networks differ in size");
  Rational best;
  for (Node i = 0; i < a.size(); ++i) {
    for (Node j = 0; j < a.size(); ++j) best = std::max(best, (a.weight(i, j) - b.weight(i, j)).abs());
  }
  return best;
}

}  // namespace borda
