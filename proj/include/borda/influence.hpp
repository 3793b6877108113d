#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "borda/rational.hpp"

namespace borda {

using Node = std::size_t;
using NodeSet = std::set<Node>;

/// Directed weighted influence graph. weight(i, j) is the weight node i
/// places on node j, so a positive entry is a support arc j -> i ("j's state
/// enters i's aggregate"). Every row sums to exactly one.
class InfluenceNetwork {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  /// Throws std::invalid_argument unless the matrix is square, nonnegative
  /// and row-stochastic, and every positive entry (i, j) is a declared edge.
  /// Without declared edges the support itself is the edge set.
  explicit InfluenceNetwork(Matrix weights, std::optional<std::set<std::pair<Node, Node>>> edges = std::nullopt);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(Node i, Node j) const { return weights_[i][j]; }
  const Matrix& weights() const { return weights_; }
  const std::set<std::pair<Node, Node>>& edges() const { return edges_; }

  /// Nodes j with weight(i, j) > 0, ascending.
  const std::vector<Node>& in_neighbors(Node i) const { return in_[i]; }
  /// Nodes i with weight(i, j) > 0, ascending.
  const std::vector<Node>& out_neighbors(Node j) const { return out_[j]; }

  /// DOT listing of the support digraph with arcs labeled "p/q".
  std::string to_dot(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const InfluenceNetwork& a, const InfluenceNetwork& b) { return a.weights_ == b.weights_; }

 private:
  Matrix weights_;
  std::set<std::pair<Node, Node>> edges_;
  std::vector<std::vector<Node>> in_;
  std::vector<std::vector<Node>> out_;
};

/// Random-walk matrix D^-1 A of an undirected simple graph given by its
/// edge list. Throws std::invalid_argument for isolated vertices.
InfluenceNetwork normalize_random_walk(std::size_t n, const std::vector<std::pair<Node, Node>>& undirected_edges);

/// Forward closure of `sources` along support arcs j -> i.
NodeSet reach(const InfluenceNetwork& net, const NodeSet& sources);

struct CommunicatingClass {
  std::vector<Node> nodes;
  /// No positive weight from a free node outside the class.
  bool closed = false;
  /// gcd of the lengths of directed cycles inside the class; 0 when the
  /// class contains no cycle (a single node without a self-loop).
  int period = 0;
  /// The two cyclic parts when period == 2.
  std::optional<std::pair<std::vector<Node>, std::vector<Node>>> cyclic_parts;
};

struct ClassStructure {
  /// Strongly connected components of the free-to-free support, ordered by
  /// smallest member.
  std::vector<CommunicatingClass> classes;
};

ClassStructure class_structure(const InfluenceNetwork& net, const NodeSet& free_nodes);

/// Two-coloring of `nodes` under the (undirected view of the) support
/// restricted to them; empty when an odd cycle or a self-loop exists.
std::optional<std::pair<std::vector<Node>, std::vector<Node>>> bipartition(const InfluenceNetwork& net,
                                                                           const NodeSet& nodes);

/// Checks W f = -f exactly on the subnetwork A ∪ B, where f is +1 on A and
/// -1 on B. Throws std::domain_error when the parts overlap.
bool verify_minus_one_mode(const InfluenceNetwork& net, const std::vector<Node>& part_a,
                           const std::vector<Node>& part_b);

/// Seeded perturbation with the same support, each entry within epsilon of
/// the original and every row still summing to one. Throws
/// std::invalid_argument for negative epsilon.
InfluenceNetwork perturb_weights(const InfluenceNetwork& net, const Rational& epsilon, std::uint64_t seed);

/// Entrywise maximum |a_ij - b_ij|.
Rational max_entry_distance(const InfluenceNetwork& a, const InfluenceNetwork& b);

}  // namespace borda
