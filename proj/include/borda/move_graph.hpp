#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "borda/preference_space.hpp"

namespace borda {

/// How Step picks among several distance-decreasing neighbors.
struct StepPolicy {
  enum class Mode { min_canonical_id };
  Mode mode = Mode::min_canonical_id;
  /// When set, an ambiguous step (more than one geodesic first move) stays
  /// put instead of moving.
  bool allow_no_move_on_ambiguity = false;

  friend bool operator==(const StepPolicy&, const StepPolicy&) = default;
};

/// Cover graph H of the weak-order lattice: two orders are adjacent when one
/// is obtained from the other by splitting one indifference class into two
/// consecutive nonempty classes. Carries the all-pairs BFS distance table.
class MoveGraph {
 public:
  static constexpr std::uint8_t kUnreachable = 0xff;

  /// Cover graph on Omega(m), 2 <= m <= 6.
  static MoveGraph build(int m);

  /// Subgraph induced on the orders with keep[id] set. Distances are
  /// recomputed inside the subgraph; vertices outside it are isolated.
  MoveGraph induced(const std::vector<bool>& keep) const;

  const PreferenceSpace& space() const { return *space_; }
  std::shared_ptr<const PreferenceSpace> shared_space() const { return space_; }
  int alternatives() const { return space_->alternatives(); }
  std::size_t order_count() const { return adjacency_.size(); }

  const std::vector<OrderId>& neighbors(OrderId v) const { return adjacency_[v]; }
  bool adjacent(OrderId a, OrderId b) const;
  std::size_t edge_count() const;

  /// Hop count, or kUnreachable.
  std::uint8_t distance(OrderId a, OrderId b) const { return distances_[a * order_count() + b]; }
  int diameter() const;
  bool connected() const;

  /// One bounded move from `from` toward `to` along a shortest path.
  OrderId step(const StepPolicy& policy, OrderId from, OrderId to) const;
  /// Distance-decreasing neighbors of `from` with respect to `to`, ascending.
  std::vector<OrderId> geodesic_moves(OrderId from, OrderId to) const;
  /// True iff exactly one shortest path joins a and b.
  bool geodesic_unique(OrderId a, OrderId b) const;
  /// Number of shortest paths from a to b (saturating at UINT64_MAX).
  std::uint64_t geodesic_count(OrderId a, OrderId b) const;

  /// A simple cycle of exactly `length` vertices, found by a deterministic
  /// depth-first search in which the cycle starts at its smallest id and
  /// neighbors are tried in ascending order.
  std::optional<std::vector<OrderId>> find_cycle(int length) const;

  /// DOT listing; vertices ordered by canonical id and labeled in text format.
  std::string to_dot() const;

 private:
  MoveGraph(std::shared_ptr<const PreferenceSpace> space, std::vector<std::vector<OrderId>> adjacency);
  void compute_distances();

  std::shared_ptr<const PreferenceSpace> space_;
  std::vector<std::vector<OrderId>> adjacency_;
  std::vector<std::uint8_t> distances_;
};

/// Shared, lazily built cover graph for m alternatives.
std::shared_ptr<const MoveGraph> cover_graph(int m);

}  // namespace borda
