#include "borda/move_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace borda {

MoveGraph::MoveGraph(std::shared_ptr<const PreferenceSpace> space, std::vector<std::vector<OrderId>> adjacency)
    : space_(std::move(space)), adjacency_(std::move(adjacency)) {
  compute_distances();
}

MoveGraph MoveGraph::build(int m) {
  if (m < 2 || m > kMaxAlternatives) {
    throw std::domain_error("move graph supports 2 <= m <= " + std::to_string(kMaxAlternatives));
  }
  auto space = std::make_shared<const PreferenceSpace>(m);
  std::vector<std::vector<OrderId>> adjacency(space->size());
  for (OrderId id = 0; id < space->size(); ++id) {
    const auto& classes = space->order(id).classes();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& cls = classes[k];
      const auto c = cls.size();
      if (c < 2) continue;
      // Every nonempty proper subset of the class becomes the upper half.
      for (std::uint32_t mask = 1; mask + 1 < (1u << c); ++mask) {
        std::vector<Alternative> upper;
        std::vector<Alternative> lower;
        for (std::size_t b = 0; b < c; ++b) ((mask >> b) & 1u ? upper : lower).push_back(cls[b]);
        auto split = classes;
        split[k] = std::move(upper);
        split.insert(split.begin() + static_cast<std::ptrdiff_t>(k) + 1, std::move(lower));
        const OrderId other = space->id_of(WeakOrder(std::move(split)));
        adjacency[id].push_back(other);
        adjacency[other].push_back(id);
      }
    }
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return MoveGraph(std::move(space), std::move(adjacency));
}

MoveGraph MoveGraph::induced(const std::vector<bool>& keep) const {
  if (keep.size() != order_count()) throw std::invalid_argument("induced subgraph mask has the wrong size");
  std::vector<std::vector<OrderId>> adjacency(order_count());
  for (OrderId v = 0; v < order_count(); ++v) {
    if (!keep[v]) continue;
    for (OrderId u : adjacency_[v]) {
      if (keep[u]) adjacency[v].push_back(u);
    }
  }
  return MoveGraph(space_, std::move(adjacency));
}

void MoveGraph::compute_distances() {
  const std::size_t n = order_count();
  distances_.assign(n * n, kUnreachable);
  std::vector<OrderId> queue(n);
  for (OrderId src = 0; src < n; ++src) {
    std::uint8_t* row = &distances_[src * n];
    row[src] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      const OrderId v = queue[head++];
      for (OrderId u : adjacency_[v]) {
        if (row[u] == kUnreachable) {
          row[u] = static_cast<std::uint8_t>(row[v] + 1);
          queue[tail++] = u;
        }
      }
    }
  }
}

bool MoveGraph::adjacent(OrderId a, OrderId b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t MoveGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

int MoveGraph::diameter() const {
  int best = 0;
  for (auto d : distances_) {
    if (d != kUnreachable) best = std::max(best, static_cast<int>(d));
  }
  return best;
}

bool MoveGraph::connected() const {
  return std::none_of(distances_.begin(), distances_.begin() + static_cast<std::ptrdiff_t>(order_count()),
                      [](std::uint8_t d) { return d == kUnreachable; });
}

std::vector<OrderId> MoveGraph::geodesic_moves(OrderId from, OrderId to) const {
  std::vector<OrderId> moves;
  const auto d = distance(from, to);
  if (d == 0 || d == kUnreachable) return moves;
  for (OrderId u : adjacency_[from]) {
    if (distance(u, to) + 1 == d) moves.push_back(u);
  }
  return moves;
}

OrderId MoveGraph::step(const StepPolicy& policy, OrderId from, OrderId to) const {
  if (from == to) return from;
  const auto moves = geodesic_moves(from, to);
  if (moves.empty()) return from;  // unreachable target in an induced subgraph
  if (moves.size() > 1 && policy.allow_no_move_on_ambiguity) return from;
  return moves.front();
}

std::uint64_t MoveGraph::geodesic_count(OrderId a, OrderId b) const {
  const auto total = distance(a, b);
  if (total == kUnreachable) return 0;
  // Path counts layer by layer outward from a, restricted to the vertices
  // lying on some a-b geodesic.
  std::vector<std::uint64_t> count(order_count(), 0);
  std::vector<std::vector<OrderId>> layers(static_cast<std::size_t>(total) + 1);
  for (OrderId v = 0; v < order_count(); ++v) {
    const auto da = distance(a, v);
    const auto db = distance(v, b);
    if (da != kUnreachable && db != kUnreachable && da + db == total) layers[da].push_back(v);
  }
  count[a] = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t l = 1; l < layers.size(); ++l) {
    for (OrderId v : layers[l]) {
      for (OrderId u : adjacency_[v]) {
        if (static_cast<std::size_t>(distance(a, u)) + 1 == l && distance(u, b) + l == total + 1u) {
          count[v] = count[v] > kMax - count[u] ? kMax : count[v] + count[u];
        }
      }
    }
  }
  return count[b];
}

bool MoveGraph::geodesic_unique(OrderId a, OrderId b) const { return geodesic_count(a, b) == 1; }

std::optional<std::vector<OrderId>> MoveGraph::find_cycle(int length) const {
  if (length < 3) throw std::invalid_argument("cycles have at least 3 vertices");
  const auto target = static_cast<std::size_t>(length);
  if (target > order_count()) return std::nullopt;
  std::vector<OrderId> path;
  std::vector<bool> on_path(order_count(), false);

  // Iterative DFS keeps the stack bounded by the cycle length.
  for (OrderId start = 0; start < order_count(); ++start) {
    path.assign(1, start);
    on_path[start] = true;
    std::vector<std::size_t> cursor(1, 0);
    while (!path.empty()) {
      const OrderId v = path.back();
      if (path.size() == target) {
        if (adjacent(v, start)) return path;
        on_path[v] = false;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      auto& next = cursor.back();
      const auto& list = adjacency_[v];
      while (next < list.size() && (list[next] <= start || on_path[list[next]])) ++next;
      if (next == list.size()) {
        on_path[v] = false;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const OrderId u = list[next++];
      path.push_back(u);
      on_path[u] = true;
      cursor.push_back(0);
    }
  }
  return std::nullopt;
}

std::string MoveGraph::to_dot() const {
  std::ostringstream out;
  out << "graph H" << alternatives() << " {\n";
  for (OrderId v = 0; v < order_count(); ++v) {
    out << "  " << v << " [label=\"" << space_->to_text(v) << "\"];\n";
  }
  for (OrderId v = 0; v < order_count(); ++v) {
    for (OrderId u : adjacency_[v]) {
      if (v < u) out << "  " << v << " -- " << u << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::shared_ptr<const MoveGraph> cover_graph(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MoveGraph>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const MoveGraph>(MoveGraph::build(m));
  return slot;
}

}  // namespace borda
