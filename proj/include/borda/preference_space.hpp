#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "borda/rational.hpp"

namespace borda {

/// Largest alternative count the library supports. The state space grows as
/// the Fubini numbers (4683 weak orders at m = 6).
inline constexpr int kMaxAlternatives = 6;

using Alternative = int;
using ScoreVector = std::vector<Rational>;

/// Index of a weak order in the canonical enumeration of its space.
using OrderId = std::uint32_t;

/// A weak order (total preorder) stored as an ordered partition of the
/// alternatives {0, ..., m-1}. classes()[0] is the most preferred class and
/// members of each class are kept sorted, so equality of two WeakOrders is
/// equality of their class sequences.
class WeakOrder {
 public:
  WeakOrder() = default;
  explicit WeakOrder(std::vector<std::vector<Alternative>> classes);

  /// Builds from per-alternative class indices; the indices must cover
  /// 0..k-1 for some k.
  static WeakOrder from_levels(std::span<const int> levels);

  int alternatives() const { return static_cast<int>(levels_.size()); }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<Alternative>>& classes() const { return classes_; }
  int level_of(Alternative a) const { return levels_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& levels() const { return levels_; }

  bool is_strict() const { return classes_.size() == levels_.size(); }
  bool is_all_tied() const { return classes_.size() == 1; }

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) { return a.classes_ == b.classes_; }
  /// Canonical order: lexicographic over the class sequences.
  friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) { return a.classes_ <=> b.classes_; }

 private:
  std::vector<std::vector<Alternative>> classes_;
  std::vector<int> levels_;
};

/// All weak orders on m alternatives, once each, sorted canonically.
std::vector<WeakOrder> enumerate_weak_orders(int m);

/// Ordered Bell number: sum over k of k! * S(m, k).
std::uint64_t fubini(int m);

/// Averaged Borda scores: the top rank is worth m-1 and a tied class shares
/// the mean of the rank values it occupies.
ScoreVector borda_scores(const WeakOrder& order);

/// Sorts alternatives by decreasing score; exactly equal scores share a class.
WeakOrder project(std::span<const Rational> scores);

/// Reverses the class sequence.
WeakOrder antipode(const WeakOrder& order);

/// Smallest score gap between two alternatives in different classes of
/// project(scores). Empty when project(scores) is the all-tied order.
std::optional<Rational> margin_from_ties(std::span<const Rational> scores);

/// Kemeny distance with penalties 0 (same relation), 1 (tie vs strict),
/// 2 (opposite strict) summed over unordered pairs.
Rational kemeny_distance(const WeakOrder& a, const WeakOrder& b);

/// Order text format: classes separated by '>', tied alternatives grouped in
/// parentheses, e.g. "x>y>z", "(xy)>z", "(xyz)". Alternatives are written
/// as letters (x, y, z, u) when m <= 4 and as digits otherwise.
class OrderFormat {
 public:
  explicit OrderFormat(int m);
  /// Custom single-character names, one per alternative.
  OrderFormat(int m, std::string names);

  int alternatives() const { return m_; }
  const std::string& names() const { return names_; }

  std::string format(const WeakOrder& order) const;
  /// Throws std::invalid_argument on malformed text. Digits are accepted in
  /// addition to the configured names.
  WeakOrder parse(std::string_view text) const;

 private:
  std::optional<Alternative> lookup(char c) const;

  int m_;
  std::string names_;
};

/// The enumerated state space with per-order tables for the hot paths of the
/// dynamics (scores and antipodes by id).
class PreferenceSpace {
 public:
  explicit PreferenceSpace(int m);

  int alternatives() const { return m_; }
  std::size_t size() const { return orders_.size(); }

  const WeakOrder& order(OrderId id) const { return orders_[id]; }
  const std::vector<WeakOrder>& orders() const { return orders_; }
  OrderId id_of(const WeakOrder& order) const;

  const ScoreVector& scores(OrderId id) const { return scores_[id]; }
  OrderId antipode(OrderId id) const { return antipodes_[id]; }

  /// Id of project(scores).
  OrderId project_id(std::span<const Rational> scores) const;

  const OrderFormat& format() const { return format_; }
  std::string to_text(OrderId id) const { return format_.format(orders_[id]); }
  OrderId parse(std::string_view text) const { return id_of(format_.parse(text)); }

 private:
  std::size_t level_key(std::span<const int> levels) const;

  int m_;
  std::vector<WeakOrder> orders_;
  std::vector<ScoreVector> scores_;
  std::vector<OrderId> antipodes_;
  std::vector<OrderId> by_levels_;
  OrderFormat format_;
};

}  // namespace borda
