#include "borda/preference_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace borda {
namespace {

constexpr OrderId kNoOrder = static_cast<OrderId>(-1);

void check_alternative_count(int m) {
  if (m < 1) throw std::domain_error("weak orders need at least one alternative");
  if (m > kMaxAlternatives) {
    throw std::domain_error("at most " + std::to_string(kMaxAlternatives) + " alternatives are supported");
  }
}

// Surjective level assignments {0..m-1} -> {0..k-1}, in any order.
void collect_levels(int m, std::vector<int>& levels, int used, std::vector<WeakOrder>& out) {
  const auto pos = static_cast<int>(levels.size());
  if (pos == m) {
    std::vector<bool> seen(static_cast<std::size_t>(used), false);
    for (int l : levels) seen[static_cast<std::size_t>(l)] = true;
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      out.push_back(WeakOrder::from_levels(levels));
    }
    return;
  }
  // Each alternative takes an existing level or opens one more; classes
  // never outnumber alternatives.
  for (int l = 0; l < m; ++l) {
    levels.push_back(l);
    collect_levels(m, levels, std::max(used, l + 1), out);
    levels.pop_back();
  }
}

}  // namespace

WeakOrder::WeakOrder(std::vector<std::vector<Alternative>> classes) : classes_(std::move(classes)) {
  int m = 0;
  for (const auto& c : classes_) m += static_cast<int>(c.size());
  levels_.assign(static_cast<std::size_t>(m), -1);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    auto& c = classes_[k];
    if (c.empty()) throw std::invalid_argument("weak order has an empty indifference class");
    std::sort(c.begin(), c.end());
    for (Alternative a : c) {
      if (a < 0 || a >= m || levels_[static_cast<std::size_t>(a)] != -1) {
        throw std::invalid_argument("weak order classes must partition 0..m-1");
      }
      levels_[static_cast<std::size_t>(a)] = static_cast<int>(k);
    }
  }
}

WeakOrder WeakOrder::from_levels(std::span<const int> levels) {
  const int k = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end()) + 1;
  std::vector<std::vector<Alternative>> classes(static_cast<std::size_t>(k));
  for (std::size_t a = 0; a < levels.size(); ++a) {
    if (levels[a] < 0) throw std::invalid_argument("negative class index");
    classes[static_cast<std::size_t>(levels[a])].push_back(static_cast<Alternative>(a));
  }
  return WeakOrder(std::move(classes));
}

std::vector<WeakOrder> enumerate_weak_orders(int m) {
  check_alternative_count(m);
  std::vector<WeakOrder> out;
  std::vector<int> levels;
  levels.reserve(static_cast<std::size_t>(m));
  collect_levels(m, levels, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t fubini(int m) {
  check_alternative_count(m);
  // Stirling numbers of the second kind by the usual recurrence.
  std::vector<std::vector<std::uint64_t>> stirling(static_cast<std::size_t>(m) + 1,
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(m); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      stirling[n][k] = k * stirling[n - 1][k] + stirling[n - 1][k - 1];
    }
  }
  std::uint64_t total = 0;
  std::uint64_t factorial = 1;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) {
    factorial *= k;
    total += factorial * stirling[static_cast<std::size_t>(m)][k];
  }
  return total;
}

ScoreVector borda_scores(const WeakOrder& order) {
  const int m = order.alternatives();
  ScoreVector scores(static_cast<std::size_t>(m));
  int above = 0;
  for (const auto& cls : order.classes()) {
    const auto c = static_cast<int>(cls.size());
    // Occupied rank values m-1-above down to m-above-c; their mean:
    const Rational value(2 * (m - above) - c - 1, 2);
    for (Alternative a : cls) scores[static_cast<std::size_t>(a)] = value;
    above += c;
  }
  return scores;
}

WeakOrder project(std::span<const Rational> scores) {
  std::vector<Alternative> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](Alternative a, Alternative b) {
    return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
  });
  std::vector<std::vector<Alternative>> classes;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r == 0 || scores[static_cast<std::size_t>(idx[r])] != scores[static_cast<std::size_t>(idx[r - 1])]) {
      classes.emplace_back();
    }
    classes.back().push_back(idx[r]);
  }
  return WeakOrder(std::move(classes));
}

WeakOrder antipode(const WeakOrder& order) {
  auto classes = order.classes();
  std::reverse(classes.begin(), classes.end());
  return WeakOrder(std::move(classes));
}

std::optional<Rational> margin_from_ties(std::span<const Rational> scores) {
  std::vector<Rational> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  // The closest cross-class pair is adjacent in sorted order.
  std::optional<Rational> best;
  for (std::size_t r = 1; r < sorted.size(); ++r) {
    if (sorted[r] == sorted[r - 1]) continue;
    const Rational gap = sorted[r] - sorted[r - 1];
    if (!best || gap < *best) best = gap;
  }
  return best;
}

Rational kemeny_distance(const WeakOrder& a, const WeakOrder& b) {
  if (a.alternatives() != b.alternatives()) {
    throw std::domain_error("kemeny distance between orders on different alternative sets");
  }
  const int m = a.alternatives();
  std::int64_t total = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      // Lower level means more preferred.
      const int ra = (a.level_of(y) > a.level_of(x)) - (a.level_of(y) < a.level_of(x));
      const int rb = (b.level_of(y) > b.level_of(x)) - (b.level_of(y) < b.level_of(x));
      total += ra > rb ? ra - rb : rb - ra;
    }
  }
  return Rational(total);
}

OrderFormat::OrderFormat(int m) : OrderFormat(m, m <= 4 ? std::string("xyzu").substr(0, static_cast<std::size_t>(m))
                                                          : std::string("012345").substr(0, static_cast<std::size_t>(m))) {}

OrderFormat::OrderFormat(int m, std::string names) : m_(m), names_(std::move(names)) {
  check_alternative_count(m);
  if (names_.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("alternative names must list exactly one character per alternative");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const char c = names_[i];
    if (c == '>' || c == '(' || c == ')' || c == ' ') throw std::invalid_argument("reserved character in alternative names");
    if (names_.find(c, i + 1) != std::string::npos) throw std::invalid_argument("duplicate alternative name");
  }
}

std::string OrderFormat::format(const WeakOrder& order) const {
  if (order.alternatives() != m_) throw std::domain_error("order does not match the format's alternative count");
  std::string out;
  for (std::size_t k = 0; k < order.class_count(); ++k) {
    if (k > 0) out += '>';
    const auto& cls = order.classes()[k];
    if (cls.size() > 1) out += '(';
    for (Alternative a : cls) out += names_[static_cast<std::size_t>(a)];
    if (cls.size() > 1) out += ')';
  }
  return out;
}

std::optional<Alternative> OrderFormat::lookup(char c) const {
  if (const auto pos = names_.find(c); pos != std::string::npos) return static_cast<Alternative>(pos);
  if (c >= '0' && c <= '9' && c - '0' < m_) return c - '0';
  return std::nullopt;
}

WeakOrder OrderFormat::parse(std::string_view text) const {
  const std::string whole(text);
  auto fail = [&](const std::string& why) -> WeakOrder {
    throw std::invalid_argument("cannot parse order '" + whole + "': " + why);
  };
  std::vector<std::vector<Alternative>> classes;
  std::vector<bool> seen(static_cast<std::size_t>(m_), false);
  std::size_t i = 0;
  auto take = [&](char c, std::vector<Alternative>& cls) {
    const auto a = lookup(c);
    if (!a) fail(std::string("unknown alternative '") + c + "'");
    if (seen[static_cast<std::size_t>(*a)]) fail(std::string("alternative '") + c + "' appears twice");
    seen[static_cast<std::size_t>(*a)] = true;
    cls.push_back(*a);
  };
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) fail("expected a class");
    std::vector<Alternative> cls;
    if (text[i] == '(') {
      ++i;
      while (i < text.size() && text[i] != ')') {
        if (text[i] != ' ') take(text[i], cls);
        ++i;
      }
      if (i >= text.size()) fail("unterminated '('");
      if (cls.empty()) fail("empty class");
      ++i;
    } else {
      take(text[i], cls);
      ++i;
    }
    classes.push_back(std::move(cls));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    if (text[i] != '>') fail("expected '>'");
    ++i;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("not every alternative is ranked");
  return WeakOrder(std::move(classes));
}

PreferenceSpace::PreferenceSpace(int m) : m_(m), orders_(enumerate_weak_orders(m)), format_(m) {
  std::size_t keys = 1;
  for (int i = 0; i < m; ++i) keys *= static_cast<std::size_t>(m);
  by_levels_.assign(keys, kNoOrder);
  scores_.reserve(orders_.size());
  for (OrderId id = 0; id < orders_.size(); ++id) {
    by_levels_[level_key(orders_[id].levels())] = id;
    scores_.push_back(borda_scores(orders_[id]));
  }
  antipodes_.reserve(orders_.size());
  for (const auto& order : orders_) antipodes_.push_back(id_of(borda::antipode(order)));
}

std::size_t PreferenceSpace::level_key(std::span<const int> levels) const {
  std::size_t key = 0;
  for (int l : levels) key = key * static_cast<std::size_t>(m_) + static_cast<std::size_t>(l);
  return key;
}

OrderId PreferenceSpace::id_of(const WeakOrder& order) const {
  if (order.alternatives() != m_) throw std::domain_error("order does not belong to this preference space");
  return by_levels_[level_key(order.levels())];
}

OrderId PreferenceSpace::project_id(std::span<const Rational> scores) const {
  if (scores.size() != static_cast<std::size_t>(m_)) throw std::domain_error("score vector has the wrong length");
  // Rank each alternative by the number of distinct larger scores.
  std::vector<Rational> distinct(scores.begin(), scores.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> levels(scores.size());
  for (std::size_t a = 0; a < scores.size(); ++a) {
    levels[a] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), scores[a], std::greater<>()) -
                                 distinct.begin());
  }
  return by_levels_[level_key(levels)];
}

}  // namespace borda
