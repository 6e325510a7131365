#include "setmosaic/order.hpp"

#include <algorithm>
#include <numeric>

#include "setmosaic/error.hpp"

namespace setmosaic {

namespace {

void check_permutation(const ZoneSet& zs, const ZoneOrder& order) {
  const std::size_t m = zs.zone_count();
  if (order.size() != m)
    throw Error("zone order has " + std::to_string(order.size()) +
                " entries, expected " + std::to_string(m));
  std::vector<bool> seen(m, false);
  for (std::size_t idx : order) {
    if (idx >= m || seen[idx])
      throw Error("zone order is not a permutation of 0.." + std::to_string(m - 1));
    seen[idx] = true;
  }
}

// Segments starting at column k equal the sets present in column k but not
// in column k-1 (an empty column precedes column 0), so the total is a sum
// of signature transitions.
std::size_t segment_count_unchecked(const std::vector<Zone>& zones,
                                    const ZoneOrder& order,
                                    const SetMask& empty) {
  std::size_t total = 0;
  const SetMask* prev = &empty;
  for (std::size_t idx : order) {
    total += zones[idx].signature.count_not_in(*prev);
    prev = &zones[idx].signature;
  }
  return total;
}

class ExactSearch {
public:
  explicit ExactSearch(const ZoneSet& zs)
      : zones_(zs.zones()), empty_(zs.set_count()) {}

  ZoneOrder run() {
    const std::size_t m = zones_.size();
    best_order_ = identity_order(m);
    best_cost_ = segment_count_unchecked(zones_, best_order_, empty_);

    used_.assign(m, false);
    current_.clear();
    dfs(empty_);
    return best_order_;
  }

private:
  // Candidates are tried in increasing original index, so the first complete
  // order that strictly improves the incumbent is the lexicographically
  // smallest one with its cost. Identity seeds the incumbent; it is the
  // lexicographic minimum, so ties never displace it wrongly.
  void dfs(const SetMask& last) {
    const std::size_t m = zones_.size();
    if (current_.size() == m) {
      if (partial_cost_ < best_cost_) {
        best_cost_ = partial_cost_;
        best_order_ = current_;
      }
      return;
    }

    // Every set present in an unplaced zone but absent from the last placed
    // one must start at least one more segment.
    SetMask remaining(empty_);
    for (std::size_t i = 0; i < m; ++i)
      if (!used_[i]) remaining |= zones_[i].signature;
    if (partial_cost_ + remaining.count_not_in(last) >= best_cost_) return;

    for (std::size_t i = 0; i < m; ++i) {
      if (used_[i]) continue;
      const std::size_t added = zones_[i].signature.count_not_in(last);
      used_[i] = true;
      current_.push_back(i);
      partial_cost_ += added;
      dfs(zones_[i].signature);
      partial_cost_ -= added;
      current_.pop_back();
      used_[i] = false;
    }
  }

  const std::vector<Zone>& zones_;
  SetMask empty_;
  std::vector<bool> used_;
  ZoneOrder current_;
  std::size_t partial_cost_ = 0;
  std::size_t best_cost_ = 0;
  ZoneOrder best_order_;
};

// Local search working state: evaluates swap/relocation deltas through the
// affected boundary transitions only.
class HillClimber {
public:
  HillClimber(const ZoneSet& zs, ZoneOrder order)
      : zones_(zs.zones()), empty_(zs.set_count()), order_(std::move(order)) {}

  ZoneOrder run() {
    bool improved = true;
    while (improved) {
      improved = false;
      while (try_adjacent_swaps()) improved = true;
      while (try_relocations()) improved = true;
    }
    return order_;
  }

private:
  const SetMask& sig_at(std::size_t pos) const {
    return zones_[order_[pos]].signature;
  }

  // Segments starting where column `to` follows column `from`.
  std::size_t transition(const SetMask& from, const SetMask& to) const {
    return to.count_not_in(from);
  }

  std::size_t cost() const {
    return segment_count_unchecked(zones_, order_, empty_);
  }

  // First-improvement scan over swaps of neighbouring columns; restarts from
  // the left after every applied move so the procedure is deterministic.
  bool try_adjacent_swaps() {
    const std::size_t m = order_.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const SetMask& before = (i == 0) ? empty_ : sig_at(i - 1);
      const SetMask& a = sig_at(i);
      const SetMask& b = sig_at(i + 1);
      // The transition out of column i+1 only exists when a column follows.
      std::size_t old_cost = transition(before, a) + transition(a, b);
      std::size_t new_cost = transition(before, b) + transition(b, a);
      if (i + 2 < m) {
        const SetMask& after = sig_at(i + 2);
        old_cost += transition(b, after);
        new_cost += transition(a, after);
      }
      if (new_cost < old_cost) {
        std::swap(order_[i], order_[i + 1]);
        return true;
      }
    }
    return false;
  }

  // Remove the zone at position i and reinsert it at position j (position in
  // the order after removal). Full-cost evaluation keeps this obviously
  // correct; orders here are small enough that the O(m) scan is cheap.
  bool try_relocations() {
    const std::size_t m = order_.size();
    const std::size_t base = cost();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        ZoneOrder candidate = order_;
        std::size_t moved = candidate[i];
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
        candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(j), moved);
        if (segment_count_unchecked(zones_, candidate, empty_) < base) {
          order_ = std::move(candidate);
          return true;
        }
      }
    }
    return false;
  }

  const std::vector<Zone>& zones_;
  SetMask empty_;
  ZoneOrder order_;
};

}  // namespace

ZoneOrder identity_order(std::size_t zone_count) {
  ZoneOrder order(zone_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

std::size_t segment_count(const ZoneSet& zs, const ZoneOrder& order) {
  check_permutation(zs, order);
  return segment_count_unchecked(zs.zones(), order, SetMask(zs.set_count()));
}

ZoneOrder order_exact(const ZoneSet& zs) {
  constexpr std::size_t kMaxZones = 10;
  if (zs.zone_count() > kMaxZones)
    throw Error("exact ordering is capped at " + std::to_string(kMaxZones) +
                " zones (got " + std::to_string(zs.zone_count()) +
                "); use the heuristic order");
  return ExactSearch(zs).run();
}

ZoneOrder order_heuristic(const ZoneSet& zs) {
  const auto& zones = zs.zones();
  const std::size_t m = zones.size();

  // Greedy chaining by shared-set count with the last placed zone.
  std::vector<bool> placed(m, false);
  ZoneOrder order;
  order.reserve(m);

  std::size_t first = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (zones[i].signature.count() > zones[first].signature.count()) first = i;
  order.push_back(first);
  placed[first] = true;

  while (order.size() < m) {
    const SetMask& last = zones[order.back()].signature;
    std::size_t best = m;
    std::size_t best_shared = 0, best_size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (placed[i]) continue;
      std::size_t shared = zones[i].signature.intersection_count(last);
      std::size_t size = zones[i].signature.count();
      if (best == m || shared > best_shared ||
          (shared == best_shared && size > best_size)) {
        best = i;
        best_shared = shared;
        best_size = size;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }

  return HillClimber(zs, std::move(order)).run();
}

}  // namespace setmosaic
