#pragma once

#include <cstddef>
#include <vector>

#include "setmosaic/model.hpp"

namespace setmosaic {

// A left-to-right column order: permutation[k] is the index (into
// ZoneSet::zones) of the zone drawn in column k.
using ZoneOrder = std::vector<std::size_t>;

ZoneOrder identity_order(std::size_t zone_count);

// Total number of maximal consecutive column runs over all sets, i.e. the
// number of line segments a linear diagram of this order needs. Lower is
// easier to read; the floor is one segment per set.
std::size_t segment_count(const ZoneSet& zs, const ZoneOrder& order);

// Globally minimal order by branch-and-bound over permutations; ties resolve
// to the lexicographically smallest permutation of original indices. Capped
// at 10 zones; beyond that the search space is factorial, use order_heuristic.
ZoneOrder order_exact(const ZoneSet& zs);

// Deterministic two-phase heuristic. Greedy chaining first: start from the
// zone with the largest signature (ties: smallest index), then repeatedly
// append the unplaced zone sharing the most sets with the last placed one
// (ties: larger signature, then smallest index). Then hill-climb with
// adjacent-pair swaps and single-zone relocations until neither move type
// can reduce segment_count. Output is bit-identical across calls.
ZoneOrder order_heuristic(const ZoneSet& zs);

}  // namespace setmosaic
