#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "setmosaic/model.hpp"

namespace setmosaic {

// Abstract set-relation predicates over zones. Self-comparison (a == b) is an
// error rather than trivially true: the task taxonomy never compares a set
// with itself. Results do not depend on zone order.

// True iff some zone contains both labels.
bool intersects(const ZoneSet& zs, std::string_view a, std::string_view b);

// True iff every zone containing `a` also contains `b`. Zones are non-empty
// by construction, so this can never hold vacuously. Non-strict: two labels
// occurring in exactly the same zones are subsets of each other.
bool subset_of(const ZoneSet& zs, std::string_view a, std::string_view b);

// Negation of intersects.
bool disjoint(const ZoneSet& zs, std::string_view a, std::string_view b);

enum class Relation { intersect, subset, disjoint };
enum class Difficulty { easy, hard };

// Easy queries relate candidates to a single target X; hard queries relate
// them to X|Y (intersect, subset) or X&Y (disjoint). Hard requires X != Y.
struct QuerySpec {
  Relation relation;
  Difficulty difficulty;
  std::string target_x;
  std::string target_y;  // used only when difficulty == hard
};

// All candidate labels A outside the targets satisfying the query, in legend
// order:
//   easy   intersect  some zone has A and X
//   easy   subset     every zone with A has X
//   easy   disjoint   no zone has A and X
//   hard   intersect  some zone has A and (X or Y)
//   hard   subset     every zone with A has X or Y
//   hard   disjoint   no zone has A, X and Y together
std::vector<std::string> sets_satisfying(const ZoneSet& zs, const QuerySpec& query);

struct RelationCounts {
  std::size_t intersections = 0;  // unordered pairs sharing a zone
  std::size_t disjoint = 0;       // unordered pairs sharing none
  std::size_t subsets = 0;        // ordered pairs (a, b), a != b, a inside b
};

// Pairwise relation tallies. Intersections and disjointness partition the
// n(n-1)/2 unordered pairs; subsets are counted per ordered containment, so
// two sets with identical zones contribute two subset relations.
RelationCounts count_pairwise_relations(const ZoneSet& zs);

}  // namespace setmosaic
