#include "setmosaic/query.hpp"

#include "setmosaic/error.hpp"

namespace setmosaic {

namespace {

std::pair<std::size_t, std::size_t> pair_indices(const ZoneSet& zs,
                                                 std::string_view a,
                                                 std::string_view b) {
  std::size_t ia = zs.label_index(a);
  std::size_t ib = zs.label_index(b);
  if (ia == ib)
    throw Error("cannot compare set '" + std::string(a) + "' with itself");
  return {ia, ib};
}

bool intersects_idx(const ZoneSet& zs, std::size_t a, std::size_t b) {
  for (const Zone& z : zs.zones())
    if (z.signature.test(a) && z.signature.test(b)) return true;
  return false;
}

bool subset_idx(const ZoneSet& zs, std::size_t a, std::size_t b) {
  for (const Zone& z : zs.zones())
    if (z.signature.test(a) && !z.signature.test(b)) return false;
  return true;
}

}  // namespace

bool intersects(const ZoneSet& zs, std::string_view a, std::string_view b) {
  auto [ia, ib] = pair_indices(zs, a, b);
  return intersects_idx(zs, ia, ib);
}

bool subset_of(const ZoneSet& zs, std::string_view a, std::string_view b) {
  auto [ia, ib] = pair_indices(zs, a, b);
  return subset_idx(zs, ia, ib);
}

bool disjoint(const ZoneSet& zs, std::string_view a, std::string_view b) {
  auto [ia, ib] = pair_indices(zs, a, b);
  return !intersects_idx(zs, ia, ib);
}

std::vector<std::string> sets_satisfying(const ZoneSet& zs, const QuerySpec& query) {
  const std::size_t x = zs.label_index(query.target_x);
  std::size_t y = x;
  if (query.difficulty == Difficulty::hard) {
    y = zs.label_index(query.target_y);
    if (x == y)
      throw Error("hard query requires two distinct targets, got '" +
                  query.target_x + "' twice");
  }

  // Per candidate A, scan zones once. `hit` means the relevant target region
  // co-occurs with A in some zone; `miss` means some zone has A outside it.
  std::vector<std::string> result;
  for (std::size_t a = 0; a < zs.set_count(); ++a) {
    if (a == x || (query.difficulty == Difficulty::hard && a == y)) continue;

    bool hit = false;   // some zone with A meets the target region
    bool miss = false;  // some zone with A avoids the target region
    for (const Zone& z : zs.zones()) {
      if (!z.signature.test(a)) continue;
      bool in_region;
      if (query.difficulty == Difficulty::easy) {
        in_region = z.signature.test(x);
      } else if (query.relation == Relation::disjoint) {
        in_region = z.signature.test(x) && z.signature.test(y);  // X & Y
      } else {
        in_region = z.signature.test(x) || z.signature.test(y);  // X | Y
      }
      (in_region ? hit : miss) = true;
    }

    bool qualifies = false;
    switch (query.relation) {
      case Relation::intersect: qualifies = hit; break;
      case Relation::subset: qualifies = !miss; break;
      case Relation::disjoint: qualifies = !hit; break;
    }
    if (qualifies) result.push_back(zs.set_labels()[a]);
  }
  return result;
}

RelationCounts count_pairwise_relations(const ZoneSet& zs) {
  RelationCounts counts;
  const std::size_t n = zs.set_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (intersects_idx(zs, a, b))
        ++counts.intersections;
      else
        ++counts.disjoint;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && subset_idx(zs, a, b)) ++counts.subsets;
  return counts;
}

}  // namespace setmosaic
