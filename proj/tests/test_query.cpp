#include <doctest.h>

#include <algorithm>

#include "setmosaic/error.hpp"
#include "setmosaic/query.hpp"
#include "support.hpp"

using namespace setmosaic;
using namespace testsupport;

namespace {

ZoneSet two_disjoint_sets() {
  return zones_from_membership(SetSystem({"A", "B"}, {{"e1", "A"}, {"e2", "B"}}));
}

// Same zone set with the zones list permuted; query results must not change.
ZoneSet rotate_zones(const ZoneSet& zs) {
  std::vector<Zone> zones(zs.zones().begin() + 1, zs.zones().end());
  zones.push_back(zs.zones().front());
  return ZoneSet(zs.set_labels(), std::move(zones));
}

}  // namespace

TEST_CASE("fig2 pairwise relations") {
  ZoneSet zs = fig2_zones();
  CHECK(intersects(zs, "Cars", "Technology"));
  CHECK(subset_of(zs, "Technology", "Books"));
  CHECK_FALSE(subset_of(zs, "Books", "Technology"));
  CHECK_FALSE(disjoint(zs, "Cars", "Books"));
}

TEST_CASE("fully disjoint pair") {
  ZoneSet zs = two_disjoint_sets();
  CHECK(disjoint(zs, "A", "B"));
  CHECK_FALSE(intersects(zs, "A", "B"));
}

TEST_CASE("self-comparison and unknown labels are errors") {
  ZoneSet zs = fig2_zones();
  CHECK_THROWS_AS(intersects(zs, "Books", "Books"), Error);
  CHECK_THROWS_AS(subset_of(zs, "Cars", "Cars"), Error);
  CHECK_THROWS_AS(disjoint(zs, "Books", "Planes"), Error);
  CHECK_THROWS_AS(
      sets_satisfying(zs, {Relation::intersect, Difficulty::hard, "Books", "Books"}),
      Error);
}

TEST_CASE("fig2 query examples") {
  ZoneSet zs = fig2_zones();
  CHECK(sets_satisfying(zs, {Relation::intersect, Difficulty::easy, "Books", ""}) ==
        std::vector<std::string>{"Cars", "Technology"});
  CHECK(sets_satisfying(zs, {Relation::subset, Difficulty::easy, "Books", ""}) ==
        std::vector<std::string>{"Technology"});
  // Technology meets Books&Cars inside the all-three zone, so nothing is
  // disjoint from that intersection (confirmed by the element oracle below).
  CHECK(sets_satisfying(zs,
                        {Relation::disjoint, Difficulty::hard, "Books", "Cars"}) ==
        oracle_query(fig2_system(),
                     {Relation::disjoint, Difficulty::hard, "Books", "Cars"}));
  CHECK(sets_satisfying(zs, {Relation::disjoint, Difficulty::hard, "Books", "Cars"})
            .empty());
}

TEST_CASE("fig2 relation counts") {
  RelationCounts counts = count_pairwise_relations(fig2_zones());
  CHECK(counts.intersections == 3);
  CHECK(counts.disjoint == 0);
  CHECK(counts.subsets == 1);
}

TEST_CASE("two singleton zones count one disjoint pair") {
  RelationCounts counts = count_pairwise_relations(two_disjoint_sets());
  CHECK(counts.intersections == 0);
  CHECK(counts.disjoint == 1);
  CHECK(counts.subsets == 0);
}

TEST_CASE("equal-zone sets are subsets both ways") {
  // Both labels occur in exactly the same zones.
  ZoneSet zs = zones_from_membership(
      SetSystem({"A", "B", "C"}, {{"e1", "A"}, {"e1", "B"}, {"e2", "A"},
                                  {"e2", "B"}, {"e3", "C"}}));
  CHECK(subset_of(zs, "A", "B"));
  CHECK(subset_of(zs, "B", "A"));
  CHECK(count_pairwise_relations(zs).subsets == 2);
}

TEST_CASE("query results match element enumeration on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SetSystem system = random_system(seed, 6, 30);
    ZoneSet zs = zones_from_membership(system);
    const auto& labels = system.set_labels();

    for (Relation relation :
         {Relation::intersect, Relation::subset, Relation::disjoint}) {
      for (const auto& x : labels) {
        QuerySpec easy{relation, Difficulty::easy, x, ""};
        CHECK(sets_satisfying(zs, easy) == oracle_query(system, easy));
        for (const auto& y : labels) {
          if (x == y) continue;
          QuerySpec hard{relation, Difficulty::hard, x, y};
          CHECK(sets_satisfying(zs, hard) == oracle_query(system, hard));
        }
      }
    }

    RelationCounts counts = count_pairwise_relations(zs);
    RelationCounts expected = oracle_relation_counts(system);
    CHECK(counts.intersections == expected.intersections);
    CHECK(counts.disjoint == expected.disjoint);
    CHECK(counts.subsets == expected.subsets);
  }
}

TEST_CASE("intersects and disjoint partition all pairs; subset implies intersect") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    SetSystem system = random_system(seed, 5, 20);
    ZoneSet zs = zones_from_membership(system);
    const auto& labels = zs.set_labels();
    std::size_t pair_count = 0;
    RelationCounts counts = count_pairwise_relations(zs);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        ++pair_count;
        CHECK(intersects(zs, labels[i], labels[j]) !=
              disjoint(zs, labels[i], labels[j]));
        if (subset_of(zs, labels[i], labels[j]))
          CHECK(intersects(zs, labels[i], labels[j]));
      }
    }
    CHECK(counts.intersections + counts.disjoint == pair_count);
  }
}

TEST_CASE("query results are invariant under zone permutation") {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    SetSystem system = random_system(seed, 5, 15);
    ZoneSet zs = zones_from_membership(system);
    if (zs.zone_count() < 2) continue;
    ZoneSet rotated = rotate_zones(zs);
    for (const auto& x : zs.set_labels()) {
      for (Relation relation :
           {Relation::intersect, Relation::subset, Relation::disjoint}) {
        QuerySpec spec{relation, Difficulty::easy, x, ""};
        CHECK(sets_satisfying(zs, spec) == sets_satisfying(rotated, spec));
      }
    }
    RelationCounts a = count_pairwise_relations(zs);
    RelationCounts b = count_pairwise_relations(rotated);
    CHECK(a.intersections == b.intersections);
    CHECK(a.subsets == b.subsets);
  }
}

TEST_CASE("hard query with coincident targets reduces to the easy query") {
  // X and Y occupy exactly the same zones, so the hard result is the easy
  // result minus Y itself (Y is excluded as a target).
  SetSystem system({"X", "Y", "A", "B"},
                   {{"e1", "X"}, {"e1", "Y"}, {"e1", "A"},
                    {"e2", "X"}, {"e2", "Y"},
                    {"e3", "B"}});
  ZoneSet zs = zones_from_membership(system);

  for (Relation relation :
       {Relation::intersect, Relation::subset, Relation::disjoint}) {
    auto easy = sets_satisfying(zs, {relation, Difficulty::easy, "X", ""});
    std::erase(easy, "Y");
    auto hard = sets_satisfying(zs, {relation, Difficulty::hard, "X", "Y"});
    CHECK(easy == hard);
  }
}
