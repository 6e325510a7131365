#pragma once

// Shared test fixtures, random-instance generation and independent oracles.
// Oracles here deliberately avoid the library's code paths: relations are
// brute-forced over raw memberships, segment counts over per-set column
// scans, optimal orders over full permutation enumeration.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "setmosaic/model.hpp"
#include "setmosaic/order.hpp"
#include "setmosaic/query.hpp"
#include "setmosaic/rng.hpp"

namespace testsupport {

using setmosaic::Difficulty;
using setmosaic::Relation;
using setmosaic::SetSystem;
using setmosaic::ZoneOrder;
using setmosaic::ZoneSet;

// The three-interest example: people interested in books, cars, technology;
// everyone interested in technology also likes books; zones B, C, BT, BTC.
inline SetSystem fig2_system() {
  return SetSystem({"Books", "Cars", "Technology"},
                   {{"e1", "Books"},
                    {"e2", "Cars"},
                    {"e3", "Books"},
                    {"e3", "Technology"},
                    {"e4", "Books"},
                    {"e4", "Technology"},
                    {"e4", "Cars"}});
}

inline ZoneSet fig2_zones() { return setmosaic::zones_from_membership(fig2_system()); }

// Deterministic random set system: 2..max_sets sets, 1..max_elements
// elements, each with a uniform non-empty signature; sets left empty by the
// draw get patched with one random member.
inline SetSystem random_system(std::uint64_t seed, std::size_t max_sets,
                               std::size_t max_elements) {
  setmosaic::SplitMix64 rng(seed);
  const std::size_t n_sets = 2 + rng.bounded(max_sets - 1);
  const std::size_t n_elems = 1 + rng.bounded(max_elements);

  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n_sets; ++s) labels.push_back("S" + std::to_string(s));

  std::vector<std::uint64_t> signatures(n_elems);
  for (std::size_t e = 0; e < n_elems; ++e)
    signatures[e] = 1 + rng.bounded((std::uint64_t{1} << n_sets) - 1);
  for (std::size_t s = 0; s < n_sets; ++s) {
    bool used = false;
    for (std::uint64_t sig : signatures) used |= (sig >> s) & 1;
    if (!used) signatures[rng.bounded(n_elems)] |= std::uint64_t{1} << s;
  }

  std::vector<SetSystem::Membership> memberships;
  for (std::size_t e = 0; e < n_elems; ++e)
    for (std::size_t s = 0; s < n_sets; ++s)
      if ((signatures[e] >> s) & 1)
        memberships.emplace_back("e" + std::to_string(e), labels[s]);
  return SetSystem(std::move(labels), std::move(memberships));
}

// As above but the zone count is capped, retrying derived seeds until the
// instance is small enough.
inline SetSystem random_small_system(std::uint64_t seed, std::size_t max_sets,
                                     std::size_t max_elements,
                                     std::size_t max_zones) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SetSystem system = random_system(
        setmosaic::SplitMix64::child(seed, attempt).next(), max_sets, max_elements);
    if (setmosaic::zones_from_membership(system).zone_count() <= max_zones)
      return system;
  }
}

// ---- membership-level oracles -------------------------------------------

inline std::map<std::string, std::set<std::string>> elements_by_set(
    const SetSystem& system) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [element, label] : system.memberships()) out[label].insert(element);
  return out;
}

// Groups elements by exact signature; zone multiset without any ordering.
inline std::map<std::vector<std::string>, std::uint64_t> oracle_zone_groups(
    const SetSystem& system) {
  std::map<std::string, std::set<std::string>> per_element;
  for (const auto& [element, label] : system.memberships())
    per_element[element].insert(label);
  std::map<std::vector<std::string>, std::uint64_t> groups;
  for (const auto& [element, labels] : per_element) {
    std::vector<std::string> signature(labels.begin(), labels.end());
    ++groups[signature];
  }
  return groups;
}

inline bool oracle_intersects(const SetSystem& system, const std::string& a,
                              const std::string& b) {
  auto sets = elements_by_set(system);
  for (const auto& e : sets[a])
    if (sets[b].count(e)) return true;
  return false;
}

inline bool oracle_subset(const SetSystem& system, const std::string& a,
                          const std::string& b) {
  auto sets = elements_by_set(system);
  return std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(),
                       sets[a].end());
}

inline std::vector<std::string> oracle_query(const SetSystem& system,
                                             const setmosaic::QuerySpec& spec) {
  auto sets = elements_by_set(system);
  std::set<std::string> region;
  if (spec.difficulty == Difficulty::easy) {
    region = sets[spec.target_x];
  } else if (spec.relation == Relation::disjoint) {
    for (const auto& e : sets[spec.target_x])
      if (sets[spec.target_y].count(e)) region.insert(e);
  } else {
    region = sets[spec.target_x];
    region.insert(sets[spec.target_y].begin(), sets[spec.target_y].end());
  }

  std::vector<std::string> result;
  for (const auto& label : system.set_labels()) {
    if (label == spec.target_x) continue;
    if (spec.difficulty == Difficulty::hard && label == spec.target_y) continue;
    const auto& members = sets[label];
    bool qualifies = false;
    switch (spec.relation) {
      case Relation::intersect:
        qualifies = std::any_of(members.begin(), members.end(),
                                [&](const std::string& e) { return region.count(e); });
        break;
      case Relation::subset:
        qualifies = std::all_of(members.begin(), members.end(),
                                [&](const std::string& e) { return region.count(e); });
        break;
      case Relation::disjoint:
        qualifies = std::none_of(members.begin(), members.end(),
                                 [&](const std::string& e) { return region.count(e); });
        break;
    }
    if (qualifies) result.push_back(label);
  }
  return result;
}

inline setmosaic::RelationCounts oracle_relation_counts(const SetSystem& system) {
  setmosaic::RelationCounts counts;
  const auto& labels = system.set_labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      (oracle_intersects(system, labels[i], labels[j]) ? counts.intersections
                                                       : counts.disjoint)++;
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (a != b && oracle_subset(system, a, b)) ++counts.subsets;
  return counts;
}

// ---- order-level oracles --------------------------------------------------

// Runs per set, enumerated column by column.
inline std::size_t oracle_segment_count(const ZoneSet& zs, const ZoneOrder& order) {
  std::size_t total = 0;
  for (std::size_t s = 0; s < zs.set_count(); ++s) {
    bool prev = false;
    for (std::size_t idx : order) {
      const bool present = zs.zones()[idx].signature.test(s);
      if (present && !prev) ++total;
      prev = present;
    }
  }
  return total;
}

// Full enumeration in lexicographic order; first strict improvement wins, so
// ties resolve to the lexicographically smallest permutation.
inline ZoneOrder oracle_best_order(const ZoneSet& zs) {
  ZoneOrder perm = setmosaic::identity_order(zs.zone_count());
  ZoneOrder best = perm;
  std::size_t best_cost = oracle_segment_count(zs, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const std::size_t cost = oracle_segment_count(zs, perm);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  }
  return best;
}

// ---- colour oracle ---------------------------------------------------------

// Independent sRGB -> CIELUV conversion, written directly from the CIE
// definitions with its own constants; keeps the library conversion honest.
struct OracleLuv {
  double l, u, v;
};

inline OracleLuv oracle_srgb_to_luv(int r8, int g8, int b8) {
  auto decode = [](double c) {
    c /= 255.0;
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
  };
  const double r = decode(r8), g = decode(g8), b = decode(b8);
  const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

  const double ref_up = 0.19783982482140777;  // D65 white u', v'
  const double ref_vp = 0.46833630293240970;
  const double l = y > 0.008856451679035631
                       ? 116.0 * std::pow(y, 1.0 / 3.0) - 16.0
                       : 903.2962962962963 * y;
  const double denom = x + 15.0 * y + 3.0 * z;
  const double up = denom > 0 ? 4.0 * x / denom : 0.0;
  const double vp = denom > 0 ? 9.0 * y / denom : 0.0;
  return {l, 13.0 * l * (up - ref_up), 13.0 * l * (vp - ref_vp)};
}

inline double oracle_luv_distance(const OracleLuv& a, const OracleLuv& b) {
  return std::sqrt((a.l - b.l) * (a.l - b.l) + (a.u - b.u) * (a.u - b.u) +
                   (a.v - b.v) * (a.v - b.v));
}

// ---- minimal XML well-formedness check ------------------------------------

// Enough XML to validate the renderer's output: declaration, balanced tags,
// self-closing elements, quoted attributes, no stray '<' or '>'.
inline bool well_formed_xml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                               text[i] == '\r'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '<') {
      if (i + 1 >= text.size()) return false;
      if (text[i + 1] == '?') {  // declaration
        std::size_t end = text.find("?>", i);
        if (end == std::string::npos) return false;
        i = end + 2;
        continue;
      }
      const bool closing = text[i + 1] == '/';
      std::size_t p = i + (closing ? 2 : 1);
      std::size_t name_start = p;
      while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) ||
                                 text[p] == '-' || text[p] == '_' || text[p] == ':'))
        ++p;
      if (p == name_start) return false;
      const std::string name = text.substr(name_start, p - name_start);
      // scan to tag end, honouring quotes
      bool self_closing = false;
      while (p < text.size() && text[p] != '>') {
        if (text[p] == '"') {
          p = text.find('"', p + 1);
          if (p == std::string::npos) return false;
        } else if (text[p] == '<') {
          return false;
        }
        ++p;
      }
      if (p >= text.size()) return false;
      if (text[p - 1] == '/') self_closing = true;
      if (closing) {
        if (stack.empty() || stack.back() != name) return false;
        stack.pop_back();
      } else if (!self_closing) {
        stack.push_back(name);
      }
      i = p + 1;
    } else if (text[i] == '>') {
      return false;
    } else {
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(text[i])))
        return false;  // text content outside the root element
      ++i;
    }
  }
  return stack.empty();
}

}  // namespace testsupport
