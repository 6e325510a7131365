#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setmosaic/mask.hpp"

namespace setmosaic {

// Declared set labels plus raw element->set membership records. Ground truth
// for everything downstream. Construction validates:
//   - labels are distinct and non-empty, in the caller's order (legend order),
//   - every membership names a declared label,
//   - every declared label has at least one member (empty sets cannot be
//     depicted by either diagram type, so they are rejected at ingestion),
//   - no duplicate (element, label) pair.
// Labels and element ids are opaque byte strings; no trimming or case folding.
class SetSystem {
public:
  using Membership = std::pair<std::string, std::string>;  // (element_id, set_label)

  SetSystem(std::vector<std::string> set_labels, std::vector<Membership> memberships);

  const std::vector<std::string>& set_labels() const { return set_labels_; }
  const std::vector<Membership>& memberships() const { return memberships_; }
  std::size_t element_count() const { return element_count_; }

private:
  std::vector<std::string> set_labels_;
  std::vector<Membership> memberships_;
  std::size_t element_count_ = 0;
};

// One non-empty overlap region: the exact combination of sets some element
// belongs to, with the number of such elements.
struct Zone {
  SetMask signature;          // over ZoneSet label indices; never empty
  std::uint64_t cardinality;  // >= 1
};

// The zones of a set system, in a stable order (first occurrence for
// membership data, file order for zone files). Zone order here carries no
// meaning; layouts impose their own order via a permutation.
class ZoneSet {
public:
  ZoneSet(std::vector<std::string> set_labels, std::vector<Zone> zones);

  const std::vector<std::string>& set_labels() const { return set_labels_; }
  const std::vector<Zone>& zones() const { return zones_; }
  std::size_t set_count() const { return set_labels_.size(); }
  std::size_t zone_count() const { return zones_.size(); }

  // Index of `label`, or throws Error naming it.
  std::size_t label_index(std::string_view label) const;

  // Labels present in the given zone, in legend order.
  std::vector<std::string> signature_labels(std::size_t zone_index) const;

private:
  std::vector<std::string> set_labels_;
  std::vector<Zone> zones_;
};

// Groups elements by their exact membership signature. Zones come out in
// first-occurrence order: the order in which each signature is completed by
// the first element (in membership order) that carries it.
ZoneSet zones_from_membership(const SetSystem& system);

}  // namespace setmosaic
