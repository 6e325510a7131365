#include "setmosaic/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "setmosaic/error.hpp"

namespace setmosaic {

SetSystem::SetSystem(std::vector<std::string> set_labels,
                     std::vector<Membership> memberships)
    : set_labels_(std::move(set_labels)), memberships_(std::move(memberships)) {
  std::unordered_set<std::string> seen_labels;
  for (const auto& label : set_labels_) {
    if (label.empty()) throw Error("set label must be non-empty");
    if (!seen_labels.insert(label).second)
      throw Error("duplicate set label '" + label + "'");
  }

  std::unordered_set<std::string> labels_with_members;
  std::set<Membership> seen_pairs;
  std::unordered_set<std::string> elements;
  for (const auto& [element, label] : memberships_) {
    if (element.empty()) throw Error("element id must be non-empty");
    if (!seen_labels.count(label))
      throw Error("membership names undeclared set label '" + label + "'");
    if (!seen_pairs.insert({element, label}).second)
      throw Error("duplicate membership (" + element + ", " + label + ")");
    labels_with_members.insert(label);
    elements.insert(element);
  }
  for (const auto& label : set_labels_)
    if (!labels_with_members.count(label))
      throw Error("set '" + label + "' has no members");
  element_count_ = elements.size();
}

ZoneSet::ZoneSet(std::vector<std::string> set_labels, std::vector<Zone> zones)
    : set_labels_(std::move(set_labels)), zones_(std::move(zones)) {
  if (zones_.empty()) throw Error("zone set must contain at least one zone");

  std::unordered_set<std::string> seen_labels;
  for (const auto& label : set_labels_) {
    if (label.empty()) throw Error("set label must be non-empty");
    if (!seen_labels.insert(label).second)
      throw Error("duplicate set label '" + label + "'");
  }

  SetMask used(set_labels_.size());
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    const Zone& zone = zones_[i];
    if (zone.signature.universe() != set_labels_.size())
      throw Error("zone signature does not match the declared sets");
    if (zone.signature.none()) throw Error("zone signature must be non-empty");
    if (zone.cardinality < 1) throw Error("zone cardinality must be at least 1");
    for (std::size_t j = 0; j < i; ++j)
      if (zones_[j].signature == zone.signature)
        throw Error("duplicate zone signature");
    used |= zone.signature;
  }
  for (std::size_t s = 0; s < set_labels_.size(); ++s)
    if (!used.test(s))
      throw Error("set '" + set_labels_[s] + "' appears in no zone");
}

std::size_t ZoneSet::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < set_labels_.size(); ++i)
    if (set_labels_[i] == label) return i;
  throw Error("unknown set label '" + std::string(label) + "'");
}

std::vector<std::string> ZoneSet::signature_labels(std::size_t zone_index) const {
  std::vector<std::string> out;
  const SetMask& sig = zones_[zone_index].signature;
  for (std::size_t s = 0; s < set_labels_.size(); ++s)
    if (sig.test(s)) out.push_back(set_labels_[s]);
  return out;
}

ZoneSet zones_from_membership(const SetSystem& system) {
  const auto& labels = system.set_labels();
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index[labels[i]] = i;

  // Element order = first appearance in the membership list.
  std::vector<std::string> element_order;
  std::unordered_map<std::string, SetMask> element_signature;
  for (const auto& [element, label] : system.memberships()) {
    auto [it, inserted] =
        element_signature.try_emplace(element, SetMask(labels.size()));
    if (inserted) element_order.push_back(element);
    it->second.set(label_index.at(label));
  }

  std::vector<Zone> zones;
  for (const auto& element : element_order) {
    const SetMask& sig = element_signature.at(element);
    auto it = std::find_if(zones.begin(), zones.end(),
                           [&](const Zone& z) { return z.signature == sig; });
    if (it == zones.end()) {
      zones.push_back(Zone{sig, 1});
    } else {
      ++it->cardinality;
    }
  }
  return ZoneSet(system.set_labels(), std::move(zones));
}

}  // namespace setmosaic
