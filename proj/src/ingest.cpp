#include "setmosaic/ingest.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "setmosaic/error.hpp"

namespace setmosaic {

namespace {

// Yields (line_number, line) with the trailing CR of CRLF endings removed.
// Line numbers are 1-based and count every physical line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

SetSystem parse_membership_tsv(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen_labels;
  std::vector<SetSystem::Membership> memberships;
  std::set<SetSystem::Membership> seen_pairs;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw Error("line " + std::to_string(line_no) +
                  ": expected 2 tab-separated fields");
    if (fields[0].empty())
      throw Error("line " + std::to_string(line_no) + ": empty element id");
    if (fields[1].empty())
      throw Error("line " + std::to_string(line_no) + ": empty set label");

    std::string element(fields[0]);
    std::string label(fields[1]);
    if (seen_labels.insert(label).second) labels.push_back(label);
    if (seen_pairs.insert({element, label}).second)
      memberships.emplace_back(std::move(element), std::move(label));
  });

  if (memberships.empty()) throw Error("no membership records found");
  return SetSystem(std::move(labels), std::move(memberships));
}

SetSystem parse_snap_circles(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen_labels;
  std::vector<SetSystem::Membership> memberships;
  std::set<SetSystem::Membership> seen_pairs;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    auto fields = split_tabs(line);
    if (fields.size() < 2)
      throw Error("line " + std::to_string(line_no) +
                  ": expected circle name and at least one id");
    if (fields[0].empty())
      throw Error("line " + std::to_string(line_no) + ": empty circle name");

    std::string circle(fields[0]);
    if (!seen_labels.insert(circle).second)
      throw Error("line " + std::to_string(line_no) + ": duplicate circle name '" +
                  circle + "'");
    labels.push_back(circle);

    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].empty())
        throw Error("line " + std::to_string(line_no) + ": empty id");
      SetSystem::Membership pair{std::string(fields[i]), circle};
      if (seen_pairs.insert(pair).second) memberships.push_back(std::move(pair));
    }
  });

  if (memberships.empty()) throw Error("no circles found");
  return SetSystem(std::move(labels), std::move(memberships));
}

ZoneSet parse_zone_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid zone JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("sets") || !doc.contains("zones"))
    throw Error("zone JSON must be an object with 'sets' and 'zones'");
  const auto& sets = doc["sets"];
  const auto& zones_node = doc["zones"];
  if (!sets.is_array() || !zones_node.is_array())
    throw Error("'sets' and 'zones' must be arrays");

  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> label_index;
  for (const auto& s : sets) {
    if (!s.is_string()) throw Error("'sets' entries must be strings");
    std::string label = s.get<std::string>();
    if (!label_index.emplace(label, labels.size()).second)
      throw Error("duplicate set label '" + label + "'");
    labels.push_back(std::move(label));
  }

  std::vector<Zone> zones;
  for (const auto& z : zones_node) {
    if (!z.is_object() || !z.contains("members") || !z["members"].is_array())
      throw Error("each zone must be an object with a 'members' array");
    SetMask sig(labels.size());
    for (const auto& m : z["members"]) {
      if (!m.is_string()) throw Error("zone members must be strings");
      auto it = label_index.find(m.get<std::string>());
      if (it == label_index.end())
        throw Error("zone member '" + m.get<std::string>() +
                    "' is not a declared set");
      sig.set(it->second);
    }
    std::uint64_t cardinality = 1;
    if (z.contains("cardinality")) {
      if (!z["cardinality"].is_number_integer() ||
          z["cardinality"].get<std::int64_t>() < 1)
        throw Error("zone cardinality must be an integer >= 1");
      cardinality = z["cardinality"].get<std::uint64_t>();
    }
    for (const Zone& existing : zones)
      if (existing.signature == sig) throw Error("duplicate zone signature");
    zones.push_back(Zone{std::move(sig), cardinality});
  }

  return ZoneSet(std::move(labels), std::move(zones));
}

std::string zone_set_to_json(const ZoneSet& zs) {
  nlohmann::ordered_json doc;
  doc["sets"] = zs.set_labels();
  doc["zones"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < zs.zone_count(); ++i) {
    nlohmann::ordered_json zone;
    zone["members"] = zs.signature_labels(i);
    zone["cardinality"] = zs.zones()[i].cardinality;
    doc["zones"].push_back(std::move(zone));
  }
  return doc.dump(2) + "\n";
}

}  // namespace setmosaic
