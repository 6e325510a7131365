#pragma once

#include <string>
#include <string_view>

#include "setmosaic/model.hpp"

namespace setmosaic {

// Parsers for the three input formats. The format is always chosen by an
// explicit flag, never sniffed from content. All formats are UTF-8 text;
// LF and CRLF line endings are both accepted. Labels and ids are taken
// byte-exact: no trimming, no case folding.

// One record per line: element<TAB>set_label. Lines starting with '#' and
// blank lines are ignored. Duplicate (element, set) pairs collapse silently;
// raw exports tend to contain repetitions. Set labels are ordered by first
// appearance.
SetSystem parse_membership_tsv(std::string_view text);

// One circle (set) per line: circle_name<TAB>id<TAB>id... Ids shared across
// circles become multi-membership elements. Circle names must be unique;
// labels are ordered by line.
SetSystem parse_snap_circles(std::string_view text);

// Abstract zone description, no element data:
//   {"sets": ["A", ...],
//    "zones": [{"members": ["A", ...], "cardinality": 3}, ...]}
// cardinality is optional and defaults to 1. Zone members must name declared
// sets, signatures must be distinct, and every declared set must be used.
ZoneSet parse_zone_json(std::string_view text);

// Inverse of parse_zone_json; emits cardinalities explicitly. Parsing the
// result yields the same ZoneSet back.
std::string zone_set_to_json(const ZoneSet& zs);

}  // namespace setmosaic
