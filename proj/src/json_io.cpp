#include "setmosaic/json_io.hpp"

#include <json.hpp>

namespace setmosaic {

namespace {

nlohmann::ordered_json columns_json(const ZoneSet& zs,
                                    const std::vector<std::size_t>& columns) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t zone_index : columns)
    arr.push_back(zs.signature_labels(zone_index));
  return arr;
}

}  // namespace

std::string linear_layout_to_json(const ZoneSet& zs, const LinearLayout& layout) {
  nlohmann::ordered_json doc;
  doc["type"] = "linear";
  doc["columns"] = columns_json(zs, layout.columns);
  doc["order"] = layout.columns;

  auto runs = nlohmann::ordered_json::object();
  for (std::size_t s = 0; s < layout.legend.size(); ++s) {
    auto intervals = nlohmann::ordered_json::array();
    for (const auto& [start, end] : layout.runs[s])
      intervals.push_back({start, end});
    runs[layout.legend[s]] = std::move(intervals);
  }
  doc["runs"] = std::move(runs);
  doc["guides"] = layout.guides;
  doc["legend"] = layout.legend;
  return doc.dump(2) + "\n";
}

std::string mosaic_layout_to_json(const ZoneSet& zs, const MosaicLayout& layout) {
  nlohmann::ordered_json doc;
  doc["type"] = "mosaic";
  doc["mode"] = layout.mode == MosaicMode::equal ? "equal" : "cardinality";
  doc["columns"] = columns_json(zs, layout.columns);
  doc["order"] = layout.columns;
  doc["column_edges"] = layout.column_edges;

  auto tiles = nlohmann::ordered_json::array();
  for (const Tile& t : layout.tiles) {
    nlohmann::ordered_json tile;
    tile["column"] = t.column;
    tile["set"] = layout.legend[t.set_index];
    tile["x"] = t.x;
    tile["width"] = t.width;
    tile["y"] = t.y;
    tile["height"] = t.height;
    tiles.push_back(std::move(tile));
  }
  doc["tiles"] = std::move(tiles);
  doc["legend"] = layout.legend;
  return doc.dump(2) + "\n";
}

}  // namespace setmosaic
