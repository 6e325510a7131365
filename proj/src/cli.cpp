#include "setmosaic/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "setmosaic/color.hpp"
#include "setmosaic/error.hpp"
#include "setmosaic/ingest.hpp"
#include "setmosaic/json_io.hpp"
#include "setmosaic/layout_linear.hpp"
#include "setmosaic/layout_mosaic.hpp"
#include "setmosaic/model.hpp"
#include "setmosaic/order.hpp"
#include "setmosaic/query.hpp"
#include "setmosaic/quiz.hpp"
#include "setmosaic/style.hpp"
#include "setmosaic/svg.hpp"

namespace setmosaic::cli {

namespace {

// Malformed flag values the parser cannot catch itself; exit code 1.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write file '" + path + "'");
  file << content;
  if (!file.flush()) throw Error("cannot write file '" + path + "'");
}

ZoneSet load_zone_set(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  if (format == "tsv") return zones_from_membership(parse_membership_tsv(text));
  if (format == "snap-circles")
    return zones_from_membership(parse_snap_circles(text));
  return parse_zone_json(text);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma - pos));
    if (comma == std::string::npos) return parts;
    pos = comma + 1;
  }
}

ZoneOrder parse_zone_order(const std::string& text) {
  ZoneOrder order;
  for (const std::string& part : split_commas(text)) {
    std::size_t consumed = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(part, &consumed);
    } catch (const std::exception&) {
      throw UsageError("--zone-order expects comma-separated indices, got '" +
                       part + "'");
    }
    if (consumed != part.size())
      throw UsageError("--zone-order expects comma-separated indices, got '" +
                       part + "'");
    order.push_back(value);
  }
  return order;
}

struct StyleFlags {
  std::optional<double> width, height, line_thickness, tile_border, font_size;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--width", width, "Canvas width in px");
    cmd.add_option("--height", height, "Canvas height in px");
    cmd.add_option("--line-thickness", line_thickness,
                   "Linear-diagram line thickness in px");
    cmd.add_option("--tile-border", tile_border, "Mosaic tile border width in px");
    cmd.add_option("--font-size", font_size, "Legend font size in px");
  }

  // Defaults, then the SETMOSAIC_STYLE file, then explicit flags.
  Style resolve() const {
    Style style;
    if (const char* env = std::getenv("SETMOSAIC_STYLE"))
      style = style_from_json(read_file(env));
    if (width) style.canvas_width = *width;
    if (height) style.canvas_height = *height;
    if (line_thickness) style.line_thickness = *line_thickness;
    if (tile_border) style.tile_border_width = *tile_border;
    if (font_size) style.font_size = *font_size;
    return style;
  }
};

Palette make_palette(const ZoneSet& zs, const std::string& colors,
                     bool no_color_check) {
  if (colors.empty()) return palette_for_labels(zs.set_labels());
  return palette_from_hex(zs.set_labels(), split_commas(colors),
                          kDefaultMinLuvDistance, !no_color_check);
}

ZoneOrder resolve_order(const ZoneSet& zs, const std::string& strategy,
                        const std::string& zone_order_flag) {
  if (strategy == "heuristic") return order_heuristic(zs);
  if (strategy == "exact") return order_exact(zs);
  if (zone_order_flag.empty())
    throw UsageError("--order given requires --zone-order");
  return parse_zone_order(zone_order_flag);
}

int run_checked(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Linear and mosaic set-relationship diagrams"};
  app.require_subcommand(1);

  std::string input, format;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "Input file")->required();
    cmd->add_option("--format,-f", format, "Input format")
        ->required()
        ->check(CLI::IsMember({"tsv", "snap-circles", "zone-json"}));
  };

  std::string output;
  std::string diagram, order_strategy = "heuristic", zone_order_flag;
  std::string mode = "equal", colors, dump_layout;
  bool no_color_check = false;
  StyleFlags style_flags;

  CLI::App* render = app.add_subcommand("render", "Render an SVG diagram");
  add_input(render);
  render->add_option("--diagram,-d", diagram, "Diagram type")
      ->required()
      ->check(CLI::IsMember({"linear", "mosaic"}));
  render->add_option("--order", order_strategy, "Zone ordering strategy")
      ->check(CLI::IsMember({"heuristic", "exact", "given"}));
  render->add_option("--zone-order", zone_order_flag,
                     "Explicit comma-separated zone indices (with --order given)");
  render->add_option("--mode", mode, "Mosaic column width mode")
      ->check(CLI::IsMember({"equal", "cardinality"}));
  render->add_option("--colors", colors,
                     "Comma-separated hex colours, one per set");
  render->add_flag("--no-color-check", no_color_check,
                   "Skip the CIELUV distance check for supplied colours");
  render->add_option("--dump-layout", dump_layout, "Write layout JSON here");
  render->add_option("--output,-o", output, "Output file (default stdout)");
  style_flags.add_to(*render);

  std::string relation;
  std::vector<std::string> targets;
  CLI::App* query = app.add_subcommand("query", "List sets in a relation");
  add_input(query);
  query->add_option("--relation,-r", relation, "Relation to test")
      ->required()
      ->check(CLI::IsMember({"intersect", "subset", "disjoint"}));
  query
      ->add_option("--target,-t", targets,
                   "Target set X (give twice for a hard X,Y query)")
      ->required()
      ->expected(1, 2);
  query->add_option("--output,-o", output, "Output file (default stdout)");

  CLI::App* stats = app.add_subcommand("stats", "Pairwise relation counts");
  add_input(stats);
  stats->add_option("--output,-o", output, "Output file (default stdout)");

  std::uint64_t seed = 1;
  int replication = 1;
  std::string render_dir;
  CLI::App* quiz = app.add_subcommand("quiz", "Generate a task-question bundle");
  add_input(quiz);
  quiz->add_option("--seed", seed, "Pseudo-random seed");
  quiz->add_option("--replication", replication, "Task-set replication")
      ->check(CLI::IsMember({1, 2}));
  quiz->add_option("--render-dir", render_dir,
                   "Also render each question's diagram into this directory");
  quiz->add_option("--output,-o", output, "Bundle file (default stdout)");
  style_flags.add_to(*quiz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (render->parsed()) {
    const ZoneSet zs = load_zone_set(input, format);
    const ZoneOrder order = resolve_order(zs, order_strategy, zone_order_flag);
    const Palette palette = make_palette(zs, colors, no_color_check);
    const Style style = style_flags.resolve();

    std::string svg, layout_json;
    if (diagram == "linear") {
      const LinearLayout layout = linear_layout(zs, order);
      svg = render_linear(layout, palette, style);
      layout_json = linear_layout_to_json(zs, layout);
    } else {
      const MosaicLayout layout = mosaic_layout(
          zs, order,
          mode == "equal" ? MosaicMode::equal : MosaicMode::cardinality);
      svg = render_mosaic(layout, palette, style);
      layout_json = mosaic_layout_to_json(zs, layout);
    }
    if (!dump_layout.empty()) write_output(dump_layout, layout_json, out);
    write_output(output, svg, out);
    return 0;
  }

  if (query->parsed()) {
    const ZoneSet zs = load_zone_set(input, format);
    QuerySpec spec;
    spec.relation = relation == "intersect" ? Relation::intersect
                    : relation == "subset"  ? Relation::subset
                                            : Relation::disjoint;
    spec.difficulty = targets.size() == 2 ? Difficulty::hard : Difficulty::easy;
    spec.target_x = targets[0];
    if (targets.size() == 2) spec.target_y = targets[1];

    std::string lines;
    for (const std::string& label : sets_satisfying(zs, spec))
      lines += label + "\n";
    write_output(output, lines, out);
    return 0;
  }

  if (stats->parsed()) {
    const ZoneSet zs = load_zone_set(input, format);
    const RelationCounts counts = count_pairwise_relations(zs);
    std::ostringstream line;
    line << "I=" << counts.intersections << " D=" << counts.disjoint
         << " S=" << counts.subsets << "\n";
    write_output(output, line.str(), out);
    return 0;
  }

  // quiz: a directory input supplies the 12 per-question zone sets (files in
  // name order); a single file is reused for all 12 questions.
  std::vector<ZoneSet> inputs;
  if (std::filesystem::is_directory(input)) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(input))
      if (entry.is_regular_file()) paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.size() != 12)
      throw Error("quiz input directory must hold exactly 12 files, found " +
                  std::to_string(paths.size()));
    for (const std::string& path : paths)
      inputs.push_back(load_zone_set(path, format));
  } else {
    inputs.assign(12, load_zone_set(input, format));
  }

  const TaskSet task_set = generate_task_set(inputs, replication, seed);

  if (!render_dir.empty()) {
    std::filesystem::create_directories(render_dir);
    const Style style = style_flags.resolve();
    for (std::size_t i = 0; i < task_set.items.size(); ++i) {
      const ZoneSet& zs = inputs[i];
      const ZoneOrder order = order_heuristic(zs);
      const Palette palette = palette_for_labels(zs.set_labels());
      std::string svg;
      if (task_set.items[i].visualization == VisKind::linear)
        svg = render_linear(linear_layout(zs, order), palette, style);
      else
        svg = render_mosaic(mosaic_layout(zs, order, MosaicMode::equal), palette,
                            style);
      write_output((std::filesystem::path(render_dir) /
                    question_diagram_name(task_set, i))
                       .string(),
                   svg, out);
    }
  }

  write_output(output, task_set_to_json(task_set), out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(argc, argv, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace setmosaic::cli
