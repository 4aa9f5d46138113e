#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scimap/burst.hpp"
#include "scimap/convergence.hpp"
#include "scimap/network.hpp"
#include "scimap/sciencemap.hpp"

namespace scimap {

class RenderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Canvas {
  double width = 1200.0;
  double height = 800.0;
  double margin = 60.0;
  // burst/source classes
  std::string funding_color = "#3b6fb6";     // blue
  std::string publication_color = "#e6842a"; // orange
  std::string co_burst_color = "#8c8c8c";    // gray
  // topic classes
  std::map<std::string, std::string> topic_colors = {
      {"AI", "#e8c21f"},       // yellow
      {"robotics", "#cc3333"}, // red
      {"IoT", "#3366cc"},      // blue
  };
  std::string fallback_topic_color = "#555555";
  std::string font_family = "sans-serif";
};

struct NetworkRenderOptions {
  double node_radius_scale = 0.8;  // radius = scale * sqrt(citations)
  double min_node_radius = 1.0;
  double edge_width_scale = 0.5;   // width = scale * weight
  long label_min_citations = 100;
};

// A lat/lon path of the base map.
using GeoPath = std::vector<std::pair<double, double>>;
std::vector<GeoPath> read_basemap(std::istream& in);

// All renderers emit self-contained SVG and are deterministic: identical
// inputs give byte-identical documents.
std::string render_burst_figure(const std::vector<BurstBar>& bars,
                                const Canvas& canvas);

// Base map first, then edges (width by weight), then nodes (area by
// citations, darker fill = earlier first year), then labels above the
// citation threshold. Node positions come from NodeAttrs::x/y; a node
// without a position is a RenderError naming the node.
std::string render_network_map(const Network& net,
                               const std::vector<GeoPath>& basemap_xy,
                               const Canvas& canvas,
                               const NetworkRenderOptions& opts = {});

// One vertical year axis per topic; arrows thickness-coded by count and
// colored by source topic, never pointing upward in time.
std::string render_convergence_arcs(const std::vector<CitationFlow>& flows,
                                    const Canvas& canvas);

// Discipline-colored proportional circles at subdiscipline positions.
// Symbols within the seam margin are duplicated on the opposite edge.
std::string render_science_overlay(const std::vector<OverlaySymbol>& symbols,
                                   const Classification& cls,
                                   const Canvas& canvas);

// Legend companion table: (figure, class, color, meaning) rows.
void write_legend_table(std::ostream& out, const std::string& figure,
                        const std::vector<std::array<std::string, 3>>& rows);

} // namespace scimap
