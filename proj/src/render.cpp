#include "scimap/render.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "scimap/strings.hpp"
#include "scimap/table.hpp"

namespace scimap {

namespace {

std::string esc(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  // Avoid "-0.00" so geometry is stable regardless of sign of tiny values.
  if (v > -0.005 && v < 0.005) v = 0.0;
  return format_fixed(v, 2);
}

class SvgDoc {
public:
  SvgDoc(double width, double height) {
    buf_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    buf_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
         << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
         << " " << num(height) << "\">\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& extra = "") {
    buf_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
         << num(w) << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\""
         << extra << "/>\n";
  }

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double width) {
    buf_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
         << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void circle(double cx, double cy, double r, const std::string& fill,
              const std::string& extra = "") {
    buf_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
         << num(r) << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }

  void text(double x, double y, const std::string& content,
            const std::string& font_family, double size,
            const std::string& extra = "") {
    buf_ << "<text x=\"" << num(x) << "\" y=\"" << num(y)
         << "\" font-family=\"" << font_family << "\" font-size=\""
         << num(size) << "\"" << extra << ">" << esc(content) << "</text>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& points,
                const std::string& stroke, double width) {
    buf_ << "<polyline fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(width) << "\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) buf_ << ' ';
      buf_ << num(points[i].first) << ',' << num(points[i].second);
    }
    buf_ << "\"/>\n";
  }

  void polygon(const std::vector<std::pair<double, double>>& points,
               const std::string& fill) {
    buf_ << "<polygon fill=\"" << fill << "\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) buf_ << ' ';
      buf_ << num(points[i].first) << ',' << num(points[i].second);
    }
    buf_ << "\"/>\n";
  }

  void raw(const std::string& s) { buf_ << s; }

  std::string finish() {
    buf_ << "</svg>\n";
    return buf_.str();
  }

private:
  std::ostringstream buf_;
};

const std::string& bar_color(const Canvas& canvas, BarColorClass c) {
  switch (c) {
    case BarColorClass::funding: return canvas.funding_color;
    case BarColorClass::co_burst: return canvas.co_burst_color;
    case BarColorClass::publication: break;
  }
  return canvas.publication_color;
}

const std::string& topic_color(const Canvas& canvas, const std::string& topic) {
  auto it = canvas.topic_colors.find(topic);
  return it != canvas.topic_colors.end() ? it->second
                                         : canvas.fallback_topic_color;
}

void draw_legend(SvgDoc& doc, const Canvas& canvas, double x, double y,
                 const std::vector<std::pair<std::string, std::string>>& items) {
  for (const auto& [color, label] : items) {
    doc.rect(x, y - 8, 12, 12, color);
    doc.text(x + 16, y + 2, label, canvas.font_family, 11);
    x += 24 + 7.0 * static_cast<double>(label.size());
  }
}

std::string lerp_color(int r0, int g0, int b0, int r1, int g1, int b1,
                       double t) {
  auto mix = [t](int a, int b) {
    return static_cast<int>(std::lround(a + (b - a) * t));
  };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", mix(r0, r1), mix(g0, g1),
                mix(b0, b1));
  return buf;
}

} // namespace

std::vector<GeoPath> read_basemap(std::istream& in) {
  std::vector<GeoPath> paths;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    GeoPath path;
    for (const auto& pair : split(t, ' ')) {
      if (pair.empty()) continue;
      auto coords = split(pair, ',');
      if (coords.size() != 2) continue;
      try {
        path.emplace_back(std::stod(coords[0]), std::stod(coords[1]));
      } catch (const std::exception&) {
        // skip malformed point
      }
    }
    if (path.size() >= 2) paths.push_back(std::move(path));
  }
  return paths;
}

std::string render_burst_figure(const std::vector<BurstBar>& bars,
                                const Canvas& canvas) {
  SvgDoc doc(canvas.width, canvas.height);
  const double left = canvas.margin + 140.0; // room for term labels
  const double right = canvas.width - canvas.margin;
  const double top = canvas.margin;
  const double bottom = canvas.height - canvas.margin - 30.0;
  doc.rect(0, 0, canvas.width, canvas.height, "#ffffff");
  doc.line(left, bottom, right, bottom, "#333333", 1.0);
  doc.line(left, top, left, bottom, "#333333", 1.0);
  draw_legend(doc, canvas, left, canvas.height - canvas.margin + 10,
              {{canvas.funding_color, "funding"},
               {canvas.publication_color, "publication"},
               {canvas.co_burst_color, "co-burst"}});
  if (bars.empty()) return doc.finish();

  int year_min = bars.front().start_year;
  int year_max = bars.front().end_year;
  double max_height = 0.0;
  for (const auto& b : bars) {
    year_min = std::min(year_min, b.start_year);
    year_max = std::max(year_max, b.end_year);
    max_height = std::max(max_height, b.height);
  }
  const double year_w = (right - left) / static_cast<double>(year_max - year_min + 1);

  // Row per (term, source), in the order bars arrive.
  std::vector<std::pair<std::string, BurstSource>> rows;
  auto row_of = [&rows](const BurstBar& b) {
    std::pair<std::string, BurstSource> key{b.term, b.source};
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == key) return i;
    rows.push_back(key);
    return rows.size() - 1;
  };
  for (const auto& b : bars) row_of(b);

  const double slot = (bottom - top) / static_cast<double>(rows.size());
  const double hscale = max_height > 0.0 ? (slot * 0.85) / max_height : 1.0;

  for (size_t i = 0; i < rows.size(); ++i) {
    double cy = top + slot * (static_cast<double>(i) + 0.5);
    doc.text(canvas.margin, cy + 4, rows[i].first, canvas.font_family, 11);
  }
  for (const auto& b : bars) {
    size_t row = row_of(b);
    double cy = top + slot * (static_cast<double>(row) + 0.5);
    double x = left + year_w * static_cast<double>(b.start_year - year_min);
    double w = year_w * static_cast<double>(b.end_year - b.start_year + 1);
    double h = b.height * hscale;
    doc.rect(x, cy - h / 2.0, w, h, bar_color(canvas, b.color),
             " stroke=\"#ffffff\" stroke-width=\"0.5\"");
  }
  int step = (year_max - year_min) >= 25 ? 5 : 1;
  for (int year = year_min; year <= year_max + 1; ++year) {
    if ((year - year_min) % step != 0) continue;
    double x = left + year_w * static_cast<double>(year - year_min);
    doc.line(x, bottom, x, bottom + 4, "#333333", 1.0);
    doc.text(x - 14, bottom + 16, std::to_string(year), canvas.font_family, 10);
  }
  return doc.finish();
}

std::string render_network_map(const Network& net,
                               const std::vector<GeoPath>& basemap_xy,
                               const Canvas& canvas,
                               const NetworkRenderOptions& opts) {
  for (const auto& n : net.nodes) {
    if (!n.x || !n.y)
      throw RenderError("node without position: " + n.label);
  }
  SvgDoc doc(canvas.width, canvas.height);
  doc.rect(0, 0, canvas.width, canvas.height, "#ffffff");

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  auto extend = [&](double x, double y) {
    if (!any) {
      xmin = xmax = x;
      ymin = ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  };
  for (const auto& path : basemap_xy)
    for (const auto& [x, y] : path) extend(x, y);
  for (const auto& n : net.nodes) extend(*n.x, *n.y);
  if (!any) return doc.finish();

  const double avail_w = canvas.width - 2.0 * canvas.margin;
  const double avail_h = canvas.height - 2.0 * canvas.margin;
  const double bw = std::max(xmax - xmin, 1e-9);
  const double bh = std::max(ymax - ymin, 1e-9);
  const double scale = std::min(avail_w / bw, avail_h / bh);
  const double ox = canvas.margin + (avail_w - bw * scale) / 2.0;
  const double oy = canvas.margin + (avail_h - bh * scale) / 2.0;
  auto tx = [&](double x) { return ox + (x - xmin) * scale; };
  // Data y grows upward (latitude, mercator), SVG y grows downward.
  auto ty = [&](double y) { return oy + (ymax - y) * scale; };

  for (const auto& path : basemap_xy) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(path.size());
    for (const auto& [x, y] : path) pts.emplace_back(tx(x), ty(y));
    doc.polyline(pts, "#b8b8b8", 0.8);
  }
  for (const auto& [e, w] : net.edges) {
    const auto& a = net.nodes[e.first];
    const auto& b = net.nodes[e.second];
    doc.line(tx(*a.x), ty(*a.y), tx(*b.x), ty(*b.y), "#7a9bbf",
             opts.edge_width_scale * static_cast<double>(w));
  }
  int y0 = 0, y1 = 0;
  bool have_years = false;
  for (const auto& n : net.nodes) {
    if (!have_years) {
      y0 = y1 = n.first_year;
      have_years = true;
    }
    y0 = std::min(y0, n.first_year);
    y1 = std::max(y1, n.first_year);
  }
  for (const auto& n : net.nodes) {
    double t = y1 > y0 ? static_cast<double>(n.first_year - y0) /
                             static_cast<double>(y1 - y0)
                       : 1.0;
    // darker = earlier first year
    std::string fill = lerp_color(0x08, 0x30, 0x6b, 0xc6, 0xdb, 0xef, t);
    double r = std::max(opts.node_radius_scale *
                            std::sqrt(static_cast<double>(n.citations)),
                        opts.min_node_radius);
    doc.circle(tx(*n.x), ty(*n.y), r, fill,
               " stroke=\"#ffffff\" stroke-width=\"0.4\"");
  }
  for (const auto& n : net.nodes) {
    if (n.citations < opts.label_min_citations) continue;
    double r = std::max(opts.node_radius_scale *
                            std::sqrt(static_cast<double>(n.citations)),
                        opts.min_node_radius);
    doc.text(tx(*n.x) + r + 2, ty(*n.y) + 3, n.label, canvas.font_family, 10);
  }
  return doc.finish();
}

std::string render_convergence_arcs(const std::vector<CitationFlow>& flows,
                                    const Canvas& canvas) {
  SvgDoc doc(canvas.width, canvas.height);
  doc.rect(0, 0, canvas.width, canvas.height, "#ffffff");
  std::vector<std::string> topics;
  int year_min = 0, year_max = 0;
  bool any = false;
  for (const auto& f : flows) {
    if (std::find(topics.begin(), topics.end(), f.source_topic) == topics.end())
      topics.push_back(f.source_topic);
    if (std::find(topics.begin(), topics.end(), f.target_topic) == topics.end())
      topics.push_back(f.target_topic);
    if (!any) {
      year_min = std::min(f.source_year, f.target_year);
      year_max = std::max(f.source_year, f.target_year);
      any = true;
    }
    year_min = std::min({year_min, f.source_year, f.target_year});
    year_max = std::max({year_max, f.source_year, f.target_year});
  }
  if (!any) return doc.finish();
  std::sort(topics.begin(), topics.end());

  const double top = canvas.margin + 24.0;
  const double bottom = canvas.height - canvas.margin;
  const double left = canvas.margin + 40.0;
  const double right = canvas.width - canvas.margin - 40.0;
  const size_t k = topics.size();
  auto col_x = [&](size_t i) {
    return k == 1 ? (left + right) / 2.0
                  : left + (right - left) * static_cast<double>(i) /
                        static_cast<double>(k - 1);
  };
  // Later years at the top: citation arrows point down or down-left in time.
  auto year_y = [&](int year) {
    if (year_max == year_min) return (top + bottom) / 2.0;
    return top + (bottom - top) * static_cast<double>(year_max - year) /
               static_cast<double>(year_max - year_min);
  };
  for (size_t i = 0; i < k; ++i) {
    double x = col_x(i);
    doc.line(x, top, x, bottom, "#cccccc", 1.0);
    doc.text(x - 12, top - 8, topics[i], canvas.font_family, 12,
             " fill=\"" + topic_color(canvas, topics[i]) + "\"");
    for (int year = year_min; year <= year_max; ++year) {
      double y = year_y(year);
      doc.line(x - 2, y, x + 2, y, "#999999", 0.6);
      if (i == 0)
        doc.text(canvas.margin - 24, y + 3, std::to_string(year),
                 canvas.font_family, 8);
    }
  }
  auto col_of = [&](const std::string& topic) {
    for (size_t i = 0; i < k; ++i)
      if (topics[i] == topic) return i;
    return static_cast<size_t>(0);
  };
  for (const auto& f : flows) {
    double x1 = col_x(col_of(f.source_topic));
    double y1 = year_y(f.source_year);
    double x2 = col_x(col_of(f.target_topic));
    double y2 = year_y(f.target_year);
    double width = 0.8 * static_cast<double>(f.count);
    const std::string& color = topic_color(canvas, f.source_topic);
    // Quadratic arc bowed perpendicular to the chord.
    double mx = (x1 + x2) / 2.0, my = (y1 + y2) / 2.0;
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::sqrt(dx * dx + dy * dy);
    double cx = mx, cy = my;
    if (len > 1e-9) {
      cx += -dy / len * len * 0.12;
      cy += dx / len * len * 0.12;
    }
    doc.raw("<path d=\"M " + num(x1) + " " + num(y1) + " Q " + num(cx) + " " +
            num(cy) + " " + num(x2) + " " + num(y2) +
            "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
            num(width) + "\" stroke-opacity=\"0.65\"/>\n");
    // Arrowhead along the final curve direction.
    double hx = x2 - cx, hy = y2 - cy;
    double hlen = std::sqrt(hx * hx + hy * hy);
    if (hlen < 1e-9) continue;
    hx /= hlen;
    hy /= hlen;
    double size = 2.5 + width;
    double bx = x2 - hx * size * 1.8;
    double by = y2 - hy * size * 1.8;
    doc.polygon({{x2, y2},
                 {bx - hy * size * 0.6, by + hx * size * 0.6},
                 {bx + hy * size * 0.6, by - hx * size * 0.6}},
                color);
  }
  return doc.finish();
}

std::string render_science_overlay(const std::vector<OverlaySymbol>& symbols,
                                   const Classification& cls,
                                   const Canvas& canvas) {
  SvgDoc doc(canvas.width, canvas.height);
  doc.rect(0, 0, canvas.width, canvas.height, "#ffffff");
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const auto& [id, sd] : cls.subdisciplines) {
    if (!sd.has_position) continue;
    if (!any) {
      xmin = xmax = sd.x;
      ymin = ymax = sd.y;
      any = true;
    }
    xmin = std::min(xmin, sd.x);
    xmax = std::max(xmax, sd.x);
    ymin = std::min(ymin, sd.y);
    ymax = std::max(ymax, sd.y);
  }
  if (!any) return doc.finish();
  const double map_w = std::max(xmax - xmin, 1e-9);
  const double seam = 0.05 * map_w;

  // Fit is derived from the classification alone so that every slice of a
  // figure series shares one scale.
  const double fit_xmin = xmin - seam, fit_xmax = xmax + seam;
  const double bw = fit_xmax - fit_xmin;
  const double bh = std::max(ymax - ymin, 1e-9);
  const double avail_w = canvas.width - 2.0 * canvas.margin;
  const double avail_h = canvas.height - 2.0 * canvas.margin;
  const double scale = std::min(avail_w / bw, avail_h / bh);
  const double ox = canvas.margin + (avail_w - bw * scale) / 2.0;
  const double oy = canvas.margin + (avail_h - bh * scale) / 2.0;
  auto tx = [&](double x) { return ox + (x - fit_xmin) * scale; };
  auto ty = [&](double y) { return oy + (ymax - y) * scale; };

  for (const auto& [id, sd] : cls.subdisciplines) {
    if (!sd.has_position) continue;
    doc.circle(tx(sd.x), ty(sd.y), 1.5, "#d9d9d9");
  }
  auto draw_symbol = [&](const OverlaySymbol& sym, double x) {
    auto sd = cls.subdisciplines.find(sym.subd_id);
    std::string color = "#888888";
    if (sd != cls.subdisciplines.end()) {
      auto disc = cls.disciplines.find(sd->second.discipline_id);
      if (disc != cls.disciplines.end() && !disc->second.color.empty())
        color = disc->second.color;
    }
    doc.circle(tx(x), ty(sym.y), sym.radius * scale, color,
               " fill-opacity=\"0.75\" stroke=\"#ffffff\" stroke-width=\"0.4\"");
  };
  for (const auto& sym : symbols) {
    draw_symbol(sym, sym.x);
    // The map wraps horizontally: echo symbols near one seam edge on the
    // other side.
    if (sym.x > xmax - seam) draw_symbol(sym, sym.x - map_w);
    if (sym.x < xmin + seam) draw_symbol(sym, sym.x + map_w);
  }
  return doc.finish();
}

void write_legend_table(std::ostream& out, const std::string& figure,
                        const std::vector<std::array<std::string, 3>>& rows) {
  for (const auto& row : rows)
    write_tsv_row(out, {figure, row[0], row[1], row[2]});
}

} // namespace scimap
