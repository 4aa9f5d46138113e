#include "scimap/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <set>

#include "scimap/kernels.hpp"
#include "scimap/strings.hpp"
#include "scimap/table.hpp"

namespace scimap {

std::optional<std::uint32_t> Network::find(const std::string& label) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), label,
                             [](const NodeAttrs& n, const std::string& l) {
                               return n.label < l;
                             });
  if (it == nodes.end() || it->label != label) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes.begin());
}

std::vector<EntityRecord> coauthor_records(const std::vector<Publication>& pubs) {
  std::vector<EntityRecord> out;
  out.reserve(pubs.size());
  for (const auto& p : pubs)
    out.push_back(EntityRecord{p.authors, p.year, p.times_cited});
  return out;
}

Network extract_cooccurrence(const std::vector<EntityRecord>& records) {
  struct Accum {
    long papers = 0;
    long citations = 0;
    int first_year = 0;
  };
  std::map<std::string, Accum> attrs;
  std::map<std::pair<std::string, std::string>, long> weights;
  for (const auto& rec : records) {
    std::set<std::string> distinct;
    for (const auto& e : rec.entities) {
      std::string name = collapse_whitespace(e);
      if (!name.empty()) distinct.insert(std::move(name));
    }
    if (distinct.empty()) continue;
    for (const auto& name : distinct) {
      auto& a = attrs[name];
      a.papers++;
      a.citations += rec.citations;
      if (a.papers == 1 || rec.year < a.first_year) a.first_year = rec.year;
    }
    for (auto it = distinct.begin(); it != distinct.end(); ++it) {
      auto jt = it;
      for (++jt; jt != distinct.end(); ++jt) weights[{*it, *jt}]++;
    }
  }
  Network net;
  net.nodes.reserve(attrs.size());
  std::map<std::string, std::uint32_t> index;
  for (const auto& [name, a] : attrs) {
    index[name] = static_cast<std::uint32_t>(net.nodes.size());
    NodeAttrs node;
    node.label = name;
    node.papers = a.papers;
    node.citations = a.citations;
    node.first_year = a.first_year;
    net.nodes.push_back(std::move(node));
  }
  for (const auto& [pair, w] : weights) {
    std::uint32_t a = index[pair.first];
    std::uint32_t b = index[pair.second];
    net.edges[{std::min(a, b), std::max(a, b)}] = w;
  }
  return net;
}

double rounded_avg_degree(size_t nodes, size_t edges) {
  if (nodes == 0) return 0.0;
  double v = 2.0 * static_cast<double>(edges) / static_cast<double>(nodes);
  return std::round(v * 100.0) / 100.0;
}

ComponentResult components(const Network& net) {
  const size_t n = net.nodes.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [e, w] : net.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  ComponentResult res;
  res.component_of.assign(n, -1);
  int comp = 0;
  size_t largest = 0;
  size_t isolates = 0;
  for (size_t start = 0; start < n; ++start) {
    if (res.component_of[start] != -1) continue;
    size_t size = 0;
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(start)};
    res.component_of[start] = comp;
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      ++size;
      for (std::uint32_t v : adj[u]) {
        if (res.component_of[v] == -1) {
          res.component_of[v] = comp;
          queue.push_back(v);
        }
      }
    }
    largest = std::max(largest, size);
    if (size == 1) ++isolates;
    ++comp;
  }
  res.report.component_count = static_cast<size_t>(comp);
  res.report.isolate_count = isolates;
  res.report.largest_component_size = largest;
  res.report.avg_degree = rounded_avg_degree(n, net.edges.size());
  return res;
}

namespace {

Network induced_subgraph(const Network& net, const std::vector<bool>& keep) {
  Network out;
  std::vector<std::uint32_t> remap(net.nodes.size(),
                                   std::numeric_limits<std::uint32_t>::max());
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<std::uint32_t>(out.nodes.size());
    out.nodes.push_back(net.nodes[i]);
  }
  for (const auto& [e, w] : net.edges) {
    if (keep[e.first] && keep[e.second])
      out.edges[{remap[e.first], remap[e.second]}] = w;
  }
  return out;
}

} // namespace

Network filter_network(const Network& net, long min_node_citations,
                       long min_edge_weight, bool drop_isolates) {
  std::vector<bool> keep(net.nodes.size());
  for (size_t i = 0; i < net.nodes.size(); ++i)
    keep[i] = net.nodes[i].citations >= min_node_citations;
  Network step1 = induced_subgraph(net, keep);
  std::erase_if(step1.edges,
                [&](const auto& kv) { return kv.second < min_edge_weight; });
  if (!drop_isolates) return step1;
  std::vector<bool> connected(step1.nodes.size(), false);
  for (const auto& [e, w] : step1.edges) {
    connected[e.first] = true;
    connected[e.second] = true;
  }
  return induced_subgraph(step1, connected);
}

Network largest_component(const Network& net) {
  if (net.nodes.empty()) return {};
  auto comp = components(net);
  std::map<int, size_t> sizes;
  for (int c : comp.component_of) sizes[c]++;
  // Largest size; ties resolved by the smallest minimum node label. Nodes
  // are stored in label order, so the first node of a component carries its
  // minimum label.
  int best = -1;
  size_t best_size = 0;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    int c = comp.component_of[i];
    if (sizes[c] > best_size) {
      best = c;
      best_size = sizes[c];
    }
  }
  std::vector<bool> keep(net.nodes.size());
  for (size_t i = 0; i < net.nodes.size(); ++i)
    keep[i] = comp.component_of[i] == best;
  return induced_subgraph(net, keep);
}

std::vector<std::pair<double, double>> force_layout(const Network& net,
                                                    std::uint64_t seed,
                                                    int iterations,
                                                    const LayoutCanvas& canvas) {
  const size_t n = net.nodes.size();
  std::vector<std::pair<double, double>> pos(n);
  if (n == 0) return pos;
  if (n == 1) {
    pos[0] = {canvas.width / 2.0, canvas.height / 2.0};
    return pos;
  }

  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  // 53-bit uniform in [0,1), independent of distribution implementations.
  auto next_unit = [&rng]() {
    std::uint64_t hi = rng() >> 5;
    std::uint64_t lo = rng() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
  };
  std::vector<double> xs(n), ys(n), dx(n), dy(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = next_unit() * canvas.width;
    ys[i] = next_unit() * canvas.height;
  }

  const double area = canvas.width * canvas.height;
  const double k = 0.8 * std::sqrt(area / static_cast<double>(n));
  const double k_sq = k * k;
  auto repulsion = kernels::select_repulsion();

  for (int it = 0; it < iterations; ++it) {
    repulsion(xs.data(), ys.data(), n, 0, n, k_sq, dx.data(), dy.data());
    for (const auto& [e, w] : net.edges) {
      const size_t a = e.first, b = e.second;
      const double ddx = xs[a] - xs[b];
      const double ddy = ys[a] - ys[b];
      double dist = std::sqrt(ddx * ddx + ddy * ddy);
      if (dist < 1e-9) dist = 1e-9;
      const double f = dist * dist / k * static_cast<double>(w);
      const double fx = ddx / dist * f;
      const double fy = ddy / dist * f;
      dx[a] -= fx;
      dy[a] -= fy;
      dx[b] += fx;
      dy[b] += fy;
    }
    // Linear cooling of the displacement cap.
    const double temp = (canvas.width / 10.0) *
                        (1.0 - static_cast<double>(it) /
                                   static_cast<double>(iterations));
    for (size_t i = 0; i < n; ++i) {
      double len = std::sqrt(dx[i] * dx[i] + dy[i] * dy[i]);
      if (len < 1e-12) continue;
      double cap = std::min(len, temp);
      xs[i] += dx[i] / len * cap;
      ys[i] += dy[i] / len * cap;
      xs[i] = std::clamp(xs[i], 0.0, canvas.width);
      ys[i] = std::clamp(ys[i], 0.0, canvas.height);
    }
  }
  for (size_t i = 0; i < n; ++i) pos[i] = {xs[i], ys[i]};
  return pos;
}

void apply_layout(Network& net,
                  const std::vector<std::pair<double, double>>& pos) {
  for (size_t i = 0; i < net.nodes.size() && i < pos.size(); ++i) {
    net.nodes[i].x = pos[i].first;
    net.nodes[i].y = pos[i].second;
  }
}

Gazetteer Gazetteer::read(std::istream& in) {
  Gazetteer g;
  for (const auto& row : read_tsv(in)) {
    if (row.size() < 5) continue;
    if (row[0] == "city") continue; // header
    try {
      double lat = std::stod(row[3]);
      double lon = std::stod(row[4]);
      g.coords[{upper_ascii(trim(row[0])), upper_ascii(trim(row[1]))}] = {lat, lon};
    } catch (const std::exception&) {
      // skip malformed row
    }
  }
  return g;
}

namespace {

bool is_us_country(const std::string& country) {
  std::string c = upper_ascii(trim(country));
  return c == "USA" || c == "US" || c == "UNITED STATES" ||
         c == "UNITED STATES OF AMERICA";
}

} // namespace

GeocodeReport geocode(const std::vector<Publication>& pubs,
                      const Gazetteer& gazetteer) {
  struct AuthorInfo {
    std::vector<AddressEntry> addresses;
    long citations = 0;
    int first_year = 0;
    bool any_record = false;
  };
  std::map<std::string, AuthorInfo> info;
  for (const auto& p : pubs) {
    for (const auto& author : p.authors) {
      std::string name = collapse_whitespace(author);
      if (name.empty()) continue;
      auto& ai = info[name];
      ai.citations += p.times_cited;
      if (!ai.any_record || p.year < ai.first_year) ai.first_year = p.year;
      ai.any_record = true;
      for (const auto& addr : p.addresses) {
        if (addr.author.empty() || collapse_whitespace(addr.author) == name)
          ai.addresses.push_back(addr);
      }
    }
  }
  GeocodeReport report;
  for (const auto& [name, ai] : info) {
    if (ai.addresses.empty()) {
      ++report.excluded_no_address;
      continue;
    }
    // Most recent address wins; ties go to the last listed.
    const AddressEntry* chosen = &ai.addresses.front();
    for (const auto& a : ai.addresses)
      if (a.year >= chosen->year) chosen = &a;
    if (!is_us_country(chosen->country)) {
      ++report.excluded_non_us;
      continue;
    }
    auto it = gazetteer.coords.find(
        {upper_ascii(trim(chosen->city)), upper_ascii(trim(chosen->region))});
    if (it == gazetteer.coords.end()) {
      ++report.excluded_unknown;
      continue;
    }
    GeocodedAuthor ga;
    ga.author = name;
    ga.city = chosen->city;
    ga.region = chosen->region;
    ga.lat = it->second.first;
    ga.lon = it->second.second;
    ga.citations = ai.citations;
    ga.first_year = ai.first_year;
    report.authors.push_back(std::move(ga));
  }
  return report;
}

std::pair<double, double> mercator(double lat_deg, double lon_deg) {
  const double deg = std::numbers::pi / 180.0;
  double lat = std::clamp(lat_deg, -85.0, 85.0);
  double x = lon_deg * deg;
  double y = std::log(std::tan(std::numbers::pi / 4.0 + lat * deg / 2.0));
  return {x, y};
}

std::vector<std::pair<std::string, long>>
top_cities(const std::vector<GeocodedAuthor>& authors) {
  std::map<std::string, long> totals;
  for (const auto& a : authors) totals[a.city] += a.citations;
  std::vector<std::pair<std::string, long>> out(totals.begin(), totals.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

void write_node_table(std::ostream& out, const Network& net,
                      const std::vector<int>& component_of) {
  write_tsv_row(out, {"label", "papers", "citations", "first_year", "lat",
                      "lon", "component_id", "x", "y"});
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    const auto& n = net.nodes[i];
    auto opt = [](const std::optional<double>& v, int decimals) {
      return v ? format_fixed(*v, decimals) : std::string();
    };
    write_tsv_row(out, {n.label, std::to_string(n.papers),
                        std::to_string(n.citations),
                        std::to_string(n.first_year), opt(n.lat, 4),
                        opt(n.lon, 4),
                        i < component_of.size()
                            ? std::to_string(component_of[i])
                            : std::string(),
                        opt(n.x, 3), opt(n.y, 3)});
  }
}

void write_edge_table(std::ostream& out, const Network& net) {
  write_tsv_row(out, {"source", "target", "weight"});
  for (const auto& [e, w] : net.edges) {
    write_tsv_row(out, {net.nodes[e.first].label, net.nodes[e.second].label,
                        std::to_string(w)});
  }
}

} // namespace scimap
