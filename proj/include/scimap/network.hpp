#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scimap/corpus.hpp"

namespace scimap {

struct NodeAttrs {
  std::string label;
  long papers = 0;
  long citations = 0;
  int first_year = 0;
  std::optional<double> lat;
  std::optional<double> lon;
  std::optional<double> x;
  std::optional<double> y;
};

// Undirected weighted graph. Nodes are indexed 0..n-1 in label order;
// edge keys are (min, max) index pairs.
struct Network {
  std::vector<NodeAttrs> nodes;
  std::map<std::pair<std::uint32_t, std::uint32_t>, long> edges;

  size_t node_count() const { return nodes.size(); }
  size_t edge_count() const { return edges.size(); }
  std::optional<std::uint32_t> find(const std::string& label) const;
};

// One record's entity list plus the attributes credited to each entity.
struct EntityRecord {
  std::vector<std::string> entities;
  int year = 0;
  long citations = 0;
};

// Every unordered pair of distinct entities on a record gains +1 edge
// weight. Records with empty entity lists are skipped; entities that only
// appear alone become isolates.
Network extract_cooccurrence(const std::vector<EntityRecord>& records);
std::vector<EntityRecord> coauthor_records(const std::vector<Publication>& pubs);

struct ComponentReport {
  size_t component_count = 0;
  size_t isolate_count = 0;
  size_t largest_component_size = 0;
  double avg_degree = 0.0; // 2E/N rounded to 2 decimals
};

double rounded_avg_degree(size_t nodes, size_t edges);

struct ComponentResult {
  ComponentReport report;
  std::vector<int> component_of; // per-node component id
};

ComponentResult components(const Network& net);

// Removes nodes below the citation threshold with their incident edges,
// then edges below the weight threshold, then (optionally) isolates.
Network filter_network(const Network& net, long min_node_citations,
                       long min_edge_weight, bool drop_isolates);

// Subgraph induced by the maximum-size component; ties broken by the
// smallest minimum node label.
Network largest_component(const Network& net);

struct LayoutCanvas {
  double width = 1000.0;
  double height = 1000.0;
};

// Deterministic spring embedder: all-pairs repulsion, weight-scaled
// attraction along edges, linearly cooled displacement cap. Runs exactly
// `iterations` rounds; identical (network, seed, iterations) give
// byte-identical positions.
std::vector<std::pair<double, double>> force_layout(const Network& net,
                                                    std::uint64_t seed,
                                                    int iterations,
                                                    const LayoutCanvas& canvas = {});
void apply_layout(Network& net, const std::vector<std::pair<double, double>>& pos);

struct Gazetteer {
  // (CITY, REGION) normalized to uppercase -> (lat, lon)
  std::map<std::pair<std::string, std::string>, std::pair<double, double>> coords;
  static Gazetteer read(std::istream& in);
};

struct GeocodedAuthor {
  std::string author;
  std::string city;
  std::string region;
  double lat = 0.0;
  double lon = 0.0;
  long citations = 0;
  int first_year = 0;
};

struct GeocodeReport {
  std::vector<GeocodedAuthor> authors;
  size_t excluded_non_us = 0;
  size_t excluded_unknown = 0; // selected address missing from the gazetteer
  size_t excluded_no_address = 0;
};

// Selects each author's most recent address (ties: last listed) and looks it
// up in the gazetteer. Authors with a non-US or unknown selected address are
// excluded and counted.
GeocodeReport geocode(const std::vector<Publication>& pubs,
                      const Gazetteer& gazetteer);

// x = longitude in radians, y = ln(tan(pi/4 + lat/2)). Latitude clamped to
// +-85 degrees.
std::pair<double, double> mercator(double lat_deg, double lon_deg);

// Citations summed per selected-address city, descending; ties by city name.
std::vector<std::pair<std::string, long>>
top_cities(const std::vector<GeocodedAuthor>& authors);

void write_node_table(std::ostream& out, const Network& net,
                      const std::vector<int>& component_of);
void write_edge_table(std::ostream& out, const Network& net);

} // namespace scimap
