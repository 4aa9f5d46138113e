#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "scimap/network.hpp"

using namespace scimap;

namespace {

// The worked example: five papers, six authors; (A2,A6) co-occur twice and
// A5 publishes alone.
std::vector<EntityRecord> toy_coauthor_records() {
  return {
      {{"A1", "A2"}, 2001, 3},
      {{"A2", "A6"}, 2002, 5},
      {{"A3", "A4"}, 2003, 0},
      {{"A5"}, 2004, 2},
      {{"A2", "A6"}, 2005, 1},
  };
}

long weight_of(const Network& net, const std::string& a, const std::string& b) {
  auto ia = net.find(a);
  auto ib = net.find(b);
  REQUIRE(ia.has_value());
  REQUIRE(ib.has_value());
  auto key = std::make_pair(std::min(*ia, *ib), std::max(*ia, *ib));
  auto it = net.edges.find(key);
  return it == net.edges.end() ? 0 : it->second;
}

std::vector<EntityRecord> random_records(std::mt19937& rng, size_t count,
                                         size_t pool) {
  std::vector<EntityRecord> records;
  for (size_t i = 0; i < count; ++i) {
    EntityRecord rec;
    rec.year = 1998 + static_cast<int>(rng() % 20);
    rec.citations = static_cast<long>(rng() % 30);
    size_t n = rng() % 4;
    for (size_t k = 0; k < n; ++k)
      rec.entities.push_back("E" + std::to_string(rng() % pool));
    records.push_back(std::move(rec));
  }
  return records;
}

} // namespace

TEST_CASE("extract_cooccurrence reproduces the worked example") {
  auto net = extract_cooccurrence(toy_coauthor_records());
  CHECK(net.node_count() == 6);
  CHECK(net.edge_count() == 3);
  CHECK(weight_of(net, "A2", "A6") == 2);
  CHECK(weight_of(net, "A1", "A2") == 1);
  CHECK(weight_of(net, "A3", "A4") == 1);
  // A5 is an isolate with its attributes intact
  auto a5 = net.find("A5");
  REQUIRE(a5.has_value());
  CHECK(net.nodes[*a5].papers == 1);
  CHECK(net.nodes[*a5].citations == 2);
  // A2 earned the citations of its three papers
  auto a2 = net.find("A2");
  CHECK(net.nodes[*a2].papers == 3);
  CHECK(net.nodes[*a2].citations == 9);
  CHECK(net.nodes[*a2].first_year == 2001);
}

TEST_CASE("single-author paper yields one isolate and no edges") {
  auto net = extract_cooccurrence({{{"Solo"}, 2000, 0}});
  CHECK(net.node_count() == 1);
  CHECK(net.edge_count() == 0);
}

TEST_CASE("records with empty entity lists are skipped") {
  auto net = extract_cooccurrence({{{}, 2000, 5}, {{"A"}, 2001, 1}});
  CHECK(net.node_count() == 1);
}

TEST_CASE("duplicate names on one record count once") {
  auto net = extract_cooccurrence({{{"A", "A", "B"}, 2000, 0}});
  CHECK(net.node_count() == 2);
  CHECK(weight_of(net, "A", "B") == 1);
  CHECK(net.nodes[*net.find("A")].papers == 1);
}

TEST_CASE("edge weights equal a nested-loop pair count oracle") {
  std::mt19937 rng(17);
  auto records = random_records(rng, 1000, 60);
  auto net = extract_cooccurrence(records);

  // oracle: count unordered pairs directly
  std::map<std::pair<std::string, std::string>, long> oracle;
  for (const auto& rec : records) {
    std::set<std::string> distinct(rec.entities.begin(), rec.entities.end());
    for (auto it = distinct.begin(); it != distinct.end(); ++it) {
      auto jt = it;
      for (++jt; jt != distinct.end(); ++jt) oracle[{*it, *jt}]++;
    }
  }
  REQUIRE(net.edge_count() == oracle.size());
  for (const auto& [pair, w] : oracle)
    CHECK(weight_of(net, pair.first, pair.second) == w);

  // degree sum identity
  std::map<std::uint32_t, long> degree;
  long weight_sum = 0;
  for (const auto& [e, w] : net.edges) {
    degree[e.first]++;
    degree[e.second]++;
    weight_sum += w;
  }
  long degree_sum = 0;
  for (const auto& [n, d] : degree) degree_sum += d;
  CHECK(degree_sum == 2 * static_cast<long>(net.edge_count()));
  // sum of weights equals sum over records of C(k,2)
  long pair_sum = 0;
  for (const auto& rec : records) {
    std::set<std::string> distinct(rec.entities.begin(), rec.entities.end());
    long k = static_cast<long>(distinct.size());
    pair_sum += k * (k - 1) / 2;
  }
  CHECK(weight_sum == pair_sum);
}

TEST_CASE("components on the worked example") {
  auto net = extract_cooccurrence(toy_coauthor_records());
  auto res = components(net);
  CHECK(res.report.component_count == 3);
  CHECK(res.report.isolate_count == 1);
  CHECK(res.report.largest_component_size == 3);
  // every node gets a component id; sizes partition the nodes
  std::map<int, size_t> sizes;
  for (int c : res.component_of) sizes[c]++;
  size_t total = 0;
  for (const auto& [c, n] : sizes) total += n;
  CHECK(total == net.node_count());
}

TEST_CASE("average degree matches the reported corpus values") {
  CHECK(rounded_avg_degree(17316, 31476) == doctest::Approx(3.64));
  CHECK(rounded_avg_degree(30784, 96982) == doctest::Approx(6.30));
  CHECK(rounded_avg_degree(0, 0) == 0.0);
}

TEST_CASE("filter_network applies thresholds in the stated order") {
  auto net = extract_cooccurrence(toy_coauthor_records());

  SUBCASE("zero thresholds are the identity") {
    auto f = filter_network(net, 0, 0, false);
    CHECK(f.node_count() == net.node_count());
    CHECK(f.edge_count() == net.edge_count());
  }
  SUBCASE("citation threshold removes nodes and their edges") {
    // A3 and A4 have 0 citations
    auto f = filter_network(net, 1, 0, false);
    CHECK_FALSE(f.find("A3").has_value());
    CHECK_FALSE(f.find("A4").has_value());
    CHECK(f.edge_count() == 2);
  }
  SUBCASE("edge threshold then isolate removal") {
    auto f = filter_network(net, 0, 2, true);
    // only (A2,A6) weight 2 survives; everyone else became an isolate
    CHECK(f.node_count() == 2);
    CHECK(f.edge_count() == 1);
  }
}

TEST_CASE("filter_network equals an independent re-filter on random input") {
  std::mt19937 rng(23);
  auto records = random_records(rng, 120, 50);
  auto net = extract_cooccurrence(records);
  long min_cit = 5, min_w = 2;
  auto got = filter_network(net, min_cit, min_w, true);

  // oracle: rebuild from scratch by set comprehension
  std::set<std::string> kept_nodes;
  for (const auto& n : net.nodes)
    if (n.citations >= min_cit) kept_nodes.insert(n.label);
  std::map<std::pair<std::string, std::string>, long> kept_edges;
  for (const auto& [e, w] : net.edges) {
    const auto& a = net.nodes[e.first].label;
    const auto& b = net.nodes[e.second].label;
    if (kept_nodes.count(a) && kept_nodes.count(b) && w >= min_w)
      kept_edges[{std::min(a, b), std::max(a, b)}] = w;
  }
  std::set<std::string> connected;
  for (const auto& [e, w] : kept_edges) {
    connected.insert(e.first);
    connected.insert(e.second);
  }
  CHECK(got.node_count() == connected.size());
  CHECK(got.edge_count() == kept_edges.size());
  for (const auto& [e, w] : kept_edges)
    CHECK(weight_of(got, e.first, e.second) == w);
  // subgraph property
  for (const auto& n : got.nodes) CHECK(net.find(n.label).has_value());
}

TEST_CASE("largest_component of the worked example") {
  auto net = extract_cooccurrence(toy_coauthor_records());
  auto giant = largest_component(net);
  CHECK(giant.node_count() == 3);
  CHECK(giant.find("A1").has_value());
  CHECK(giant.find("A2").has_value());
  CHECK(giant.find("A6").has_value());
}

TEST_CASE("largest_component trivia") {
  auto single = extract_cooccurrence({{{"X"}, 2000, 0}});
  CHECK(largest_component(single).node_count() == 1);

  // two equal components: the one holding the smallest label wins
  auto net = extract_cooccurrence({{{"B1", "B2"}, 2000, 0},
                                   {{"A1", "A2"}, 2001, 0}});
  auto giant = largest_component(net);
  CHECK(giant.node_count() == 2);
  CHECK(giant.find("A1").has_value());

  CHECK(largest_component(Network{}).node_count() == 0);
}

TEST_CASE("force_layout places a single node at the canvas center") {
  auto net = extract_cooccurrence({{{"Solo"}, 2000, 0}});
  auto pos = force_layout(net, 42, 10);
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].first == doctest::Approx(500.0));
  CHECK(pos[0].second == doctest::Approx(500.0));
}

TEST_CASE("force_layout pulls connected nodes together") {
  // two pairs: one connected, one not; same seed, same initial conditions
  Network net;
  net.nodes.resize(4);
  net.nodes[0].label = "a";
  net.nodes[1].label = "b";
  net.nodes[2].label = "c";
  net.nodes[3].label = "d";
  net.edges[{0, 1}] = 3;
  auto pos = force_layout(net, 7, 120);
  auto dist = [&](size_t i, size_t j) {
    double dx = pos[i].first - pos[j].first;
    double dy = pos[i].second - pos[j].second;
    return std::sqrt(dx * dx + dy * dy);
  };
  CHECK(dist(0, 1) < dist(2, 3));
}

TEST_CASE("force_layout keeps adjacent nodes closer than non-adjacent ones") {
  std::mt19937 rng(31);
  Network net;
  net.nodes.resize(30);
  for (int i = 0; i < 30; ++i)
    net.nodes[static_cast<size_t>(i)].label = "N" + std::to_string(i);
  for (int e = 0; e < 45; ++e) {
    auto a = static_cast<std::uint32_t>(rng() % 30);
    auto b = static_cast<std::uint32_t>(rng() % 30);
    if (a == b) continue;
    net.edges[{std::min(a, b), std::max(a, b)}] = 1;
  }
  auto pos = force_layout(net, 4, 150);
  auto dist = [&](size_t i, size_t j) {
    double dx = pos[i].first - pos[j].first;
    double dy = pos[i].second - pos[j].second;
    return std::sqrt(dx * dx + dy * dy);
  };
  double edge_sum = 0.0;
  size_t edge_n = 0;
  for (const auto& [e, w] : net.edges) {
    edge_sum += dist(e.first, e.second);
    ++edge_n;
  }
  double non_sum = 0.0;
  size_t non_n = 0;
  for (std::uint32_t i = 0; i < 30; ++i) {
    for (std::uint32_t j = i + 1; j < 30; ++j) {
      if (net.edges.count({i, j})) continue;
      non_sum += dist(i, j);
      ++non_n;
    }
  }
  REQUIRE(edge_n > 0);
  REQUIRE(non_n > 0);
  CHECK(edge_sum / static_cast<double>(edge_n) <
        non_sum / static_cast<double>(non_n));
}

TEST_CASE("force_layout is deterministic and inside the canvas") {
  std::mt19937 rng(77);
  auto records = random_records(rng, 40, 20);
  auto net = extract_cooccurrence(records);
  auto a = force_layout(net, 1234, 60);
  auto b = force_layout(net, 1234, 60);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first); // bitwise equal
    CHECK(a[i].second == b[i].second);
    CHECK(a[i].first >= 0.0);
    CHECK(a[i].first <= 1000.0);
    CHECK(std::isfinite(a[i].second));
  }
  auto c = force_layout(net, 4321, 60);
  bool all_same = true;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != c[i]) all_same = false;
  CHECK_FALSE(all_same); // a different seed moves the layout
}

namespace {

Gazetteer test_gazetteer() {
  std::istringstream in(
      "city\tregion\tcountry\tlat\tlon\n"
      "Austin\tTX\tUSA\t30.2672\t-97.7431\n"
      "Pittsburgh\tPA\tUSA\t40.4406\t-79.9959\n");
  return Gazetteer::read(in);
}

Publication pub_with_address(const std::string& id, int year,
                             const std::string& author,
                             const std::string& city, const std::string& region,
                             const std::string& country, long tc) {
  Publication p;
  p.id = id;
  p.year = year;
  p.authors = {author};
  p.addresses = {AddressEntry{author, city, region, country, year}};
  p.times_cited = tc;
  return p;
}

} // namespace

TEST_CASE("geocode selects the most recent address") {
  std::vector<Publication> pubs = {
      pub_with_address("P1", 2005, "Smith, J", "Pittsburgh", "PA", "USA", 4),
      pub_with_address("P2", 2011, "Smith, J", "Austin", "TX", "USA", 6),
  };
  auto report = geocode(pubs, test_gazetteer());
  REQUIRE(report.authors.size() == 1);
  CHECK(report.authors[0].city == "Austin");
  CHECK(report.authors[0].lat == doctest::Approx(30.2672));
  CHECK(report.authors[0].citations == 10); // both records credited
}

TEST_CASE("geocode breaks year ties by the last listed address") {
  Publication p;
  p.id = "P1";
  p.year = 2010;
  p.authors = {"Smith, J"};
  p.addresses = {AddressEntry{"Smith, J", "Pittsburgh", "PA", "USA", 2010},
                 AddressEntry{"Smith, J", "Austin", "TX", "USA", 2010}};
  auto report = geocode({p}, test_gazetteer());
  REQUIRE(report.authors.size() == 1);
  CHECK(report.authors[0].city == "Austin");
}

TEST_CASE("geocode excludes non-US and unknown addresses with counts") {
  std::vector<Publication> pubs = {
      pub_with_address("P1", 2005, "Muller, H", "Paris", "", "France", 3),
      pub_with_address("P2", 2006, "Okafor, I", "Smalltown", "OK", "USA", 2),
      pub_with_address("P3", 2007, "Lee, K", "Austin", "TX", "USA", 1),
  };
  Publication no_addr;
  no_addr.id = "P4";
  no_addr.year = 2008;
  no_addr.authors = {"Ghost, A"};
  pubs.push_back(no_addr);
  auto report = geocode(pubs, test_gazetteer());
  CHECK(report.authors.size() == 1);
  CHECK(report.excluded_non_us == 1);
  CHECK(report.excluded_unknown == 1);
  CHECK(report.excluded_no_address == 1);
}

TEST_CASE("mercator projection") {
  auto [x0, y0] = mercator(0.0, 0.0);
  CHECK(x0 == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(y0 == doctest::Approx(0.0).epsilon(1e-9));
  auto [x1, y1] = mercator(0.0, 180.0);
  CHECK(x1 == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(y1 == doctest::Approx(0.0).epsilon(1e-9));
  auto [x2, y2] = mercator(41.88, -87.63);
  CHECK(x2 == doctest::Approx(-1.5295).epsilon(1e-3));
  CHECK(y2 == doctest::Approx(0.8072).epsilon(1e-3));
  // latitude clamp keeps the projection finite
  auto [x3, y3] = mercator(90.0, 0.0);
  CHECK(std::isfinite(y3));
  CHECK(x3 == 0.0);
}

TEST_CASE("top_cities sums citations per selected city") {
  std::vector<GeocodedAuthor> authors = {
      {"A", "Austin", "TX", 30.0, -97.0, 3, 2000},
      {"B", "Austin", "TX", 30.0, -97.0, 4, 2001},
      {"C", "Pittsburgh", "PA", 40.0, -80.0, 5, 2002},
  };
  auto ranked = top_cities(authors);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0] == std::pair<std::string, long>{"Austin", 7});
  CHECK(ranked[1] == std::pair<std::string, long>{"Pittsburgh", 5});
  CHECK(top_cities({}).empty());
}

TEST_CASE("top_cities equals a brute-force group-by on a synthetic corpus") {
  std::mt19937 rng(8);
  const char* cities[] = {"Austin", "Pittsburgh", "Cambridge", "Norfolk"};
  std::vector<GeocodedAuthor> authors;
  std::map<std::string, long> oracle;
  for (int i = 0; i < 20; ++i) {
    GeocodedAuthor a;
    a.author = "A" + std::to_string(i);
    a.city = cities[rng() % 4];
    a.citations = static_cast<long>(rng() % 100);
    oracle[a.city] += a.citations;
    authors.push_back(a);
  }
  auto ranked = top_cities(authors);
  REQUIRE(ranked.size() == oracle.size());
  for (const auto& [city, total] : ranked) CHECK(oracle.at(city) == total);
  for (size_t i = 1; i < ranked.size(); ++i)
    CHECK(ranked[i - 1].second >= ranked[i].second);
}

TEST_CASE("node and edge tables are written with stable columns") {
  auto net = extract_cooccurrence(toy_coauthor_records());
  auto comp = components(net);
  std::ostringstream nodes, edges;
  write_node_table(nodes, net, comp.component_of);
  write_edge_table(edges, net);
  CHECK(nodes.str().find("label\tpapers\tcitations\tfirst_year") == 0);
  CHECK(edges.str().find("source\ttarget\tweight") == 0);
  CHECK(edges.str().find("A2\tA6\t2") != std::string::npos);
}
