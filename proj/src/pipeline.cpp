#include "scimap/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "scimap/convergence.hpp"
#include "scimap/kernels.hpp"
#include "scimap/lexicon.hpp"
#include "scimap/network.hpp"
#include "scimap/render.hpp"
#include "scimap/sciencemap.hpp"
#include "scimap/strings.hpp"
#include "scimap/table.hpp"

namespace scimap {

namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const fs::path& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + what + ": " + path.string());
  return in;
}

std::ifstream require_artifact(const PipelineConfig& cfg,
                               const std::string& name,
                               const std::string& producing_stage) {
  fs::path path = cfg.out / name;
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DependencyError("missing artifact " + name + " in " +
                          cfg.out.string() + "; run stage '" +
                          producing_stage + "' first");
  return in;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
}

// "keywords: term; term" / "title,abstract: term" -> TopicQuery
TopicQuery parse_topic_value(const std::string& label,
                             const std::string& value) {
  TopicQuery q;
  q.label = label;
  std::string terms_part = value;
  auto colon = value.find(':');
  if (colon != std::string::npos) {
    std::string fields = lower_ascii(trim(value.substr(0, colon)));
    bool recognized = !fields.empty();
    q.search_keywords = q.search_title = q.search_abstract = false;
    for (const auto& f : split(fields, ',')) {
      std::string t = trim(f);
      if (t == "keywords") q.search_keywords = true;
      else if (t == "title") q.search_title = true;
      else if (t == "abstract") q.search_abstract = true;
      else recognized = false;
    }
    if (recognized) {
      terms_part = value.substr(colon + 1);
    } else {
      // No field prefix: the whole value is the term list.
      q.search_keywords = true;
      q.search_title = q.search_abstract = false;
    }
  }
  for (const auto& t : split(terms_part, ';')) {
    std::string term = trim(t);
    if (!term.empty()) q.terms.push_back(term);
  }
  if (q.terms.empty())
    throw ValidationError("topic '" + label + "' has no query terms");
  return q;
}

} // namespace

PipelineConfig PipelineConfig::load(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open config: " + file.string());
  PipelineConfig cfg;
  cfg.config_dir = file.parent_path();
  auto resolve = [&cfg](const std::string& v) {
    fs::path p(v);
    return p.is_absolute() ? p : cfg.config_dir / p;
  };
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) +
                            ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    long long n = 0;
    if (key == "wos") cfg.wos = resolve(value);
    else if (key == "awards") cfg.awards = resolve(value);
    else if (key == "exclusions") cfg.exclusions = resolve(value);
    else if (key == "aliases") cfg.aliases = resolve(value);
    else if (key == "merges") cfg.merges = resolve(value);
    else if (key == "gazetteer") cfg.gazetteer = resolve(value);
    else if (key == "basemap") cfg.basemap = resolve(value);
    else if (key == "classification.venues") cfg.cls_venues = resolve(value);
    else if (key == "classification.subdisciplines")
      cfg.cls_subdisciplines = resolve(value);
    else if (key == "classification.disciplines")
      cfg.cls_disciplines = resolve(value);
    else if (key == "classification.keywords") cfg.cls_keywords = resolve(value);
    else if (key == "out") cfg.out = fs::path(value);
    else if (key == "window") {
      auto parts = split(value, ':');
      long long a = 0, b = 0;
      if (parts.size() != 2 || !parse_long(parts[0], a) || !parse_long(parts[1], b))
        throw ValidationError("invalid config value for key 'window': " + value);
      cfg.window_start = static_cast<int>(a);
      cfg.window_end = static_cast<int>(b);
    } else if (starts_with(key, "topic.")) {
      cfg.pub_queries.push_back(parse_topic_value(key.substr(6), value));
    } else if (starts_with(key, "award_topic.")) {
      cfg.award_queries.push_back(parse_topic_value(key.substr(12), value));
    } else if (key == "gamma") cfg.burst.gamma = std::stod(value);
    else if (key == "scaling") cfg.burst.s = std::stod(value);
    else if (key == "states") {
      if (!parse_long(value, n) || n < 1)
        throw ValidationError("invalid config value for key 'states': " + value);
      cfg.burst.num_burst_states = static_cast<int>(n);
    } else if (key == "min_length") {
      if (!parse_long(value, n) || n < 1)
        throw ValidationError("invalid config value for key 'min_length': " + value);
      cfg.burst.min_burst_length = static_cast<int>(n);
    } else if (key == "top_n") {
      if (!parse_long(value, n) || n < 1)
        throw ValidationError("invalid config value for key 'top_n': " + value);
      cfg.top_n = static_cast<size_t>(n);
    } else if (key == "min_cited") {
      if (!parse_long(value, n))
        throw ValidationError("invalid config value for key 'min_cited': " + value);
      cfg.min_cited = n;
    } else if (key == "min_edge_weight") {
      if (!parse_long(value, n))
        throw ValidationError("invalid config value for key 'min_edge_weight': " + value);
      cfg.min_edge_weight = n;
    } else if (key == "drop_isolates") {
      cfg.drop_isolates = value == "true" || value == "1";
    } else if (key == "network_topic") {
      cfg.network_topic = value;
    } else if (key == "seed") {
      if (!parse_long(value, n) || n < 0)
        throw ValidationError("invalid config value for key 'seed': " + value);
      cfg.seed = static_cast<std::uint64_t>(n);
    } else if (key == "iterations") {
      if (!parse_long(value, n) || n < 1)
        throw ValidationError("invalid config value for key 'iterations': " + value);
      cfg.layout_iterations = static_cast<int>(n);
    } else if (key == "label_min_citations") {
      if (!parse_long(value, n))
        throw ValidationError("invalid config value for key 'label_min_citations': " + value);
      cfg.label_min_citations = n;
    } else {
      throw ValidationError("unknown config key: " + key);
    }
  }
  return cfg;
}

void PipelineConfig::validate() const {
  auto check = [](const fs::path& p, const char* key, bool required) {
    if (p.empty()) {
      if (required)
        throw ValidationError(std::string("missing required config key: ") + key);
      return;
    }
    if (!fs::exists(p))
      throw ValidationError(std::string("path for key '") + key +
                            "' does not exist: " + p.string());
  };
  check(wos, "wos", true);
  check(awards, "awards", true);
  check(exclusions, "exclusions", false);
  check(aliases, "aliases", false);
  check(merges, "merges", false);
  check(gazetteer, "gazetteer", true);
  check(basemap, "basemap", true);
  check(cls_venues, "classification.venues", true);
  check(cls_subdisciplines, "classification.subdisciplines", true);
  check(cls_disciplines, "classification.disciplines", true);
  check(cls_keywords, "classification.keywords", false);
  if (window_start > window_end)
    throw ValidationError("window start year exceeds end year");
  if (!seed.has_value())
    throw ValidationError("missing required config key: seed");
  if (pub_queries.empty())
    throw ValidationError("no topic.* queries configured");
}

namespace {

std::vector<Publication> load_publications(const PipelineConfig& cfg) {
  auto in = require_artifact(cfg, "publications.tsv", "ingest");
  return read_publication_table(in);
}

std::vector<Award> load_awards(const PipelineConfig& cfg) {
  auto in = require_artifact(cfg, "awards.tsv", "ingest");
  return read_award_table(in);
}

struct TermRow {
  std::string source; // "publication" | "funding"
  std::string id;
  int year = 0;
  std::string term;
};

std::vector<TermRow> load_terms(const PipelineConfig& cfg) {
  auto in = require_artifact(cfg, "terms.tsv", "keywords");
  std::vector<TermRow> rows;
  for (auto& row : read_tsv(in)) {
    if (row.size() < 4 || row[0] == "source") continue;
    long long y = 0;
    parse_long(row[2], y);
    rows.push_back(TermRow{row[0], row[1], static_cast<int>(y), row[3]});
  }
  return rows;
}

Classification load_cls(const PipelineConfig& cfg) {
  auto venues = open_input(cfg.cls_venues, "classification venues");
  auto subd = open_input(cfg.cls_subdisciplines, "classification subdisciplines");
  auto disc = open_input(cfg.cls_disciplines, "classification disciplines");
  if (cfg.cls_keywords.empty())
    return load_classification(venues, subd, disc, nullptr);
  auto kw = open_input(cfg.cls_keywords, "classification keywords");
  return load_classification(venues, subd, disc, &kw);
}

} // namespace

void run_ingest(const PipelineConfig& cfg) {
  fs::create_directories(cfg.out);
  std::ostringstream report;

  auto wos_in = open_input(cfg.wos, "publications file");
  auto pubs_parsed = parse_wos_tagged(wos_in);
  auto awards_in = open_input(cfg.awards, "awards file");
  auto awards_parsed = parse_nsf_awards(awards_in);
  report << "parsed publications: " << pubs_parsed.records.size()
         << " (errors: " << pubs_parsed.errors.size() << ")\n";
  report << "parsed awards: " << awards_parsed.records.size()
         << " (errors: " << awards_parsed.errors.size() << ")\n";
  for (const auto& e : pubs_parsed.errors)
    report << "  publication record " << e.record_index << ": " << e.message
           << "\n";
  for (const auto& e : awards_parsed.errors)
    report << "  award row " << e.record_index << ": " << e.message << "\n";

  auto pubs = filter_window(std::move(pubs_parsed.records), cfg.window_start,
                            cfg.window_end);
  auto awards = filter_window(std::move(awards_parsed.records),
                              cfg.window_start, cfg.window_end);
  report << "within window " << cfg.window_start << "-" << cfg.window_end
         << ": " << pubs.size() << " publications, " << awards.size()
         << " awards\n";

  if (!cfg.exclusions.empty()) {
    auto excl_in = open_input(cfg.exclusions, "exclusion list");
    auto excl = read_exclusion_list(excl_in);
    auto rp = apply_exclusions(std::move(pubs), excl);
    auto ra = apply_exclusions(std::move(awards), excl);
    pubs = std::move(rp.records);
    awards = std::move(ra.records);
    report << "excluded " << rp.removed << " publications, " << ra.removed
           << " awards\n";
  }

  topic_tag(pubs, cfg.pub_queries);
  topic_tag(awards, cfg.award_queries.empty() ? cfg.pub_queries
                                              : cfg.award_queries);
  for (const auto& q : cfg.pub_queries) {
    size_t n = 0;
    for (const auto& p : pubs)
      if (p.topics.count(q.label)) ++n;
    report << "topic " << q.label << ": " << n << " publications\n";
  }
  size_t no_authors = 0;
  for (const auto& p : pubs)
    if (p.authors.empty()) ++no_authors;
  if (no_authors)
    report << no_authors
           << " publications have no authors and are excluded from"
              " co-author and geospatial analyses\n";

  std::ostringstream pub_table;
  write_publication_table(pub_table, pubs);
  write_text(cfg.out / "publications.tsv", pub_table.str());
  std::ostringstream award_table;
  write_award_table(award_table, awards);
  write_text(cfg.out / "awards.tsv", award_table.str());
  write_text(cfg.out / "ingest_report.txt", report.str());
}

void run_keywords(const PipelineConfig& cfg) {
  auto pubs = load_publications(cfg);
  auto awards = load_awards(cfg);

  std::map<std::string, long> freq;
  for (const auto& p : pubs)
    for (const auto& kw : p.author_keywords) freq[trim(kw)]++;
  std::vector<std::pair<std::string, long>> term_freqs(freq.begin(), freq.end());
  auto clusters = cluster_terms(term_freqs, FingerprintMethod::key_collision);
  if (!cfg.merges.empty()) {
    auto merges_in = open_input(cfg.merges, "merge overrides");
    std::vector<MergeOverride> overrides;
    for (auto& [variant, canonical] : read_pairs(merges_in))
      overrides.push_back(MergeOverride{variant, canonical});
    clusters = apply_merge_overrides(std::move(clusters), overrides);
  }

  std::ostringstream cluster_table;
  write_tsv_row(cluster_table, {"representative", "variant", "frequency"});
  std::map<std::string, std::string> representative_of; // variant -> rep
  for (const auto& c : clusters) {
    for (const auto& [variant, f] : c.variants) {
      write_tsv_row(cluster_table,
                    {c.representative, variant, std::to_string(f)});
      representative_of[variant] = c.representative;
    }
  }
  write_text(cfg.out / "clusters.tsv", cluster_table.str());

  std::vector<std::string> reps;
  for (const auto& c : clusters) reps.push_back(c.representative);
  Lexicon lexicon = Lexicon::from_terms(reps);

  // One row per (record, normalized term).
  std::ostringstream terms_table;
  write_tsv_row(terms_table, {"source", "id", "year", "term"});
  for (const auto& p : pubs) {
    std::set<std::string> terms;
    for (const auto& kw : p.author_keywords) {
      auto it = representative_of.find(trim(kw));
      std::string rep = it != representative_of.end() ? it->second : trim(kw);
      std::string n = normalize_term(rep);
      if (!n.empty()) terms.insert(n);
    }
    for (const auto& t : terms)
      write_tsv_row(terms_table,
                    {"publication", p.id, std::to_string(p.year), t});
  }
  for (const auto& a : awards) {
    std::set<std::string> terms;
    for (const auto& t : maxmatch_extract(a.title + " " + a.abstract, lexicon))
      terms.insert(t);
    for (const auto& t : terms)
      write_tsv_row(terms_table,
                    {"funding", a.id, std::to_string(a.start_date.year), t});
  }
  write_text(cfg.out / "terms.tsv", terms_table.str());
}

namespace {

const char* source_name(BurstSource s) {
  return s == BurstSource::funding ? "funding" : "publication";
}

std::vector<BurstSummary> burst_summaries_for_source(
    const std::vector<TermRow>& rows, BurstSource source,
    const PipelineConfig& cfg) {
  std::map<std::string, DocTerms> docs_by_id;
  const char* want = source_name(source);
  for (const auto& row : rows) {
    if (row.source != want) continue;
    auto& doc = docs_by_id[row.id];
    doc.year = row.year;
    doc.terms.insert(row.term);
  }
  std::vector<DocTerms> docs;
  docs.reserve(docs_by_id.size());
  for (auto& [id, doc] : docs_by_id) docs.push_back(std::move(doc));

  std::set<std::string> all_terms;
  for (const auto& doc : docs) all_terms.insert(doc.terms.begin(), doc.terms.end());

  std::vector<Burst> bursts;
  for (const auto& term : all_terms) {
    auto stream = build_event_stream(docs, term, cfg.window_start, cfg.window_end);
    auto found = detect_bursts(stream, cfg.burst, source);
    bursts.insert(bursts.end(), found.begin(), found.end());
  }
  return summarize_and_rank(bursts, cfg.top_n);
}

} // namespace

void run_burst(const PipelineConfig& cfg) {
  auto rows = load_terms(cfg);
  auto funding = burst_summaries_for_source(rows, BurstSource::funding, cfg);
  auto publication =
      burst_summaries_for_source(rows, BurstSource::publication, cfg);
  find_cobursts(funding, publication);

  std::ostringstream burst_table;
  write_tsv_row(burst_table, {"term", "source", "start_year", "end_year",
                              "weight", "state_level", "co_burst"});
  auto emit = [&burst_table](const std::vector<BurstSummary>& summaries) {
    for (const auto& s : summaries) {
      for (const auto& b : s.bursts) {
        write_tsv_row(burst_table,
                      {b.term, source_name(b.source),
                       std::to_string(b.start_year), std::to_string(b.end_year),
                       format_fixed(b.weight, 4), std::to_string(b.state_level),
                       s.co_burst ? "true" : "false"});
      }
    }
  };
  emit(funding);
  emit(publication);
  write_text(cfg.out / "bursts.tsv", burst_table.str());

  std::vector<BurstSummary> all;
  all.insert(all.end(), funding.begin(), funding.end());
  all.insert(all.end(), publication.begin(), publication.end());
  auto bars = layout_burst_bars(all);
  std::ostringstream bars_table;
  write_tsv_row(bars_table, {"term", "source", "start_year", "end_year",
                             "height", "color_class"});
  for (const auto& bar : bars) {
    const char* color = bar.color == BarColorClass::co_burst ? "co_burst"
                        : bar.color == BarColorClass::funding ? "funding"
                                                              : "publication";
    write_tsv_row(bars_table,
                  {bar.term, source_name(bar.source),
                   std::to_string(bar.start_year), std::to_string(bar.end_year),
                   format_fixed(bar.height, 6), color});
  }
  write_text(cfg.out / "burst_bars.tsv", bars_table.str());
}

void run_network(const PipelineConfig& cfg) {
  auto pubs = load_publications(cfg);
  std::vector<Publication> selected;
  for (const auto& p : pubs) {
    if (cfg.network_topic.empty() || p.topics.count(cfg.network_topic))
      selected.push_back(p);
  }
  auto full = extract_cooccurrence(coauthor_records(selected));
  auto full_comp = components(full);
  auto filtered = filter_network(full, cfg.min_cited, cfg.min_edge_weight,
                                 cfg.drop_isolates);
  auto filtered_comp = components(filtered);
  auto giant = largest_component(filtered);

  auto pos = force_layout(filtered, *cfg.seed, cfg.layout_iterations);
  apply_layout(filtered, pos);

  auto gaz_in = open_input(cfg.gazetteer, "gazetteer");
  auto gaz = Gazetteer::read(gaz_in);
  auto geo = geocode(selected, gaz);
  std::map<std::string, std::pair<double, double>> coords;
  for (const auto& a : geo.authors) coords[a.author] = {a.lat, a.lon};
  for (auto& node : filtered.nodes) {
    auto it = coords.find(node.label);
    if (it != coords.end()) {
      node.lat = it->second.first;
      node.lon = it->second.second;
    }
  }

  std::ostringstream nodes_out;
  write_node_table(nodes_out, filtered, filtered_comp.component_of);
  write_text(cfg.out / "nodes.tsv", nodes_out.str());
  std::ostringstream edges_out;
  write_edge_table(edges_out, filtered);
  write_text(cfg.out / "edges.tsv", edges_out.str());

  std::ostringstream cities_out;
  write_tsv_row(cities_out, {"city", "citations"});
  for (const auto& [city, citations] : top_cities(geo.authors))
    write_tsv_row(cities_out, {city, std::to_string(citations)});
  write_text(cfg.out / "cities.tsv", cities_out.str());

  std::ostringstream report;
  auto describe = [&report](const char* name, const Network& net,
                            const ComponentResult& comp) {
    report << name << ": " << net.node_count() << " nodes, "
           << net.edge_count() << " edges, " << comp.report.component_count
           << " components, " << comp.report.isolate_count << " isolates, "
           << "largest component " << comp.report.largest_component_size
           << ", average degree " << format_fixed(comp.report.avg_degree, 2)
           << "\n";
  };
  describe("full network", full, full_comp);
  describe("filtered network", filtered, filtered_comp);
  report << "largest filtered component: " << giant.node_count() << " nodes\n";
  report << "geocoded authors: " << geo.authors.size() << " (excluded: "
         << geo.excluded_non_us << " non-US, " << geo.excluded_unknown
         << " unknown city, " << geo.excluded_no_address << " no address)\n";
  report << "layout kernel: " << kernels::selected_repulsion_name() << "\n";
  write_text(cfg.out / "network_report.txt", report.str());
}

void run_sciencemap(const PipelineConfig& cfg) {
  auto pubs = load_publications(cfg);
  auto cls = load_cls(cfg);
  int mid = cfg.window_start + (cfg.window_end - cfg.window_start) / 2;
  const std::pair<int, int> slices[2] = {{cfg.window_start, mid},
                                         {mid + 1, cfg.window_end}};
  for (const auto& [s0, s1] : slices) {
    auto symbols = aggregate_overlay(pubs, cls, s0, s1, 12.0);
    std::ostringstream out;
    write_tsv_row(out, {"subd_id", "x", "y", "value", "radius"});
    for (const auto& sym : symbols) {
      write_tsv_row(out, {sym.subd_id, format_fixed(sym.x, 4),
                          format_fixed(sym.y, 4), format_fixed(sym.value, 4),
                          format_fixed(sym.radius, 4)});
    }
    write_text(cfg.out / ("overlay_" + std::to_string(s0) + "_" +
                          std::to_string(s1) + ".tsv"),
               out.str());
  }
  auto papers = discipline_histogram(pubs, cls, HistogramMetric::papers);
  auto citations = discipline_histogram(pubs, cls, HistogramMetric::citations);
  std::ostringstream hist;
  write_tsv_row(hist, {"discipline_id", "name", "papers", "citations"});
  for (const auto& [id, value] : papers) {
    write_tsv_row(hist, {id, cls.disciplines.at(id).name,
                         format_fixed(value, 4),
                         format_fixed(citations.at(id), 4)});
  }
  write_text(cfg.out / "discipline_histogram.tsv", hist.str());
}

void run_converge(const PipelineConfig& cfg) {
  auto pubs = load_publications(cfg);
  auto awards = load_awards(cfg);
  auto rows = load_terms(cfg);

  // Keyword sets per topic from normalized terms.
  std::map<std::string, std::set<std::string>> pub_keywords, award_keywords;
  {
    std::map<std::string, const Publication*> pub_by_id;
    for (const auto& p : pubs) pub_by_id[p.id] = &p;
    std::map<std::string, const Award*> award_by_id;
    for (const auto& a : awards) award_by_id[a.id] = &a;
    for (const auto& row : rows) {
      if (row.source == "publication") {
        auto it = pub_by_id.find(row.id);
        if (it == pub_by_id.end()) continue;
        for (const auto& t : it->second->topics)
          pub_keywords[t].insert(row.term);
      } else {
        auto it = award_by_id.find(row.id);
        if (it == award_by_id.end()) continue;
        for (const auto& t : it->second->topics)
          award_keywords[t].insert(row.term);
      }
    }
  }
  auto pub_overlaps = set_overlaps(topic_record_sets(pubs), pub_keywords);
  auto award_overlaps = set_overlaps(topic_record_sets(awards), award_keywords);

  std::ostringstream overlap_table;
  write_tsv_row(overlap_table, {"kind", "labels", "count"});
  auto emit_overlaps = [&overlap_table](const char* prefix,
                                        const OverlapReport& rep) {
    for (const auto& [label, n] : rep.record_totals)
      write_tsv_row(overlap_table,
                    {std::string(prefix) + "_records", label, std::to_string(n)});
    for (const auto& [pair, n] : rep.record_pairs)
      write_tsv_row(overlap_table, {std::string(prefix) + "_records",
                                    pair.first + "&" + pair.second,
                                    std::to_string(n)});
    if (rep.record_totals.size() >= 3)
      write_tsv_row(overlap_table,
                    {std::string(prefix) + "_records", "all",
                     std::to_string(rep.record_all)});
    for (const auto& [label, n] : rep.keyword_totals)
      write_tsv_row(overlap_table, {std::string(prefix) + "_keywords", label,
                                    std::to_string(n)});
    for (const auto& [pair, n] : rep.keyword_pairs)
      write_tsv_row(overlap_table, {std::string(prefix) + "_keywords",
                                    pair.first + "&" + pair.second,
                                    std::to_string(n)});
    if (rep.keyword_totals.size() >= 3)
      write_tsv_row(overlap_table,
                    {std::string(prefix) + "_keywords", "all",
                     std::to_string(rep.keyword_all)});
  };
  emit_overlaps("publication", pub_overlaps);
  emit_overlaps("award", award_overlaps);
  write_text(cfg.out / "overlaps.tsv", overlap_table.str());

  auto flow_report = intercitation_matrix(pubs);
  std::ostringstream flow_table;
  write_tsv_row(flow_table, {"source_topic", "source_year", "target_topic",
                             "target_year", "count"});
  for (const auto& f : flow_report.flows) {
    write_tsv_row(flow_table,
                  {f.source_topic, std::to_string(f.source_year),
                   f.target_topic, std::to_string(f.target_year),
                   std::to_string(f.count)});
  }
  write_text(cfg.out / "flows.tsv", flow_table.str());

  std::ostringstream trend_table;
  write_tsv_row(trend_table,
                {"record_type", "topic", "slope", "p_value", "n_years"});
  auto emit_trend = [&](const std::string& type, const std::string& topic,
                        const std::vector<double>& counts) {
    auto res = trend_test(counts);
    write_tsv_row(trend_table, {type, topic, format_fixed(res.slope, 4),
                                format_fixed(res.p_value, 6),
                                std::to_string(res.n_years)});
  };
  const int n_years = cfg.window_end - cfg.window_start + 1;
  for (const auto& q : cfg.pub_queries) {
    std::vector<double> counts(static_cast<size_t>(n_years), 0.0);
    for (const auto& p : pubs)
      if (p.topics.count(q.label))
        counts[static_cast<size_t>(p.year - cfg.window_start)] += 1.0;
    emit_trend("publication", q.label, counts);
  }
  {
    std::vector<double> counts(static_cast<size_t>(n_years), 0.0);
    for (const auto& p : pubs)
      counts[static_cast<size_t>(p.year - cfg.window_start)] += 1.0;
    emit_trend("publication", "all", counts);
  }
  {
    std::vector<double> counts(static_cast<size_t>(n_years), 0.0);
    for (const auto& a : awards) {
      int y = std::clamp(a.start_date.year, cfg.window_start, cfg.window_end);
      counts[static_cast<size_t>(y - cfg.window_start)] += 1.0;
    }
    emit_trend("award", "all", counts);
  }
  write_text(cfg.out / "trends.tsv", trend_table.str());
  if (flow_report.unresolved_ids || flow_report.dropped_forward) {
    std::ostringstream note;
    note << "unresolved cited ids: " << flow_report.unresolved_ids << "\n";
    note << "forward citations dropped: " << flow_report.dropped_forward << "\n";
    write_text(cfg.out / "flows_report.txt", note.str());
  }
}

namespace {

std::vector<BurstBar> load_burst_bars(const PipelineConfig& cfg) {
  auto in = require_artifact(cfg, "burst_bars.tsv", "burst");
  std::vector<BurstBar> bars;
  for (auto& row : read_tsv(in)) {
    if (row.size() < 6 || row[0] == "term") continue;
    BurstBar bar;
    bar.term = row[0];
    bar.source = row[1] == "funding" ? BurstSource::funding
                                     : BurstSource::publication;
    long long a = 0, b = 0;
    parse_long(row[2], a);
    parse_long(row[3], b);
    bar.start_year = static_cast<int>(a);
    bar.end_year = static_cast<int>(b);
    bar.height = std::stod(row[4]);
    bar.color = row[5] == "co_burst" ? BarColorClass::co_burst
                : row[5] == "funding" ? BarColorClass::funding
                                      : BarColorClass::publication;
    bars.push_back(std::move(bar));
  }
  return bars;
}

Network load_network_artifact(const PipelineConfig& cfg) {
  auto nodes_in = require_artifact(cfg, "nodes.tsv", "network");
  auto edges_in = require_artifact(cfg, "edges.tsv", "network");
  Network net;
  std::map<std::string, std::uint32_t> index;
  for (auto& row : read_tsv(nodes_in)) {
    if (row.size() < 9 || row[0] == "label") continue;
    NodeAttrs n;
    n.label = row[0];
    long long v = 0;
    if (parse_long(row[1], v)) n.papers = static_cast<long>(v);
    if (parse_long(row[2], v)) n.citations = static_cast<long>(v);
    if (parse_long(row[3], v)) n.first_year = static_cast<int>(v);
    if (!row[4].empty()) n.lat = std::stod(row[4]);
    if (!row[5].empty()) n.lon = std::stod(row[5]);
    if (!row[7].empty()) n.x = std::stod(row[7]);
    if (!row[8].empty()) n.y = std::stod(row[8]);
    index[n.label] = static_cast<std::uint32_t>(net.nodes.size());
    net.nodes.push_back(std::move(n));
  }
  for (auto& row : read_tsv(edges_in)) {
    if (row.size() < 3 || row[0] == "source") continue;
    auto a = index.find(row[0]);
    auto b = index.find(row[1]);
    if (a == index.end() || b == index.end()) continue;
    long long w = 0;
    parse_long(row[2], w);
    net.edges[{std::min(a->second, b->second),
               std::max(a->second, b->second)}] = w;
  }
  return net;
}

std::vector<CitationFlow> load_flows(const PipelineConfig& cfg) {
  auto in = require_artifact(cfg, "flows.tsv", "converge");
  std::vector<CitationFlow> flows;
  for (auto& row : read_tsv(in)) {
    if (row.size() < 5 || row[0] == "source_topic") continue;
    CitationFlow f;
    f.source_topic = row[0];
    long long v = 0;
    parse_long(row[1], v);
    f.source_year = static_cast<int>(v);
    f.target_topic = row[2];
    parse_long(row[3], v);
    f.target_year = static_cast<int>(v);
    parse_long(row[4], v);
    f.count = static_cast<long>(v);
    flows.push_back(std::move(f));
  }
  return flows;
}

std::vector<OverlaySymbol> load_overlay(const PipelineConfig& cfg,
                                        const std::string& name) {
  auto in = require_artifact(cfg, name, "sciencemap");
  std::vector<OverlaySymbol> symbols;
  for (auto& row : read_tsv(in)) {
    if (row.size() < 5 || row[0] == "subd_id") continue;
    OverlaySymbol sym;
    sym.subd_id = row[0];
    sym.x = std::stod(row[1]);
    sym.y = std::stod(row[2]);
    sym.value = std::stod(row[3]);
    sym.radius = std::stod(row[4]);
    symbols.push_back(std::move(sym));
  }
  return symbols;
}

} // namespace

void run_render(const PipelineConfig& cfg) {
  Canvas canvas;

  auto bars = load_burst_bars(cfg);
  write_text(cfg.out / "burst_figure.svg", render_burst_figure(bars, canvas));

  auto net = load_network_artifact(cfg);
  NetworkRenderOptions opts;
  opts.label_min_citations = cfg.label_min_citations;

  // Force-directed figure: positions from the layout columns, no base map.
  write_text(cfg.out / "network_layout.svg",
             render_network_map(net, {}, canvas, opts));

  // Geospatial figure: Mercator positions for geocoded nodes over the base
  // map; nodes without coordinates are left out.
  auto basemap_in = open_input(cfg.basemap, "base map");
  auto geo_paths = read_basemap(basemap_in);
  std::vector<GeoPath> projected;
  projected.reserve(geo_paths.size());
  for (const auto& path : geo_paths) {
    GeoPath p;
    p.reserve(path.size());
    for (const auto& [lat, lon] : path) p.push_back(mercator(lat, lon));
    projected.push_back(std::move(p));
  }
  Network geo_net;
  {
    std::vector<bool> keep(net.nodes.size());
    for (size_t i = 0; i < net.nodes.size(); ++i)
      keep[i] = net.nodes[i].lat.has_value() && net.nodes[i].lon.has_value();
    std::vector<std::uint32_t> remap(net.nodes.size());
    for (size_t i = 0; i < net.nodes.size(); ++i) {
      if (!keep[i]) continue;
      remap[i] = static_cast<std::uint32_t>(geo_net.nodes.size());
      NodeAttrs n = net.nodes[i];
      auto [mx, my] = mercator(*n.lat, *n.lon);
      n.x = mx;
      n.y = my;
      geo_net.nodes.push_back(std::move(n));
    }
    for (const auto& [e, w] : net.edges)
      if (keep[e.first] && keep[e.second])
        geo_net.edges[{remap[e.first], remap[e.second]}] = w;
  }
  write_text(cfg.out / "network_map.svg",
             render_network_map(geo_net, projected, canvas, opts));

  auto flows = load_flows(cfg);
  write_text(cfg.out / "convergence_arcs.svg",
             render_convergence_arcs(flows, canvas));

  auto cls = load_cls(cfg);
  int mid = cfg.window_start + (cfg.window_end - cfg.window_start) / 2;
  const std::pair<int, int> slices[2] = {{cfg.window_start, mid},
                                         {mid + 1, cfg.window_end}};
  for (const auto& [s0, s1] : slices) {
    std::string stem = std::to_string(s0) + "_" + std::to_string(s1);
    auto symbols = load_overlay(cfg, "overlay_" + stem + ".tsv");
    write_text(cfg.out / ("science_overlay_" + stem + ".svg"),
               render_science_overlay(symbols, cls, canvas));
  }

  std::ostringstream legends;
  write_tsv_row(legends, {"figure", "class", "color", "meaning"});
  write_legend_table(legends, "burst_figure",
                     {{{"funding", canvas.funding_color, "burst in funding awards"}},
                      {{"publication", canvas.publication_color,
                        "burst in publications"}},
                      {{"co_burst", canvas.co_burst_color,
                        "burst in both sources"}}});
  std::vector<std::array<std::string, 3>> topic_rows;
  for (const auto& [topic, color] : canvas.topic_colors)
    topic_rows.push_back({topic, color, "citations from " + topic});
  write_legend_table(legends, "convergence_arcs", topic_rows);
  write_legend_table(
      legends, "network_map",
      {{{"node_area", "", "circle area proportional to citations"}},
       {{"node_fill", "", "darker fill = earlier first publication"}},
       {{"edge_width", "", "width proportional to co-authored papers"}}});
  write_text(cfg.out / "legends.tsv", legends.str());
}

void run_report(const PipelineConfig& cfg) {
  auto pubs = load_publications(cfg);
  auto awards = load_awards(cfg);
  std::ostringstream rep;
  rep << "corpus summary (" << cfg.window_start << "-" << cfg.window_end
      << ")\n";
  rep << "=================================\n";
  rep << "publications: " << pubs.size() << "\n";
  rep << "awards: " << awards.size() << "\n\n";

  rep << "records per topic\n";
  for (const auto& q : cfg.pub_queries) {
    size_t np = 0;
    for (const auto& p : pubs)
      if (p.topics.count(q.label)) ++np;
    size_t na = 0;
    long long amount = 0;
    for (const auto& a : awards)
      if (a.topics.count(q.label)) {
        ++na;
        amount += a.amount;
      }
    rep << "  " << q.label << ": " << np << " publications, " << na
        << " awards ($" << amount << ")\n";
  }
  rep << "\n";

  rep << "unique names per topic\n";
  for (const auto& q : cfg.pub_queries) {
    std::set<std::string> authors, keywords, investigators, award_keywords;
    for (const auto& p : pubs) {
      if (!p.topics.count(q.label)) continue;
      authors.insert(p.authors.begin(), p.authors.end());
      for (const auto& kw : p.author_keywords)
        keywords.insert(normalize_term(kw));
    }
    for (const auto& a : awards) {
      if (!a.topics.count(q.label)) continue;
      investigators.insert(a.investigators.begin(), a.investigators.end());
      for (const auto& kw : a.keywords)
        award_keywords.insert(normalize_term(kw));
    }
    rep << "  " << q.label << ": " << authors.size() << " authors, "
        << keywords.size() << " raw keyword spellings, "
        << investigators.size() << " investigators\n";
  }
  rep << "\n";

  {
    auto in = require_artifact(cfg, "overlaps.tsv", "converge");
    rep << "overlaps\n";
    for (auto& row : read_tsv(in)) {
      if (row.size() < 3 || row[0] == "kind") continue;
      rep << "  " << row[0] << " " << row[1] << ": " << row[2] << "\n";
    }
    rep << "\n";
  }
  {
    auto in = require_artifact(cfg, "bursts.tsv", "burst");
    rep << "top bursts\n";
    for (auto& row : read_tsv(in)) {
      if (row.size() < 7 || row[0] == "term") continue;
      rep << "  " << row[1] << " '" << row[0] << "' " << row[2] << "-"
          << row[3] << " weight " << row[4]
          << (row[6] == "true" ? " (co-burst)" : "") << "\n";
    }
    rep << "\n";
  }
  {
    auto net = load_network_artifact(cfg);
    auto comp = components(net);
    rep << "co-author network (filtered)\n";
    rep << "  nodes: " << net.node_count() << ", edges: " << net.edge_count()
        << "\n";
    rep << "  components: " << comp.report.component_count
        << ", isolates: " << comp.report.isolate_count
        << ", largest: " << comp.report.largest_component_size << "\n";
    rep << "  average degree: " << format_fixed(comp.report.avg_degree, 2)
        << "\n\n";
  }
  {
    auto in = require_artifact(cfg, "cities.tsv", "network");
    rep << "top cities by citations\n";
    size_t shown = 0;
    for (auto& row : read_tsv(in)) {
      if (row.size() < 2 || row[0] == "city") continue;
      if (++shown > 10) break;
      rep << "  " << row[0] << ": " << row[1] << "\n";
    }
    rep << "\n";
  }
  {
    auto in = require_artifact(cfg, "trends.tsv", "converge");
    rep << "growth trends (OLS slope, two-sided p)\n";
    for (auto& row : read_tsv(in)) {
      if (row.size() < 5 || row[0] == "record_type") continue;
      rep << "  " << row[0] << " " << row[1] << ": slope " << row[2]
          << "/year, p " << row[3] << "\n";
    }
  }
  write_text(cfg.out / "report.txt", rep.str());
}

void run_all(const PipelineConfig& cfg) {
  run_ingest(cfg);
  run_keywords(cfg);
  run_burst(cfg);
  run_network(cfg);
  run_sciencemap(cfg);
  run_converge(cfg);
  run_render(cfg);
  run_report(cfg);
}

} // namespace scimap
