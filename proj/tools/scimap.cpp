#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scimap/lexicon.hpp"
#include "scimap/pipeline.hpp"
#include "scimap/render.hpp"
#include "scimap/sciencemap.hpp"
#include "scimap/strings.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitDependency = 3;

struct Flags {
  std::string config;
  std::string out;
  std::string window;
  std::string topics;
  double gamma = -1.0;
  double scaling = -1.0;
  int states = -1;
  int min_length = -1;
  long long seed = -1;
  long min_cited = -1;
  long min_edge_weight = -1;
  long top_n = -1;
};

scimap::PipelineConfig make_config(const Flags& flags) {
  std::string config_path = flags.config;
  if (config_path.empty()) {
    if (const char* env = std::getenv("SCIMAP_CONFIG")) config_path = env;
  }
  if (config_path.empty())
    throw scimap::ValidationError(
        "no config file: pass --config or set SCIMAP_CONFIG");
  auto cfg = scimap::PipelineConfig::load(config_path);
  if (!flags.out.empty()) cfg.out = flags.out;
  if (!flags.window.empty()) {
    auto parts = scimap::split(flags.window, ':');
    long long a = 0, b = 0;
    if (parts.size() != 2 || !scimap::parse_long(parts[0], a) ||
        !scimap::parse_long(parts[1], b))
      throw scimap::ValidationError("invalid --window, expected START:END");
    cfg.window_start = static_cast<int>(a);
    cfg.window_end = static_cast<int>(b);
  }
  if (!flags.topics.empty()) {
    cfg.pub_queries.clear();
    for (const auto& entry : scimap::split(flags.topics, ';')) {
      auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw scimap::ValidationError(
            "invalid --topics entry, expected LABEL=term|term: " + entry);
      scimap::TopicQuery q;
      q.label = scimap::trim(entry.substr(0, eq));
      for (const auto& term : scimap::split(entry.substr(eq + 1), '|')) {
        std::string t = scimap::trim(term);
        if (!t.empty()) q.terms.push_back(t);
      }
      if (q.label.empty() || q.terms.empty())
        throw scimap::ValidationError("invalid --topics entry: " + entry);
      cfg.pub_queries.push_back(std::move(q));
    }
  }
  if (flags.gamma >= 0.0) cfg.burst.gamma = flags.gamma;
  if (flags.scaling >= 0.0) cfg.burst.s = flags.scaling;
  if (flags.states >= 1) cfg.burst.num_burst_states = flags.states;
  if (flags.min_length >= 1) cfg.burst.min_burst_length = flags.min_length;
  if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.min_cited >= 0) cfg.min_cited = flags.min_cited;
  if (flags.min_edge_weight >= 0) cfg.min_edge_weight = flags.min_edge_weight;
  if (flags.top_n >= 1) cfg.top_n = static_cast<size_t>(flags.top_n);
  cfg.validate();
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"scimap: publication/funding burst, network, science-map and "
               "convergence pipeline"};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--config", flags.config,
                 "pipeline config file (default: $SCIMAP_CONFIG)");
  app.add_option("--out", flags.out, "output directory (overrides config)");
  app.add_option("--window", flags.window, "analysis window, e.g. 1998:2017");
  app.add_option("--topics", flags.topics,
                 "topic queries, LABEL=term|term;LABEL2=...");
  app.add_option("--gamma", flags.gamma, "burst transition cost multiplier");
  app.add_option("--scaling", flags.scaling, "burst density scaling");
  app.add_option("--states", flags.states, "burst states above base");
  app.add_option("--min-length", flags.min_length, "minimum burst years");
  app.add_option("--seed", flags.seed, "layout random seed");
  app.add_option("--min-cited", flags.min_cited,
                 "network node citation threshold");
  app.add_option("--min-edge-weight", flags.min_edge_weight,
                 "network edge weight threshold");
  app.add_option("--top-n", flags.top_n, "bursts kept per source");

  struct Stage {
    const char* name;
    const char* help;
    void (*run)(const scimap::PipelineConfig&);
  };
  const Stage stages[] = {
      {"ingest", "parse, window-filter, exclude and topic-tag records",
       scimap::run_ingest},
      {"keywords", "cluster keyword variants and extract award terms",
       scimap::run_keywords},
      {"burst", "detect and rank bursts, find co-bursts, lay out bars",
       scimap::run_burst},
      {"network", "extract, filter, lay out and geocode the co-author network",
       scimap::run_network},
      {"sciencemap", "science-code records and build overlays/histograms",
       scimap::run_sciencemap},
      {"converge", "overlaps, inter-citation flows and growth trends",
       scimap::run_converge},
      {"render", "emit SVG figures and legend tables", scimap::run_render},
      {"report", "write the text summary report", scimap::run_report},
      {"all", "run every stage in dependency order", scimap::run_all},
  };
  for (const auto& stage : stages)
    app.add_subcommand(stage.name, stage.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto cfg = make_config(flags);
    for (const auto& stage : stages) {
      if (app.got_subcommand(stage.name)) {
        stage.run(cfg);
        return kExitOk;
      }
    }
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const scimap::DependencyError& e) {
    std::cerr << "dependency error: " << e.what() << "\n";
    return kExitDependency;
  } catch (const scimap::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
