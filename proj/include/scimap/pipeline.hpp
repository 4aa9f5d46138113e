#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scimap/burst.hpp"
#include "scimap/corpus.hpp"

namespace scimap {

// A stage was invoked before the stage that produces its inputs.
class DependencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad configuration key or value, or a missing referenced path.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  std::filesystem::path config_dir; // keys with relative paths resolve here

  std::filesystem::path wos;
  std::filesystem::path awards;
  std::filesystem::path exclusions; // optional
  std::filesystem::path aliases;    // optional
  std::filesystem::path merges;     // optional
  std::filesystem::path gazetteer;
  std::filesystem::path basemap;
  std::filesystem::path cls_venues;
  std::filesystem::path cls_subdisciplines;
  std::filesystem::path cls_disciplines;
  std::filesystem::path cls_keywords; // optional
  std::filesystem::path out = "out";

  int window_start = 1998;
  int window_end = 2017;
  std::vector<TopicQuery> pub_queries;
  std::vector<TopicQuery> award_queries;

  BurstParams burst;
  size_t top_n = 15;

  long min_cited = 1;
  long min_edge_weight = 1;
  bool drop_isolates = true;
  std::string network_topic; // empty = all records
  std::optional<std::uint64_t> seed;
  int layout_iterations = 100;
  long label_min_citations = 100;

  // Parses the flat key=value file. Unknown keys raise ValidationError.
  static PipelineConfig load(const std::filesystem::path& file);
  void validate() const; // path existence, seed presence, window sanity
};

// Stage entry points; each reads prior artifacts from config.out and writes
// its own. Throws DependencyError / ValidationError / FormatError.
void run_ingest(const PipelineConfig& cfg);
void run_keywords(const PipelineConfig& cfg);
void run_burst(const PipelineConfig& cfg);
void run_network(const PipelineConfig& cfg);
void run_sciencemap(const PipelineConfig& cfg);
void run_converge(const PipelineConfig& cfg);
void run_render(const PipelineConfig& cfg);
void run_report(const PipelineConfig& cfg);
void run_all(const PipelineConfig& cfg);

} // namespace scimap
