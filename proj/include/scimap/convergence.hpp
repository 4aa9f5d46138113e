#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "scimap/corpus.hpp"

namespace scimap {

struct OverlapReport {
  std::map<std::string, size_t> record_totals;
  std::map<std::string, size_t> keyword_totals;
  std::map<std::pair<std::string, std::string>, size_t> record_pairs;
  std::map<std::pair<std::string, std::string>, size_t> keyword_pairs;
  size_t record_all = 0;  // items carrying every label
  size_t keyword_all = 0;
};

// Counts items carrying both (and all) labels, for record ids and for
// normalized keyword sets.
OverlapReport set_overlaps(
    const std::map<std::string, std::set<std::string>>& record_sets,
    const std::map<std::string, std::set<std::string>>& keyword_sets);

// Builds per-topic record-id and normalized-keyword sets from tagged records.
std::map<std::string, std::set<std::string>>
topic_record_sets(const std::vector<Publication>& pubs);
std::map<std::string, std::set<std::string>>
topic_keyword_sets(const std::vector<Publication>& pubs);
std::map<std::string, std::set<std::string>>
topic_record_sets(const std::vector<Award>& awards);
std::map<std::string, std::set<std::string>>
topic_keyword_sets(const std::vector<Award>& awards);

struct CitationFlow {
  std::string source_topic;
  int source_year = 0;
  std::string target_topic;
  int target_year = 0; // always <= source_year
  long count = 0;
};

struct FlowReport {
  std::vector<CitationFlow> flows; // sorted, zero-count flows omitted
  size_t unresolved_ids = 0;
  size_t dropped_forward = 0; // citations pointing to a later year
};

// Counts citations from X-tagged papers to Y-tagged papers (X != Y) per
// (source year, target year) pair. Dual-tagged papers contribute to both
// directions.
FlowReport intercitation_matrix(const std::vector<Publication>& pubs);

struct TrendResult {
  double slope = 0.0;   // records per year
  double p_value = 1.0; // two-sided t-test on the OLS slope, n-2 df
  int n_years = 0;
};

// Ordinary least squares of count on year index. Requires >= 3 years.
TrendResult trend_test(const std::vector<double>& annual_counts);

// Regularized incomplete beta function, exposed for the significance test.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value for a t statistic with df degrees of freedom.
double t_test_p_value(double t, int df);

} // namespace scimap
