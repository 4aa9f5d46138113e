#pragma once

#include <set>
#include <string>
#include <vector>

namespace scimap {

// Yearly document stream for one term. Years are contiguous starting at
// first_year; d[t] is the total document count, r[t] the count of documents
// containing the term.
struct EventStream {
  std::string term;
  int first_year = 0;
  std::vector<long> d;
  std::vector<long> r;
};

struct BurstParams {
  double gamma = 1.0;        // transition-cost multiplier
  double s = 2.0;            // density scaling between states
  int num_burst_states = 1;  // states above base
  int min_burst_length = 1;  // years
};

enum class BurstSource { funding, publication };

struct Burst {
  std::string term;
  int start_year = 0;
  int end_year = 0;
  double weight = 0.0;
  int state_level = 1; // highest state reached during the burst
  BurstSource source = BurstSource::publication;
};

struct BurstSummary {
  std::string term;
  double total_weight = 0.0;
  std::vector<Burst> bursts;
  bool co_burst = false;
  BurstSource source = BurstSource::publication;
};

enum class BarColorClass { funding, publication, co_burst };

// Bar area (height x span length) equals the burst weight.
struct BurstBar {
  std::string term;
  BurstSource source = BurstSource::publication;
  int start_year = 0;
  int end_year = 0;
  double height = 0.0;
  BarColorClass color = BarColorClass::publication;
};

// One document's year and normalized term set; the unit from which streams
// are counted.
struct DocTerms {
  int year = 0;
  std::set<std::string> terms;
};

EventStream build_event_stream(const std::vector<DocTerms>& docs,
                               const std::string& term, int year_start,
                               int year_end);

// Negative binomial log-likelihood cost of emitting (r, d) at state `level`,
// with p_i = min(p0 * s^i, 1 - 1e-6). Zero when d == 0. The binomial
// coefficient is omitted: it is constant across states for fixed (r, d)
// and cancels in every comparison and weight difference.
double state_cost(int level, long r, long d, double p0, double s);

// Two-or-more-state automaton decoded by dynamic programming. Cost ties are
// broken in favor of the lexicographically smallest state sequence, i.e.
// lower states earlier. Deterministic.
std::vector<Burst> detect_bursts(const EventStream& stream,
                                 const BurstParams& params,
                                 BurstSource source);

// Sums weights of multi-burst terms, ranks by total weight (ties by term
// ascending) and keeps top_n. Original per-burst intervals are retained.
std::vector<BurstSummary> summarize_and_rank(const std::vector<Burst>& bursts,
                                             size_t top_n);

// A term co-bursts when it has intersecting burst intervals in both sources.
// Sets the co_burst flag on matching summaries in both lists.
std::set<std::string> find_cobursts(std::vector<BurstSummary>& funding,
                                    std::vector<BurstSummary>& publication);

// One bar per burst, height = weight / span years. Rows ordered by earliest
// burst start, then term, then source.
std::vector<BurstBar>
layout_burst_bars(const std::vector<BurstSummary>& summaries);

} // namespace scimap
