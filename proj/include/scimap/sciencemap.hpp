#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "scimap/corpus.hpp"

namespace scimap {

class LoadError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two-level discipline classification: venues map fractionally onto
// positioned subdisciplines, which roll up to labeled, colored disciplines.
// The special Multidisciplinary and Unclassified buckets always exist.
struct Classification {
  struct Subdiscipline {
    double x = 0.0;
    double y = 0.0;
    std::string discipline_id;
    bool has_position = false;
  };
  struct Discipline {
    std::string name;
    std::string color; // hex
  };

  static constexpr const char* kMultidisciplinary = "multidisciplinary";
  static constexpr const char* kUnclassified = "unclassified";

  // normalized venue -> [(subdiscipline id, fraction)], fractions sum to 1
  std::map<std::string, std::vector<std::pair<std::string, double>>> venue_map;
  std::map<std::string, Subdiscipline> subdisciplines;
  std::map<std::string, Discipline> disciplines;
  std::map<std::string, std::set<std::string>> keyword_map; // subd -> terms

  static std::string normalize_venue(std::string_view venue);
};

// venues: (venue, subd_id, fraction); subdisciplines: (subd_id, x, y,
// discipline_id); disciplines: (discipline_id, name, color_hex);
// keywords (optional): (subd_id, term).
Classification load_classification(std::istream& venues,
                                   std::istream& subdisciplines,
                                   std::istream& disciplines,
                                   std::istream* keywords = nullptr);

struct ScienceLocation {
  std::string record_id;
  std::vector<std::pair<std::string, double>> fractions; // sum to 1
};

// Exact normalized-venue lookup; misses go to Unclassified with fraction 1.
ScienceLocation science_code_by_venue(const Publication& pub,
                                      const Classification& cls);

// Scores subdisciplines by term intersection; all maximal-score
// subdisciplines share the record equally. No overlap -> Unclassified.
ScienceLocation science_code_by_keywords(const std::string& record_id,
                                         const std::vector<std::string>& record_terms,
                                         const Classification& cls);

struct OverlaySymbol {
  std::string subd_id;
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;  // fractional record count
  double radius = 0.0; // radius_scale * sqrt(value): circle area encodes value
};

// Venue-codes records published within [slice_start, slice_end] and sums
// fractions per subdiscipline. Zero-value symbols are omitted; symbols for
// position-less subdisciplines (the special buckets, unless the table
// positions them) are skipped.
std::vector<OverlaySymbol> aggregate_overlay(const std::vector<Publication>& pubs,
                                             const Classification& cls,
                                             int slice_start, int slice_end,
                                             double radius_scale = 1.0);

enum class HistogramMetric { papers, citations };

// Rolls subdiscipline fractions up to parent disciplines. The citations
// metric weights each record's times_cited by its fractions. Every
// discipline appears, zero-filled when empty.
std::map<std::string, double>
discipline_histogram(const std::vector<Publication>& pubs,
                     const Classification& cls, HistogramMetric metric);

} // namespace scimap
