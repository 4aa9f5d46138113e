#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scimap {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class FingerprintMethod { key_collision, ngram };

struct Fingerprint {
  std::string value;
  FingerprintMethod method = FingerprintMethod::key_collision;
  int n = 0; // n-gram size, ngram method only
  bool operator==(const Fingerprint&) const = default;
};

// Lowercase, fold accents, strip punctuation, sort and dedupe tokens.
Fingerprint key_collision_fingerprint(std::string_view term);

// Character n-grams of the cleaned string, sorted, deduped, concatenated.
// When n exceeds the cleaned length the fingerprint is the cleaned string.
Fingerprint ngram_fingerprint(std::string_view term, int n);

struct TermCluster {
  std::string representative;
  std::vector<std::pair<std::string, long>> variants; // (term, frequency)
};

// Groups terms by identical fingerprint. Representative is the
// highest-frequency variant, ties broken lexicographically ascending.
// Clusters are returned sorted by representative.
std::vector<TermCluster>
cluster_terms(const std::vector<std::pair<std::string, long>>& term_freqs,
              FingerprintMethod method, int n = 2);

struct MergeOverride {
  std::string variant;
  std::string canonical;
};

// Merges clusters containing a listed variant under the given canonical
// representative. Conflicting overrides for one variant raise ConfigError.
std::vector<TermCluster>
apply_merge_overrides(std::vector<TermCluster> clusters,
                      const std::vector<MergeOverride>& overrides);

struct Lexicon {
  std::set<std::string> terms; // normalized: lowercase, single-spaced
  int max_term_length = 0;     // tokens of the longest term

  static Lexicon from_terms(const std::vector<std::string>& raw_terms);
  bool contains(const std::string& normalized_term) const {
    return terms.count(normalized_term) > 0;
  }
};

// Lowercases and splits on any character that is not a letter, digit or
// hyphen. Hyphens stay inside tokens.
std::vector<std::string> tokenize_for_match(std::string_view text);

// Tokenize + join with single spaces: the normal form used for lexicon
// lookups and cross-source term comparison.
std::string normalize_term(std::string_view term);

// Greedy longest-leftmost segmentation of `text` against the lexicon.
// Emitted spans never overlap; terms are returned in order of occurrence.
std::vector<std::string> maxmatch_extract(std::string_view text,
                                          const Lexicon& lexicon);

} // namespace scimap
