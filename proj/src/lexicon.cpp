#include "scimap/lexicon.hpp"

#include <algorithm>
#include <map>

#include "scimap/strings.hpp"

namespace scimap {

namespace {

bool is_alnum_ascii(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

// Lowercased ASCII fold of the input.
std::string clean(std::string_view term) {
  return lower_ascii(ascii_fold(term));
}

} // namespace

Fingerprint key_collision_fingerprint(std::string_view term) {
  std::string folded = clean(term);
  std::string kept;
  kept.reserve(folded.size());
  for (char c : folded) {
    if (is_alnum_ascii(c) || c == ' ' || c == '\t' || c == '\n') kept += c;
  }
  std::vector<std::string> tokens;
  for (auto& tok : split(collapse_whitespace(kept), ' '))
    if (!tok.empty()) tokens.push_back(tok);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return Fingerprint{join(tokens, " "), FingerprintMethod::key_collision, 0};
}

Fingerprint ngram_fingerprint(std::string_view term, int n) {
  std::string folded = clean(term);
  std::string kept;
  for (char c : folded)
    if (is_alnum_ascii(c)) kept += c;
  if (n < 1 || kept.size() <= static_cast<size_t>(n)) {
    return Fingerprint{kept, FingerprintMethod::ngram, n};
  }
  std::vector<std::string> grams;
  for (size_t i = 0; i + n <= kept.size(); ++i)
    grams.push_back(kept.substr(i, n));
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
  return Fingerprint{join(grams, ""), FingerprintMethod::ngram, n};
}

std::vector<TermCluster>
cluster_terms(const std::vector<std::pair<std::string, long>>& term_freqs,
              FingerprintMethod method, int n) {
  std::map<std::string, std::vector<std::pair<std::string, long>>> groups;
  for (const auto& [term, freq] : term_freqs) {
    Fingerprint fp = method == FingerprintMethod::key_collision
                         ? key_collision_fingerprint(term)
                         : ngram_fingerprint(term, n);
    groups[fp.value].emplace_back(term, freq);
  }
  std::vector<TermCluster> clusters;
  clusters.reserve(groups.size());
  for (auto& [fp, variants] : groups) {
    std::sort(variants.begin(), variants.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    TermCluster c;
    c.representative = variants.front().first;
    c.variants = std::move(variants);
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    return a.representative < b.representative;
  });
  return clusters;
}

std::vector<TermCluster>
apply_merge_overrides(std::vector<TermCluster> clusters,
                      const std::vector<MergeOverride>& overrides) {
  std::map<std::string, std::string> canonical_of;
  for (const auto& ov : overrides) {
    auto [it, inserted] = canonical_of.emplace(ov.variant, ov.canonical);
    if (!inserted && it->second != ov.canonical) {
      throw ConfigError("conflicting merge overrides for variant '" +
                        ov.variant + "': '" + it->second + "' vs '" +
                        ov.canonical + "'");
    }
  }
  if (canonical_of.empty()) return clusters;
  std::set<std::string> canonical_names;
  for (const auto& [variant, canonical] : canonical_of)
    canonical_names.insert(canonical);

  // canonical -> merged variant list. A cluster joins a bucket when it holds
  // a listed variant or the canonical name itself.
  std::map<std::string, std::vector<std::pair<std::string, long>>> merged;
  std::vector<TermCluster> untouched;
  for (auto& cluster : clusters) {
    std::string canonical;
    for (const auto& [variant, freq] : cluster.variants) {
      auto it = canonical_of.find(variant);
      if (it != canonical_of.end()) {
        canonical = it->second;
        break;
      }
      if (canonical_names.count(variant)) {
        canonical = variant;
        break;
      }
    }
    if (canonical.empty()) {
      untouched.push_back(std::move(cluster));
    } else {
      auto& bucket = merged[canonical];
      bucket.insert(bucket.end(), cluster.variants.begin(),
                    cluster.variants.end());
    }
  }
  // Variants never seen in any cluster become singletons under their
  // canonical name.
  std::map<std::string, std::vector<std::string>> pending;
  for (const auto& ov : overrides) {
    bool seen = false;
    for (const auto& [canonical, variants] : merged)
      for (const auto& [v, f] : variants)
        if (v == ov.variant) seen = true;
    for (const auto& c : untouched)
      for (const auto& [v, f] : c.variants)
        if (v == ov.variant) seen = true;
    if (!seen) pending[ov.canonical].push_back(ov.variant);
  }
  for (auto& [canonical, variants] : pending)
    for (auto& v : variants)
      merged[canonical].emplace_back(v, 0);

  for (auto& [canonical, variants] : merged) {
    std::sort(variants.begin(), variants.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    TermCluster c;
    c.representative = canonical;
    bool canonical_present = false;
    for (const auto& [v, f] : variants)
      if (v == canonical) canonical_present = true;
    if (!canonical_present) variants.emplace_back(canonical, 0);
    c.variants = std::move(variants);
    untouched.push_back(std::move(c));
  }
  std::sort(untouched.begin(), untouched.end(),
            [](const auto& a, const auto& b) {
              return a.representative < b.representative;
            });
  return untouched;
}

std::vector<std::string> tokenize_for_match(std::string_view text) {
  std::string lowered = lower_ascii(text);
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : lowered) {
    if (is_alnum_ascii(c) || c == '-') {
      cur += c;
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string normalize_term(std::string_view term) {
  return join(tokenize_for_match(term), " ");
}

Lexicon Lexicon::from_terms(const std::vector<std::string>& raw_terms) {
  Lexicon lex;
  for (const auto& raw : raw_terms) {
    auto tokens = tokenize_for_match(raw);
    if (tokens.empty()) continue;
    lex.max_term_length = std::max(lex.max_term_length,
                                   static_cast<int>(tokens.size()));
    lex.terms.insert(join(tokens, " "));
  }
  return lex;
}

std::vector<std::string> maxmatch_extract(std::string_view text,
                                          const Lexicon& lexicon) {
  std::vector<std::string> out;
  if (lexicon.terms.empty()) return out;
  auto tokens = tokenize_for_match(text);
  size_t i = 0;
  while (i < tokens.size()) {
    size_t remaining = tokens.size() - i;
    size_t max_w = std::min<size_t>(lexicon.max_term_length, remaining);
    bool emitted = false;
    for (size_t w = max_w; w >= 1; --w) {
      std::string candidate = tokens[i];
      for (size_t k = 1; k < w; ++k) {
        candidate += ' ';
        candidate += tokens[i + k];
      }
      if (lexicon.contains(candidate)) {
        out.push_back(std::move(candidate));
        i += w;
        emitted = true;
        break;
      }
    }
    if (!emitted) ++i;
  }
  return out;
}

} // namespace scimap
