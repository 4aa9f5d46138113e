#include <doctest.h>

#include <algorithm>
#include <random>

#include "scimap/lexicon.hpp"

using namespace scimap;

TEST_CASE("key collision fingerprint normalizes the listed variants") {
  auto a = key_collision_fingerprint("Internet of Things (IoT)");
  CHECK(a.value == "internet iot of things");
  auto b = key_collision_fingerprint("IoT \xe2\x80\x93 Internet of Things");
  CHECK(b.value == a.value);
  // the near-miss singular form does NOT collide
  auto c = key_collision_fingerprint("internet of thing");
  CHECK(c.value != a.value);
  CHECK(key_collision_fingerprint("robotics").value == "robotics");
}

TEST_CASE("key collision fingerprint is idempotent") {
  const char* samples[] = {"Internet of Things (IoT)", "Big  DATA!",
                           "e-commerce", "Ñandú  grande", "a b a b"};
  for (const char* s : samples) {
    auto once = key_collision_fingerprint(s);
    auto twice = key_collision_fingerprint(once.value);
    CHECK(twice.value == once.value);
  }
}

TEST_CASE("ngram fingerprint") {
  // "París" -> cleaned "paris"; bigrams ar,is,pa,ri sorted
  CHECK(ngram_fingerprint("París", 2).value == "arispari");
  CHECK(ngram_fingerprint("AI", 2).value == "ai");
  CHECK(ngram_fingerprint("a b", 1).value == "ab");
  // n beyond the cleaned length: the cleaned string itself
  CHECK(ngram_fingerprint("ab", 5).value == "ab");
}

TEST_CASE("cluster_terms groups by fingerprint") {
  std::vector<std::pair<std::string, long>> terms = {
      {"Internet of Things (IoT)", 5},
      {"IoT \xe2\x80\x93 Internet of Things", 3},
      {"robotics", 7},
      {"internet of thing", 2},
  };
  auto clusters = cluster_terms(terms, FingerprintMethod::key_collision);
  REQUIRE(clusters.size() == 3);
  const TermCluster* iot = nullptr;
  for (const auto& c : clusters)
    if (c.variants.size() == 2) iot = &c;
  REQUIRE(iot != nullptr);
  CHECK(iot->representative == "Internet of Things (IoT)"); // higher frequency
}

TEST_CASE("cluster partition and tie rule") {
  std::vector<std::pair<std::string, long>> terms = {
      {"alpha beta", 2}, {"beta alpha", 2}, {"gamma", 1}};
  auto clusters = cluster_terms(terms, FingerprintMethod::key_collision);
  size_t total = 0;
  for (const auto& c : clusters) total += c.variants.size();
  CHECK(total == terms.size());
  // equal frequencies: lexicographically smaller representative
  for (const auto& c : clusters)
    if (c.variants.size() == 2) CHECK(c.representative == "alpha beta");
}

TEST_CASE("apply_merge_overrides") {
  std::vector<std::pair<std::string, long>> terms = {
      {"Internet of Things (IoT)", 5},
      {"internet of thing", 2},
      {"robotics", 7},
  };
  auto clusters = cluster_terms(terms, FingerprintMethod::key_collision);
  REQUIRE(clusters.size() == 3);

  SUBCASE("merge joins the near-miss under the canonical name") {
    auto merged = apply_merge_overrides(
        clusters, {{"internet of thing", "Internet of Things (IoT)"}});
    REQUIRE(merged.size() == 2);
    const TermCluster* iot = nullptr;
    for (const auto& c : merged)
      if (c.representative == "Internet of Things (IoT)") iot = &c;
    REQUIRE(iot != nullptr);
    CHECK(iot->variants.size() == 2);
  }
  SUBCASE("empty overrides are the identity") {
    auto merged = apply_merge_overrides(clusters, {});
    CHECK(merged.size() == clusters.size());
  }
  SUBCASE("unknown variant becomes a singleton under the canonical") {
    auto merged = apply_merge_overrides(clusters, {{"swarm", "robotics"}});
    const TermCluster* rob = nullptr;
    for (const auto& c : merged)
      if (c.representative == "robotics") rob = &c;
    REQUIRE(rob != nullptr);
    CHECK(rob->variants.size() == 2); // robotics + swarm
  }
  SUBCASE("conflicting overrides raise ConfigError") {
    CHECK_THROWS_AS(apply_merge_overrides(clusters, {{"x", "a"}, {"x", "b"}}),
                    ConfigError);
  }
}

TEST_CASE("maxmatch prefers the longest term") {
  Lexicon lex = Lexicon::from_terms({"artificial intelligence", "intelligence"});
  auto terms = maxmatch_extract(
      "new results on artificial intelligence methods", lex);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == "artificial intelligence");
}

TEST_CASE("maxmatch trivial cases") {
  CHECK(maxmatch_extract("anything at all", Lexicon{}).empty());
  Lexicon lex = Lexicon::from_terms({"internet of things", "internet"});
  auto terms = maxmatch_extract("internet of things security", lex);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == "internet of things");
}

TEST_CASE("maxmatch keeps hyphenated tokens whole") {
  Lexicon lex = Lexicon::from_terms({"e-commerce"});
  auto terms = maxmatch_extract("trends in E-Commerce today", lex);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == "e-commerce");
}

namespace {

// Independent greedy longest-leftmost segmentation over token vectors.
std::vector<std::string> oracle_maxmatch(const std::vector<std::string>& tokens,
                                         const std::set<std::string>& lexicon,
                                         size_t max_len) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t best = 0;
    std::string best_term;
    for (size_t w = 1; w <= max_len && i + w <= tokens.size(); ++w) {
      std::string joined;
      for (size_t k = 0; k < w; ++k) {
        if (k) joined += ' ';
        joined += tokens[i + k];
      }
      if (lexicon.count(joined)) {
        best = w;
        best_term = joined;
      }
    }
    if (best == 0) {
      ++i;
    } else {
      out.push_back(best_term);
      i += best;
    }
  }
  return out;
}

} // namespace

TEST_CASE("maxmatch matches the oracle on 500 random cases") {
  std::mt19937 rng(7);
  const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta",
                                          "epsilon", "zeta"};
  for (int iter = 0; iter < 500; ++iter) {
    // random lexicon of 1..6 terms, each 1..3 tokens
    std::set<std::string> lex_terms;
    int n_terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < n_terms; ++t) {
      int len = 1 + static_cast<int>(rng() % 3);
      std::string term;
      for (int k = 0; k < len; ++k) {
        if (k) term += ' ';
        term += vocab[rng() % vocab.size()];
      }
      lex_terms.insert(term);
    }
    size_t max_len = 0;
    for (const auto& t : lex_terms) {
      size_t len = static_cast<size_t>(
          std::count(t.begin(), t.end(), ' ') + 1);
      max_len = std::max(max_len, len);
    }
    // random text of 0..12 tokens
    std::vector<std::string> tokens;
    int n_tok = static_cast<int>(rng() % 13);
    std::string text;
    for (int k = 0; k < n_tok; ++k) {
      tokens.push_back(vocab[rng() % vocab.size()]);
      if (k) text += ' ';
      text += tokens.back();
    }
    Lexicon lex =
        Lexicon::from_terms({lex_terms.begin(), lex_terms.end()});
    auto got = maxmatch_extract(text, lex);
    auto want = oracle_maxmatch(tokens, lex_terms, max_len);
    CHECK(got == want);
    // every emitted term is in the lexicon
    for (const auto& term : got) CHECK(lex_terms.count(term) == 1);
  }
}

TEST_CASE("maxmatch spans are disjoint and ordered") {
  Lexicon lex = Lexicon::from_terms({"a b", "b c", "c"});
  // "a b" consumes the b, so "b c" cannot also match
  auto terms = maxmatch_extract("a b c", lex);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == "a b");
  CHECK(terms[1] == "c");
}

TEST_CASE("normalize_term") {
  CHECK(normalize_term("  Machine   Learning ") == "machine learning");
  CHECK(normalize_term("E-Commerce!") == "e-commerce");
  CHECK(normalize_term("") == "");
}
