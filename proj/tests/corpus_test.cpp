#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "scimap/corpus.hpp"
#include "scimap/strings.hpp"

using namespace scimap;

namespace {

const char* kTwoRecordFile =
    "FN Thomson Reuters Web of Science\n"
    "VR 1.0\n"
    "UT WOS:1\n"
    "PY 2005\n"
    "TI A study of\n"
    "   something long\n"
    "AU Smith, J\n"
    "   Lee, K\n"
    "DE machine learning; robotics\n"
    "TC 7\n"
    "ER\n"
    "UT WOS:2\n"
    "PY 2006\n"
    "TI Another study\n"
    "ZZ ignored tag value\n"
    "ER\n"
    "EF\n";

} // namespace

TEST_CASE("wos parse: minimal record") {
  std::istringstream in("FN x\nVR 1.0\nUT A1\nPY 2001\nTI Hello\nER\nEF\n");
  auto result = parse_wos_tagged(in);
  REQUIRE(result.records.size() == 1);
  CHECK(result.errors.empty());
  const auto& p = result.records[0];
  CHECK(p.id == "A1");
  CHECK(p.year == 2001);
  CHECK(p.title == "Hello");
  CHECK(p.authors.empty());
  CHECK(p.author_keywords.empty());
  CHECK(p.cited_ids.empty());
  CHECK(p.times_cited == 0);
}

TEST_CASE("wos parse: hand-parsed two-record oracle") {
  std::istringstream in(kTwoRecordFile);
  auto result = parse_wos_tagged(in);
  REQUIRE(result.records.size() == 2);
  const auto& p = result.records[0];
  CHECK(p.authors == std::vector<std::string>{"Smith, J", "Lee, K"});
  CHECK(p.times_cited == 7);
  CHECK(p.title == "A study of something long"); // continuation joined
  CHECK(p.author_keywords ==
        std::vector<std::string>{"machine learning", "robotics"});
  CHECK(result.records[1].id == "WOS:2");
  CHECK(result.records[1].title == "Another study");
}

TEST_CASE("wos parse: record without UT is skipped with an error") {
  std::istringstream in(
      "FN x\nVR 1.0\nUT A1\nPY 2001\nER\nPY 2002\nTI No id\nER\nEF\n");
  auto result = parse_wos_tagged(in);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].id == "A1");
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].message == "record missing UT");
}

TEST_CASE("wos parse: malformed header") {
  std::istringstream bad1("XX nope\nVR 1.0\nEF\n");
  CHECK_THROWS_AS(parse_wos_tagged(bad1), FormatError);
  std::istringstream bad2("FN x\nVR 9.9\nEF\n");
  CHECK_THROWS_AS(parse_wos_tagged(bad2), FormatError);
}

TEST_CASE("wos parse: non-numeric PY or TC skips the record") {
  std::istringstream in(
      "FN x\nVR 1.0\nUT A1\nPY two-thousand\nER\nUT A2\nPY 2001\nTC lots\nER\n"
      "UT A3\nPY 2002\nER\nEF\n");
  auto result = parse_wos_tagged(in);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].id == "A3");
  CHECK(result.errors.size() == 2);
}

TEST_CASE("wos parse: continuation indent is configurable per file profile") {
  // a source that indents continuations with two spaces instead of three
  std::istringstream in(
      "FN x\nVR 1.0\nUT A1\nPY 2001\nAU Smith, J\n  Lee, K\nER\nEF\n");
  WosProfile two_spaces;
  two_spaces.continuation_indent = 2;
  auto result = parse_wos_tagged(in, two_spaces);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].authors ==
        std::vector<std::string>{"Smith, J", "Lee, K"});
}

TEST_CASE("wos parse: addresses carry the record year") {
  std::istringstream in(
      "FN x\nVR 1.0\nUT A1\nPY 2011\n"
      "C1 [Smith, J] Dept, Austin, TX, USA\n"
      "   Somewhere, Paris, , France\nER\nEF\n");
  auto result = parse_wos_tagged(in);
  REQUIRE(result.records.size() == 1);
  const auto& addrs = result.records[0].addresses;
  REQUIRE(addrs.size() == 2);
  CHECK(addrs[0].author == "Smith, J");
  CHECK(addrs[0].city == "Austin");
  CHECK(addrs[0].region == "TX");
  CHECK(addrs[0].country == "USA");
  CHECK(addrs[0].year == 2011);
  CHECK(addrs[1].author.empty()); // applies to all authors
  CHECK(addrs[1].city == "Paris");
}

namespace {

Publication random_publication(std::mt19937& rng, int i) {
  static const char* names[] = {"Smith, J", "Lee, K", "Zhang, Y", "Park, S"};
  static const char* venues[] = {"J ONE", "PROC TWO"};
  static const char* kws[] = {"alpha", "beta gamma", "delta"};
  Publication p;
  p.id = "WOS:" + std::to_string(1000 + i);
  p.year = 1998 + static_cast<int>(rng() % 20);
  p.title = "Title " + std::to_string(rng() % 100);
  p.abstract = "Abstract text " + std::to_string(rng() % 100);
  p.venue = venues[rng() % 2];
  size_t n_auth = rng() % 4;
  for (size_t a = 0; a < n_auth; ++a) p.authors.push_back(names[rng() % 4]);
  std::sort(p.authors.begin(), p.authors.end());
  p.authors.erase(std::unique(p.authors.begin(), p.authors.end()),
                  p.authors.end());
  for (const auto& a : p.authors)
    p.addresses.push_back(AddressEntry{a, "Austin", "TX", "USA", p.year});
  size_t n_kw = rng() % 3;
  for (size_t k = 0; k < n_kw; ++k) p.author_keywords.push_back(kws[rng() % 3]);
  p.times_cited = static_cast<long>(rng() % 50);
  if (rng() % 2) p.cited_ids.push_back("WOS:" + std::to_string(rng() % 1000));
  return p;
}

} // namespace

TEST_CASE("wos parse/serialize round trip is field identical") {
  std::mt19937 rng(11);
  std::vector<Publication> pubs;
  for (int i = 0; i < 40; ++i) pubs.push_back(random_publication(rng, i));
  std::ostringstream out;
  write_wos_tagged(out, pubs);
  std::istringstream in(out.str());
  auto result = parse_wos_tagged(in);
  CHECK(result.errors.empty());
  REQUIRE(result.records.size() == pubs.size());
  for (size_t i = 0; i < pubs.size(); ++i) CHECK(result.records[i] == pubs[i]);
}

TEST_CASE("nsf parse: amount with dollar sign and commas") {
  std::istringstream in(
      "AwardNumber,Title,StartDate,EndDate,AwardedAmountToDate,"
      "PrincipalInvestigator,Organization,Abstract\n"
      "100,T,09/01/2010,08/31/2021,\"$43,000,000\",\"Goodman, Erik\",MSU,A\n");
  auto result = parse_nsf_awards(in);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].amount == 43000000);
  CHECK(result.records[0].start_date < result.records[0].end_date);
  CHECK(result.records[0].investigators ==
        std::vector<std::string>{"Goodman, Erik"});
}

TEST_CASE("nsf parse: bad rows are skipped, good rows kept") {
  std::istringstream in(
      "AwardNumber,Title,StartDate,EndDate,AwardedAmountToDate,"
      "PrincipalInvestigator,Organization,Abstract\n"
      "1,T1,01/01/2000,12/31/2001,$10,P,O,A\n"
      "2,T2,13/45/2000,12/31/2001,$10,P,O,A\n"
      "3,T3,01/01/2002,12/31/2003,$20,P,O,A\n");
  auto result = parse_nsf_awards(in);
  CHECK(result.records.size() == 2);
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].id == "2");
}

TEST_CASE("nsf parse: missing required column is a format error") {
  std::istringstream in("AwardNumber,Title\n1,x\n");
  CHECK_THROWS_AS(parse_nsf_awards(in), FormatError);
}

TEST_CASE("awards csv round trip") {
  Award a;
  a.id = "42";
  a.title = "On robots, and \"things\"";
  a.abstract = "Multi\nline";
  a.start_date = {1999, 6, 1};
  a.end_date = {2004, 8, 31};
  a.amount = 1234567;
  a.investigators = {"Smith, J", "Lee, K"};
  a.organization = "MIT";
  std::ostringstream out;
  write_nsf_awards(out, {a});
  std::istringstream in(out.str());
  auto result = parse_nsf_awards(in);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0] == a);
}

TEST_CASE("filter_window on publications and awards") {
  Publication p18;
  p18.id = "P";
  p18.year = 2018;
  CHECK(filter_window(std::vector<Publication>{p18}, 1998, 2017).empty());

  Award kept; // 1991-2002 intersects 1998-2017
  kept.id = "K";
  kept.start_date = {1991, 7, 1};
  kept.end_date = {2002, 6, 30};
  Award dropped; // 1980-1990 is disjoint
  dropped.id = "D";
  dropped.start_date = {1980, 1, 1};
  dropped.end_date = {1990, 12, 31};
  auto out = filter_window(std::vector<Award>{kept, dropped}, 1998, 2017);
  REQUIRE(out.size() == 1);
  CHECK(out[0].id == "K");
}

TEST_CASE("filter_window is idempotent and commutes with exclusions") {
  std::mt19937 rng(5);
  std::vector<Publication> pubs;
  for (int i = 0; i < 60; ++i) {
    Publication p;
    p.id = "X" + std::to_string(i);
    p.year = 1990 + static_cast<int>(rng() % 35);
    pubs.push_back(p);
  }
  ExclusionList excl;
  excl.reason_by_id["X3"] = "r";
  excl.reason_by_id["X7"] = "r";
  auto once = filter_window(pubs, 1998, 2017);
  CHECK(filter_window(once, 1998, 2017) == once);
  auto a = apply_exclusions(filter_window(pubs, 1998, 2017), excl).records;
  auto b = filter_window(apply_exclusions(pubs, excl).records, 1998, 2017);
  CHECK(a == b);
}

TEST_CASE("apply_exclusions") {
  std::vector<Publication> pubs(10);
  for (int i = 0; i < 10; ++i) pubs[static_cast<size_t>(i)].id = "R" + std::to_string(i);
  ExclusionList excl;
  excl.reason_by_id["R2"] = "false positive";
  excl.reason_by_id["R5"] = "false positive";
  auto r = apply_exclusions(pubs, excl);
  CHECK(r.records.size() == 8);
  CHECK(r.removed == 2);

  ExclusionList absent;
  absent.reason_by_id["NOPE"] = "x";
  auto r2 = apply_exclusions(pubs, absent);
  CHECK(r2.records == pubs);
  CHECK(r2.removed == 0);

  auto r3 = apply_exclusions(pubs, ExclusionList{});
  CHECK(r3.records == pubs);
  CHECK(r3.removed == 0);
}

TEST_CASE("topic_tag whole-keyword matching") {
  Publication p;
  p.id = "P1";
  p.author_keywords = {"deep learning", "Artificial Intelligence"};
  std::vector<Publication> pubs{p};
  TopicQuery ai{"AI", {"artificial intelligence"}, true, false, false};
  topic_tag(pubs, {ai});
  CHECK(pubs[0].topics == std::set<std::string>{"AI"});
}

TEST_CASE("topic_tag multiple labels") {
  Publication p;
  p.id = "P1";
  p.author_keywords = {"IoT", "robotics"};
  std::vector<Publication> pubs{p};
  TopicQuery iot{"IoT", {"internet of things", "iot"}, true, false, false};
  TopicQuery rob{"robotics", {"robotics"}, true, false, false};
  topic_tag(pubs, {iot, rob});
  CHECK(pubs[0].topics == std::set<std::string>{"IoT", "robotics"});
}

namespace {

// Word-boundary scan oracle: every occurrence checked with a regex-style
// boundary test over the lowered strings.
bool oracle_word_bounded(const std::string& text, const std::string& term) {
  std::string t = lower_ascii(text), n = lower_ascii(term);
  auto is_word = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  for (size_t pos = 0; pos + n.size() <= t.size(); ++pos) {
    if (t.compare(pos, n.size(), n) != 0) continue;
    bool left = pos == 0 || !is_word(t[pos - 1]);
    bool right = pos + n.size() == t.size() || !is_word(t[pos + n.size()]);
    if (left && right) return true;
  }
  return false;
}

} // namespace

TEST_CASE("topic_tag word boundaries in title search") {
  Publication riot;
  riot.id = "P1";
  riot.title = "riot police tactics";
  Publication real;
  real.id = "P2";
  real.title = "IoT sensors in the field";
  std::vector<Publication> pubs{riot, real};
  TopicQuery iot{"IoT", {"iot"}, false, true, false};
  topic_tag(pubs, {iot});
  CHECK(pubs[0].topics.empty());
  CHECK(pubs[1].topics == std::set<std::string>{"IoT"});
  CHECK_FALSE(oracle_word_bounded(riot.title, "iot"));
  CHECK(oracle_word_bounded(real.title, "iot"));
}

TEST_CASE("topic_tag never removes records") {
  std::vector<Publication> pubs(5);
  for (int i = 0; i < 5; ++i) pubs[static_cast<size_t>(i)].id = std::to_string(i);
  topic_tag(pubs, {TopicQuery{"X", {"nothing matches"}, true, true, true}});
  CHECK(pubs.size() == 5);
}

TEST_CASE("rank_entities unifies aliases") {
  std::vector<Award> awards(5);
  awards[0].organization = "NSF";
  awards[1].organization = "NSF";
  awards[2].organization = "NSF";
  awards[3].organization = "National Science Foundation";
  awards[4].organization = "National Science Foundation";
  AliasMap aliases{{"NSF", "National Science Foundation"}};
  auto ranked = rank_entities(awards, EntityField::funder, aliases, 10);
  REQUIRE(ranked.size() == 1);
  CHECK(ranked[0].first == "National Science Foundation");
  CHECK(ranked[0].second == 5);
}

TEST_CASE("rank_entities raw counts and tie order") {
  std::vector<Publication> pubs(4);
  pubs[0].venue = "B VENUE";
  pubs[1].venue = "B VENUE";
  pubs[2].venue = "A VENUE";
  pubs[3].venue = "A VENUE";
  auto ranked = rank_entities(pubs, EntityField::venue, {}, 10);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].first == "A VENUE"); // tie broken alphabetically
  CHECK(ranked[1].first == "B VENUE");
  auto top1 = rank_entities(pubs, EntityField::venue, {}, 1);
  CHECK(top1.size() == 1);
}

TEST_CASE("publication table round trip") {
  std::mt19937 rng(3);
  std::vector<Publication> pubs;
  for (int i = 0; i < 25; ++i) pubs.push_back(random_publication(rng, i));
  pubs[1].topics = {"AI", "IoT"};
  std::ostringstream out;
  write_publication_table(out, pubs);
  std::istringstream in(out.str());
  auto back = read_publication_table(in);
  REQUIRE(back.size() == pubs.size());
  for (size_t i = 0; i < pubs.size(); ++i) CHECK(back[i] == pubs[i]);
}

TEST_CASE("award table round trip") {
  Award a;
  a.id = "77";
  a.title = "Title";
  a.abstract = "Abstract";
  a.start_date = {2001, 2, 3};
  a.end_date = {2003, 4, 5};
  a.amount = 99;
  a.investigators = {"P One", "P Two"};
  a.organization = "Org";
  a.keywords = {"alpha", "beta gamma"};
  a.topics = {"AI"};
  std::ostringstream out;
  write_award_table(out, {a});
  std::istringstream in(out.str());
  auto back = read_award_table(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == a);
}
