#include "scimap/corpus.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "scimap/strings.hpp"
#include "scimap/table.hpp"

namespace scimap {

namespace {

// "[A; B] Dept of X, City, Region, Country" -> entries for A and B.
// Without brackets the address applies to all authors (empty author field).
std::vector<AddressEntry> parse_address_line(const std::string& value) {
  std::string rest = trim(value);
  std::vector<std::string> names;
  if (!rest.empty() && rest.front() == '[') {
    auto close = rest.find(']');
    if (close != std::string::npos) {
      std::string name_part = rest.substr(1, close - 1);
      for (auto& n : split(name_part, ';')) {
        std::string name = collapse_whitespace(n);
        if (!name.empty()) names.push_back(name);
      }
      rest = trim(rest.substr(close + 1));
    }
  }
  auto parts = split(rest, ',');
  std::string city, region, country;
  if (parts.size() >= 3) {
    country = trim(parts[parts.size() - 1]);
    region = trim(parts[parts.size() - 2]);
    city = trim(parts[parts.size() - 3]);
  } else if (parts.size() == 2) {
    city = trim(parts[0]);
    country = trim(parts[1]);
  } else {
    city = trim(rest);
  }
  std::vector<AddressEntry> out;
  if (names.empty()) names.emplace_back();
  for (const auto& name : names)
    out.push_back(AddressEntry{name, city, region, country, 0});
  return out;
}

std::string address_to_line(const AddressEntry& a) {
  std::string line;
  if (!a.author.empty()) line = "[" + a.author + "] ";
  line += a.city;
  if (!a.region.empty() || !a.country.empty())
    line += ", " + a.region + ", " + a.country;
  return line;
}

} // namespace

ParseResult<Publication> parse_wos_tagged(std::istream& in,
                                          const WosProfile& profile) {
  ParseResult<Publication> result;
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!starts_with(line, "FN")) throw FormatError("missing FN header line");
  if (!std::getline(in, line)) throw FormatError("missing VR version line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!starts_with(line, "VR")) throw FormatError("missing VR version line");
  if (trim(line.substr(2)) != "1.0")
    throw FormatError("unsupported version: " + trim(line.substr(2)));

  const std::string cont_prefix(static_cast<size_t>(profile.continuation_indent), ' ');

  // raw per-record field lines, keyed by tag, in order of appearance
  std::vector<std::pair<std::string, std::string>> fields;
  std::string current_tag;
  size_t record_index = 0;
  bool done = false;

  auto flush_record = [&]() {
    if (fields.empty()) return;
    Publication pub;
    std::string raw_py, raw_tc;
    bool bad = false;
    std::string bad_msg;
    std::vector<std::string> title_parts, abstract_parts, venue_parts, de_parts;
    for (auto& [tag, value] : fields) {
      if (tag == "UT") pub.id = trim(value);
      else if (tag == "PY") raw_py = trim(value);
      else if (tag == "TI") title_parts.push_back(trim(value));
      else if (tag == "AB") abstract_parts.push_back(trim(value));
      else if (tag == "SO") venue_parts.push_back(trim(value));
      else if (tag == "AU") pub.authors.push_back(collapse_whitespace(value));
      else if (tag == "CR") pub.cited_ids.push_back(trim(value));
      else if (tag == "C1") {
        for (auto& a : parse_address_line(value)) pub.addresses.push_back(a);
      } else if (tag == "DE") de_parts.push_back(trim(value));
      else if (tag == "TC") raw_tc = trim(value);
    }
    pub.title = join(title_parts, " ");
    pub.abstract = join(abstract_parts, " ");
    pub.venue = join(venue_parts, " ");
    for (auto& kw : split(join(de_parts, " "), ';')) {
      std::string t = trim(kw);
      if (!t.empty()) pub.author_keywords.push_back(t);
    }
    long long v = 0;
    if (!raw_py.empty()) {
      if (parse_long(raw_py, v)) pub.year = static_cast<int>(v);
      else { bad = true; bad_msg = "non-numeric PY: " + raw_py; }
    }
    if (!bad && !raw_tc.empty()) {
      if (parse_long(raw_tc, v) && v >= 0) pub.times_cited = static_cast<long>(v);
      else { bad = true; bad_msg = "non-numeric TC: " + raw_tc; }
    }
    if (!bad && pub.id.empty()) {
      bad = true;
      bad_msg = "record missing UT";
    }
    if (bad) {
      result.errors.push_back(RecordError{record_index, pub.id, bad_msg});
    } else {
      for (auto& a : pub.addresses) a.year = pub.year;
      result.records.push_back(std::move(pub));
    }
    fields.clear();
    current_tag.clear();
    ++record_index;
  };

  while (!done && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (starts_with(line, cont_prefix) && !current_tag.empty()) {
      fields.emplace_back(current_tag, line.substr(cont_prefix.size()));
      continue;
    }
    std::string tag = line.size() >= 2 ? line.substr(0, 2) : line;
    std::string value = line.size() > 3 ? line.substr(3) : "";
    if (tag == "ER") {
      flush_record();
    } else if (tag == "EF") {
      done = true;
    } else {
      fields.emplace_back(tag, value);
      current_tag = tag;
    }
  }
  flush_record(); // record with missing ER at EOF
  return result;
}

void write_wos_tagged(std::ostream& out, const std::vector<Publication>& pubs) {
  out << "FN scimap export\n";
  out << "VR 1.0\n";
  auto emit_list = [&out](const char* tag, const std::vector<std::string>& items) {
    for (size_t i = 0; i < items.size(); ++i) {
      if (i == 0) out << tag << ' ' << items[i] << '\n';
      else out << "   " << items[i] << '\n';
    }
  };
  for (const auto& p : pubs) {
    out << "UT " << p.id << '\n';
    out << "PY " << p.year << '\n';
    if (!p.title.empty()) out << "TI " << p.title << '\n';
    if (!p.abstract.empty()) out << "AB " << p.abstract << '\n';
    if (!p.venue.empty()) out << "SO " << p.venue << '\n';
    emit_list("AU", p.authors);
    std::vector<std::string> addr_lines;
    for (const auto& a : p.addresses) addr_lines.push_back(address_to_line(a));
    emit_list("C1", addr_lines);
    if (!p.author_keywords.empty())
      out << "DE " << join(p.author_keywords, "; ") << '\n';
    if (p.times_cited != 0) out << "TC " << p.times_cited << '\n';
    emit_list("CR", p.cited_ids);
    out << "ER\n";
  }
  out << "EF\n";
}

namespace {

bool parse_date(const std::string& s, Date& out) {
  auto parts = split(trim(s), '/');
  if (parts.size() != 3) return false;
  long long m, d, y;
  if (!parse_long(parts[0], m) || !parse_long(parts[1], d) ||
      !parse_long(parts[2], y))
    return false;
  if (m < 1 || m > 12 || d < 1 || d > 31 || y < 1000 || y > 9999) return false;
  out = Date{static_cast<int>(y), static_cast<int>(m), static_cast<int>(d)};
  return true;
}

std::string date_to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", d.month, d.day, d.year);
  return buf;
}

bool parse_amount(const std::string& s, long long& out) {
  std::string digits;
  std::string t = trim(s);
  size_t i = 0;
  bool neg = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (c == '$' || c == ',' || c == ' ') continue;
    if (c == '-') { neg = true; continue; }
    if (c == '.') break; // cents dropped
    if (c < '0' || c > '9') return false;
    digits += c;
  }
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (c != '.' && (c < '0' || c > '9')) return false;
  }
  if (digits.empty()) return false;
  if (!parse_long(digits, out)) return false;
  if (neg) return false; // amounts are non-negative
  return true;
}

} // namespace

ParseResult<Award> parse_nsf_awards(std::istream& in) {
  auto rows = read_csv(in);
  if (rows.empty()) throw FormatError("empty awards table");
  std::map<std::string, size_t> col;
  for (size_t i = 0; i < rows[0].size(); ++i) col[trim(rows[0][i])] = i;
  const char* required[] = {"AwardNumber", "Title",       "StartDate",
                            "EndDate",     "AwardedAmountToDate",
                            "PrincipalInvestigator", "Organization", "Abstract"};
  for (const char* name : required)
    if (!col.count(name))
      throw FormatError(std::string("missing required column: ") + name);
  auto copi_col = col.find("Co-PIName(s)");

  ParseResult<Award> result;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto get = [&](const char* name) -> std::string {
      size_t i = col.at(name);
      return i < row.size() ? row[i] : std::string();
    };
    Award a;
    a.id = trim(get("AwardNumber"));
    a.title = trim(get("Title"));
    a.abstract = trim(get("Abstract"));
    a.organization = trim(get("Organization"));
    for (auto& name : split(get("PrincipalInvestigator"), ';')) {
      std::string n = collapse_whitespace(name);
      if (!n.empty()) a.investigators.push_back(n);
    }
    if (copi_col != col.end() && copi_col->second < row.size()) {
      for (auto& name : split(row[copi_col->second], ';')) {
        std::string n = collapse_whitespace(name);
        if (!n.empty()) a.investigators.push_back(n);
      }
    }
    std::string err;
    if (!parse_date(get("StartDate"), a.start_date))
      err = "bad StartDate: " + get("StartDate");
    else if (!parse_date(get("EndDate"), a.end_date))
      err = "bad EndDate: " + get("EndDate");
    else if (a.end_date < a.start_date)
      err = "EndDate precedes StartDate";
    else if (!parse_amount(get("AwardedAmountToDate"), a.amount))
      err = "bad AwardedAmountToDate: " + get("AwardedAmountToDate");
    if (!err.empty()) {
      result.errors.push_back(RecordError{r, a.id, err});
      continue;
    }
    result.records.push_back(std::move(a));
  }
  return result;
}

void write_nsf_awards(std::ostream& out, const std::vector<Award>& awards) {
  write_csv_row(out, {"AwardNumber", "Title", "StartDate", "EndDate",
                      "AwardedAmountToDate", "PrincipalInvestigator",
                      "Organization", "Abstract"});
  for (const auto& a : awards) {
    write_csv_row(out, {a.id, a.title, date_to_string(a.start_date),
                        date_to_string(a.end_date),
                        "$" + std::to_string(a.amount),
                        join(a.investigators, "; "), a.organization,
                        a.abstract});
  }
}

std::vector<Publication> filter_window(std::vector<Publication> records,
                                       int start_year, int end_year) {
  std::erase_if(records, [=](const Publication& p) {
    return p.year < start_year || p.year > end_year;
  });
  return records;
}

std::vector<Award> filter_window(std::vector<Award> records, int start_year,
                                 int end_year) {
  std::erase_if(records, [=](const Award& a) {
    return a.start_date.year > end_year || a.end_date.year < start_year;
  });
  return records;
}

template <class R>
static ExclusionResult<R> apply_exclusions_impl(std::vector<R> records,
                                                const ExclusionList& excl) {
  ExclusionResult<R> out;
  size_t before = records.size();
  std::erase_if(records, [&](const R& r) {
    return excl.reason_by_id.count(r.id) > 0;
  });
  out.removed = before - records.size();
  out.records = std::move(records);
  return out;
}

ExclusionResult<Publication> apply_exclusions(std::vector<Publication> records,
                                              const ExclusionList& excl) {
  return apply_exclusions_impl(std::move(records), excl);
}

ExclusionResult<Award> apply_exclusions(std::vector<Award> records,
                                        const ExclusionList& excl) {
  return apply_exclusions_impl(std::move(records), excl);
}

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

// Case-insensitive whole-word-bounded substring search.
bool contains_word_bounded(const std::string& haystack_lower,
                           const std::string& needle_lower) {
  if (needle_lower.empty()) return false;
  size_t pos = 0;
  while ((pos = haystack_lower.find(needle_lower, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(haystack_lower[pos - 1]);
    size_t end = pos + needle_lower.size();
    bool right_ok = end == haystack_lower.size() ||
                    !is_word_char(haystack_lower[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

bool matches_query(const std::vector<std::string>& keywords_lower,
                   const std::string& title_lower,
                   const std::string& abstract_lower, const TopicQuery& q) {
  for (const auto& term : q.terms) {
    std::string t = lower_ascii(trim(term));
    if (t.empty()) continue;
    if (q.search_keywords) {
      for (const auto& kw : keywords_lower)
        if (kw == t) return true;
    }
    if (q.search_title && contains_word_bounded(title_lower, t)) return true;
    if (q.search_abstract && contains_word_bounded(abstract_lower, t)) return true;
  }
  return false;
}

} // namespace

void topic_tag(std::vector<Publication>& records,
               const std::vector<TopicQuery>& queries) {
  for (auto& rec : records) {
    std::vector<std::string> kw_lower;
    kw_lower.reserve(rec.author_keywords.size());
    for (const auto& k : rec.author_keywords)
      kw_lower.push_back(lower_ascii(trim(k)));
    std::string title_lower = lower_ascii(rec.title);
    std::string abstract_lower = lower_ascii(rec.abstract);
    for (const auto& q : queries)
      if (matches_query(kw_lower, title_lower, abstract_lower, q))
        rec.topics.insert(q.label);
  }
}

void topic_tag(std::vector<Award>& records,
               const std::vector<TopicQuery>& queries) {
  for (auto& rec : records) {
    std::vector<std::string> kw_lower;
    kw_lower.reserve(rec.keywords.size());
    for (const auto& k : rec.keywords) kw_lower.push_back(lower_ascii(trim(k)));
    std::string title_lower = lower_ascii(rec.title);
    std::string abstract_lower = lower_ascii(rec.abstract);
    for (const auto& q : queries)
      if (matches_query(kw_lower, title_lower, abstract_lower, q))
        rec.topics.insert(q.label);
  }
}

namespace {

std::vector<std::pair<std::string, size_t>>
rank_names(const std::vector<std::string>& names, const AliasMap& aliases,
           size_t top_n) {
  std::map<std::string, size_t> counts;
  for (const auto& name : names) {
    auto it = aliases.find(name);
    counts[it != aliases.end() ? it->second : name]++;
  }
  std::vector<std::pair<std::string, size_t>> ranked(counts.begin(),
                                                     counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);
  return ranked;
}

} // namespace

std::vector<std::pair<std::string, size_t>>
rank_entities(const std::vector<Publication>& records, EntityField field,
              const AliasMap& aliases, size_t top_n) {
  std::vector<std::string> names;
  for (const auto& r : records) {
    if (field == EntityField::venue) {
      if (!r.venue.empty()) names.push_back(r.venue);
    }
    // funder/organization are not carried on publication records
  }
  return rank_names(names, aliases, top_n);
}

std::vector<std::pair<std::string, size_t>>
rank_entities(const std::vector<Award>& records, EntityField field,
              const AliasMap& aliases, size_t top_n) {
  std::vector<std::string> names;
  for (const auto& r : records) {
    if (field == EntityField::funder || field == EntityField::organization) {
      if (!r.organization.empty()) names.push_back(r.organization);
    }
  }
  return rank_names(names, aliases, top_n);
}

namespace {

constexpr char kListSep = '|';
constexpr char kSubSep = '~';

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += kListSep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  if (s.empty()) return {};
  return split(s, kListSep);
}

} // namespace

void write_publication_table(std::ostream& out,
                             const std::vector<Publication>& pubs) {
  write_tsv_row(out, {"id", "year", "title", "abstract", "venue", "authors",
                      "addresses", "keywords", "times_cited", "cited_ids",
                      "topics"});
  for (const auto& p : pubs) {
    std::vector<std::string> addr;
    for (const auto& a : p.addresses) {
      addr.push_back(a.author + kSubSep + a.city + kSubSep + a.region +
                     kSubSep + a.country + kSubSep + std::to_string(a.year));
    }
    std::vector<std::string> topics(p.topics.begin(), p.topics.end());
    write_tsv_row(out, {p.id, std::to_string(p.year), p.title, p.abstract,
                        p.venue, join_list(p.authors), join_list(addr),
                        join_list(p.author_keywords),
                        std::to_string(p.times_cited), join_list(p.cited_ids),
                        join_list(topics)});
  }
}

std::vector<Publication> read_publication_table(std::istream& in) {
  auto rows = read_tsv(in);
  std::vector<Publication> pubs;
  if (rows.empty()) return pubs;
  for (size_t i = 1; i < rows.size(); ++i) {
    auto& row = rows[i];
    row.resize(11);
    Publication p;
    p.id = row[0];
    long long v = 0;
    if (parse_long(row[1], v)) p.year = static_cast<int>(v);
    p.title = row[2];
    p.abstract = row[3];
    p.venue = row[4];
    p.authors = split_list(row[5]);
    for (const auto& entry : split_list(row[6])) {
      auto parts = split(entry, kSubSep);
      parts.resize(5);
      AddressEntry a;
      a.author = parts[0];
      a.city = parts[1];
      a.region = parts[2];
      a.country = parts[3];
      if (parse_long(parts[4], v)) a.year = static_cast<int>(v);
      p.addresses.push_back(std::move(a));
    }
    p.author_keywords = split_list(row[7]);
    if (parse_long(row[8], v)) p.times_cited = static_cast<long>(v);
    p.cited_ids = split_list(row[9]);
    for (const auto& t : split_list(row[10])) p.topics.insert(t);
    pubs.push_back(std::move(p));
  }
  return pubs;
}

void write_award_table(std::ostream& out, const std::vector<Award>& awards) {
  write_tsv_row(out, {"id", "title", "abstract", "start_date", "end_date",
                      "amount", "investigators", "organization", "keywords",
                      "topics"});
  for (const auto& a : awards) {
    std::vector<std::string> topics(a.topics.begin(), a.topics.end());
    write_tsv_row(out, {a.id, a.title, a.abstract, date_to_string(a.start_date),
                        date_to_string(a.end_date), std::to_string(a.amount),
                        join_list(a.investigators), a.organization,
                        join_list(a.keywords), join_list(topics)});
  }
}

std::vector<Award> read_award_table(std::istream& in) {
  auto rows = read_tsv(in);
  std::vector<Award> awards;
  if (rows.empty()) return awards;
  for (size_t i = 1; i < rows.size(); ++i) {
    auto& row = rows[i];
    row.resize(10);
    Award a;
    a.id = row[0];
    a.title = row[1];
    a.abstract = row[2];
    parse_date(row[3], a.start_date);
    parse_date(row[4], a.end_date);
    long long v = 0;
    if (parse_long(row[5], v)) a.amount = v;
    a.investigators = split_list(row[6]);
    a.organization = row[7];
    a.keywords = split_list(row[8]);
    for (const auto& t : split_list(row[9])) a.topics.insert(t);
    awards.push_back(std::move(a));
  }
  return awards;
}

ExclusionList read_exclusion_list(std::istream& in) {
  ExclusionList out;
  for (auto& [id, reason] : read_pairs(in)) out.reason_by_id[id] = reason;
  return out;
}

AliasMap read_alias_map(std::istream& in) {
  AliasMap out;
  for (auto& [variant, canonical] : read_pairs(in)) out[variant] = canonical;
  return out;
}

} // namespace scimap
