#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace scimap {

// Unrecoverable problem with an input file (bad header, missing column).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;
  auto operator<=>(const Date&) const = default;
};

// One address attached to a record. `author` is empty when the address
// applies to every author of the record. `year` is the year of the record
// that carried the address.
struct AddressEntry {
  std::string author;
  std::string city;
  std::string region;
  std::string country;
  int year = 0;
  bool operator==(const AddressEntry&) const = default;
};

struct Publication {
  std::string id;
  int year = 0;
  std::string title;
  std::string abstract;
  std::string venue;
  std::vector<std::string> authors;
  std::vector<AddressEntry> addresses;
  std::vector<std::string> author_keywords;
  long times_cited = 0;
  std::vector<std::string> cited_ids;
  std::set<std::string> topics;
  bool operator==(const Publication&) const = default;
};

struct Award {
  std::string id;
  std::string title;
  std::string abstract;
  Date start_date;
  Date end_date;
  long long amount = 0;
  std::vector<std::string> investigators;
  std::string organization;
  std::vector<std::string> keywords;
  std::set<std::string> topics;
  bool operator==(const Award&) const = default;
};

struct TopicQuery {
  std::string label;
  std::vector<std::string> terms;
  bool search_keywords = true;
  bool search_title = false;
  bool search_abstract = false;
};

struct ExclusionList {
  std::map<std::string, std::string> reason_by_id;
};

// Problem with a single record; the surrounding parse continues.
struct RecordError {
  size_t record_index = 0;
  std::string id;
  std::string message;
};

struct WosProfile {
  int continuation_indent = 3;
};

template <class R>
struct ParseResult {
  std::vector<R> records;
  std::vector<RecordError> errors;
};

// Tagged flat-file ingestion. Recognized tags: UT PY TI AB SO AU C1 DE TC CR.
ParseResult<Publication> parse_wos_tagged(std::istream& in,
                                          const WosProfile& profile = {});
void write_wos_tagged(std::ostream& out, const std::vector<Publication>& pubs);

// Awards table ingestion. Header must contain AwardNumber, Title, StartDate,
// EndDate, AwardedAmountToDate, PrincipalInvestigator, Organization, Abstract.
ParseResult<Award> parse_nsf_awards(std::istream& in);
void write_nsf_awards(std::ostream& out, const std::vector<Award>& awards);

std::vector<Publication> filter_window(std::vector<Publication> records,
                                       int start_year, int end_year);
// Awards are kept when [start_date, end_date] intersects the window.
std::vector<Award> filter_window(std::vector<Award> records, int start_year,
                                 int end_year);

template <class R>
struct ExclusionResult {
  std::vector<R> records;
  size_t removed = 0;
};

ExclusionResult<Publication> apply_exclusions(std::vector<Publication> records,
                                              const ExclusionList& excl);
ExclusionResult<Award> apply_exclusions(std::vector<Award> records,
                                        const ExclusionList& excl);

// Whole-keyword match on keyword fields, word-boundary substring match on
// title/abstract. Case-insensitive. Never removes records.
void topic_tag(std::vector<Publication>& records,
               const std::vector<TopicQuery>& queries);
void topic_tag(std::vector<Award>& records,
               const std::vector<TopicQuery>& queries);

enum class EntityField { funder, organization, venue };

using AliasMap = std::map<std::string, std::string>;

std::vector<std::pair<std::string, size_t>>
rank_entities(const std::vector<Publication>& records, EntityField field,
              const AliasMap& aliases, size_t top_n);
std::vector<std::pair<std::string, size_t>>
rank_entities(const std::vector<Award>& records, EntityField field,
              const AliasMap& aliases, size_t top_n);

// Canonical record dump: one TSV row per record, lists joined by "|",
// address sub-fields joined by "~".
void write_publication_table(std::ostream& out,
                             const std::vector<Publication>& pubs);
std::vector<Publication> read_publication_table(std::istream& in);
void write_award_table(std::ostream& out, const std::vector<Award>& awards);
std::vector<Award> read_award_table(std::istream& in);

ExclusionList read_exclusion_list(std::istream& in);
AliasMap read_alias_map(std::istream& in);

} // namespace scimap
