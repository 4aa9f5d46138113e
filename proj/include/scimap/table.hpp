#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace scimap {

// Comma-separated table with standard double-quote escaping. Quoted fields
// may contain commas, quotes ("") and newlines.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Tab-separated table, no quoting. Tabs and newlines inside fields are
// replaced by spaces on write.
std::vector<std::vector<std::string>> read_tsv(std::istream& in);
void write_tsv_row(std::ostream& out, const std::vector<std::string>& fields);

// Two-column helper used for exclusion lists, alias maps and merge tables.
// Lines starting with '#' and blank lines are skipped.
std::vector<std::pair<std::string, std::string>> read_pairs(std::istream& in);

} // namespace scimap
