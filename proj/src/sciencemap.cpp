#include "scimap/sciencemap.hpp"

#include <algorithm>
#include <cmath>
#include <istream>

#include "scimap/lexicon.hpp"
#include "scimap/strings.hpp"
#include "scimap/table.hpp"

namespace scimap {

std::string Classification::normalize_venue(std::string_view venue) {
  return upper_ascii(collapse_whitespace(venue));
}

namespace {

void ensure_special(Classification& cls, const std::string& id,
                    const std::string& name, const std::string& color) {
  if (!cls.disciplines.count(id)) cls.disciplines[id] = {name, color};
  if (!cls.subdisciplines.count(id)) {
    Classification::Subdiscipline sd;
    sd.discipline_id = id;
    sd.has_position = false;
    cls.subdisciplines[id] = sd;
  }
}

} // namespace

Classification load_classification(std::istream& venues,
                                   std::istream& subdisciplines,
                                   std::istream& disciplines,
                                   std::istream* keywords) {
  Classification cls;
  for (const auto& row : read_tsv(disciplines)) {
    if (row.size() < 2 || row[0] == "discipline_id") continue;
    cls.disciplines[trim(row[0])] = {trim(row[1]),
                                     row.size() > 2 ? trim(row[2]) : ""};
  }
  ensure_special(cls, Classification::kMultidisciplinary, "Multidisciplinary",
                 "#999999");
  ensure_special(cls, Classification::kUnclassified, "Unclassified",
                 "#cccccc");
  for (const auto& row : read_tsv(subdisciplines)) {
    if (row.size() < 4 || row[0] == "subd_id") continue;
    Classification::Subdiscipline sd;
    try {
      sd.x = std::stod(row[1]);
      sd.y = std::stod(row[2]);
    } catch (const std::exception&) {
      throw LoadError("bad coordinates for subdiscipline " + row[0]);
    }
    sd.discipline_id = trim(row[3]);
    sd.has_position = true;
    if (!cls.disciplines.count(sd.discipline_id))
      throw LoadError("subdiscipline " + row[0] +
                      " references unknown discipline " + sd.discipline_id);
    cls.subdisciplines[trim(row[0])] = sd;
  }
  ensure_special(cls, Classification::kMultidisciplinary, "Multidisciplinary",
                 "#999999");
  ensure_special(cls, Classification::kUnclassified, "Unclassified",
                 "#cccccc");

  for (const auto& row : read_tsv(venues)) {
    if (row.size() < 3 || row[0] == "venue") continue;
    double fraction = 0.0;
    try {
      fraction = std::stod(row[2]);
    } catch (const std::exception&) {
      throw LoadError("bad fraction for venue " + row[0]);
    }
    std::string subd = trim(row[1]);
    if (!cls.subdisciplines.count(subd))
      throw LoadError("venue " + row[0] + " references unknown subdiscipline " +
                      subd);
    cls.venue_map[Classification::normalize_venue(row[0])].emplace_back(
        subd, fraction);
  }
  for (const auto& [venue, fractions] : cls.venue_map) {
    double sum = 0.0;
    for (const auto& [subd, f] : fractions) sum += f;
    if (std::abs(sum - 1.0) > 1e-6)
      throw LoadError("fractions for venue " + venue + " sum to " +
                      format_fixed(sum, 6) + ", expected 1");
  }

  if (keywords) {
    for (const auto& row : read_tsv(*keywords)) {
      if (row.size() < 2 || row[0] == "subd_id") continue;
      std::string subd = trim(row[0]);
      if (!cls.subdisciplines.count(subd))
        throw LoadError("keyword table references unknown subdiscipline " +
                        subd);
      std::string term = normalize_term(row[1]);
      if (!term.empty()) cls.keyword_map[subd].insert(term);
    }
  }
  return cls;
}

ScienceLocation science_code_by_venue(const Publication& pub,
                                      const Classification& cls) {
  ScienceLocation loc;
  loc.record_id = pub.id;
  auto it = cls.venue_map.find(Classification::normalize_venue(pub.venue));
  if (it == cls.venue_map.end()) {
    loc.fractions.emplace_back(Classification::kUnclassified, 1.0);
  } else {
    loc.fractions = it->second;
  }
  return loc;
}

ScienceLocation science_code_by_keywords(
    const std::string& record_id, const std::vector<std::string>& record_terms,
    const Classification& cls) {
  ScienceLocation loc;
  loc.record_id = record_id;
  std::set<std::string> terms;
  for (const auto& t : record_terms) {
    std::string n = normalize_term(t);
    if (!n.empty()) terms.insert(n);
  }
  size_t best = 0;
  std::vector<std::string> winners;
  for (const auto& [subd, subd_terms] : cls.keyword_map) {
    size_t score = 0;
    for (const auto& t : terms)
      if (subd_terms.count(t)) ++score;
    if (score == 0) continue;
    if (score > best) {
      best = score;
      winners.assign(1, subd);
    } else if (score == best) {
      winners.push_back(subd);
    }
  }
  if (winners.empty()) {
    loc.fractions.emplace_back(Classification::kUnclassified, 1.0);
  } else {
    double share = 1.0 / static_cast<double>(winners.size());
    for (const auto& subd : winners) loc.fractions.emplace_back(subd, share);
  }
  return loc;
}

std::vector<OverlaySymbol> aggregate_overlay(const std::vector<Publication>& pubs,
                                             const Classification& cls,
                                             int slice_start, int slice_end,
                                             double radius_scale) {
  std::map<std::string, double> values;
  for (const auto& pub : pubs) {
    if (pub.year < slice_start || pub.year > slice_end) continue;
    for (const auto& [subd, f] : science_code_by_venue(pub, cls).fractions)
      values[subd] += f;
  }
  std::vector<OverlaySymbol> out;
  for (const auto& [subd, value] : values) {
    if (value <= 0.0) continue;
    auto it = cls.subdisciplines.find(subd);
    if (it == cls.subdisciplines.end() || !it->second.has_position) continue;
    OverlaySymbol sym;
    sym.subd_id = subd;
    sym.x = it->second.x;
    sym.y = it->second.y;
    sym.value = value;
    sym.radius = radius_scale * std::sqrt(value);
    out.push_back(std::move(sym));
  }
  return out;
}

std::map<std::string, double>
discipline_histogram(const std::vector<Publication>& pubs,
                     const Classification& cls, HistogramMetric metric) {
  std::map<std::string, double> totals;
  for (const auto& [id, d] : cls.disciplines) totals[id] = 0.0;
  for (const auto& pub : pubs) {
    double weight = metric == HistogramMetric::papers
                        ? 1.0
                        : static_cast<double>(pub.times_cited);
    for (const auto& [subd, f] : science_code_by_venue(pub, cls).fractions) {
      auto it = cls.subdisciplines.find(subd);
      const std::string& disc = it != cls.subdisciplines.end()
                                    ? it->second.discipline_id
                                    : std::string(Classification::kUnclassified);
      totals[disc] += f * weight;
    }
  }
  return totals;
}

} // namespace scimap
