#include "scimap/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scimap/lexicon.hpp"

namespace scimap {

OverlapReport set_overlaps(
    const std::map<std::string, std::set<std::string>>& record_sets,
    const std::map<std::string, std::set<std::string>>& keyword_sets) {
  OverlapReport report;
  auto fill = [](const std::map<std::string, std::set<std::string>>& sets,
                 std::map<std::string, size_t>& totals,
                 std::map<std::pair<std::string, std::string>, size_t>& pairs,
                 size_t& all_count) {
    for (const auto& [label, items] : sets) totals[label] = items.size();
    for (auto it = sets.begin(); it != sets.end(); ++it) {
      auto jt = it;
      for (++jt; jt != sets.end(); ++jt) {
        size_t n = 0;
        for (const auto& item : it->second)
          if (jt->second.count(item)) ++n;
        pairs[{it->first, jt->first}] = n;
      }
    }
    if (sets.size() >= 2) {
      auto it = sets.begin();
      std::set<std::string> acc = it->second;
      for (++it; it != sets.end(); ++it) {
        std::set<std::string> next;
        for (const auto& item : acc)
          if (it->second.count(item)) next.insert(item);
        acc = std::move(next);
      }
      all_count = acc.size();
    }
  };
  fill(record_sets, report.record_totals, report.record_pairs,
       report.record_all);
  fill(keyword_sets, report.keyword_totals, report.keyword_pairs,
       report.keyword_all);
  return report;
}

std::map<std::string, std::set<std::string>>
topic_record_sets(const std::vector<Publication>& pubs) {
  std::map<std::string, std::set<std::string>> sets;
  for (const auto& p : pubs)
    for (const auto& t : p.topics) sets[t].insert(p.id);
  return sets;
}

std::map<std::string, std::set<std::string>>
topic_keyword_sets(const std::vector<Publication>& pubs) {
  std::map<std::string, std::set<std::string>> sets;
  for (const auto& p : pubs) {
    for (const auto& t : p.topics) {
      for (const auto& kw : p.author_keywords) {
        std::string n = normalize_term(kw);
        if (!n.empty()) sets[t].insert(n);
      }
    }
  }
  return sets;
}

std::map<std::string, std::set<std::string>>
topic_record_sets(const std::vector<Award>& awards) {
  std::map<std::string, std::set<std::string>> sets;
  for (const auto& a : awards)
    for (const auto& t : a.topics) sets[t].insert(a.id);
  return sets;
}

std::map<std::string, std::set<std::string>>
topic_keyword_sets(const std::vector<Award>& awards) {
  std::map<std::string, std::set<std::string>> sets;
  for (const auto& a : awards) {
    for (const auto& t : a.topics) {
      for (const auto& kw : a.keywords) {
        std::string n = normalize_term(kw);
        if (!n.empty()) sets[t].insert(n);
      }
    }
  }
  return sets;
}

FlowReport intercitation_matrix(const std::vector<Publication>& pubs) {
  std::map<std::string, const Publication*> by_id;
  for (const auto& p : pubs) by_id[p.id] = &p;
  FlowReport report;
  std::map<std::tuple<std::string, int, std::string, int>, long> counts;
  for (const auto& citing : pubs) {
    for (const auto& cited_id : citing.cited_ids) {
      auto it = by_id.find(cited_id);
      if (it == by_id.end()) {
        ++report.unresolved_ids;
        continue;
      }
      const Publication& cited = *it->second;
      if (cited.year > citing.year) {
        ++report.dropped_forward;
        continue;
      }
      for (const auto& source_topic : citing.topics) {
        for (const auto& target_topic : cited.topics) {
          if (source_topic == target_topic) continue;
          counts[{source_topic, citing.year, target_topic, cited.year}]++;
        }
      }
    }
  }
  for (const auto& [key, count] : counts) {
    report.flows.push_back(CitationFlow{std::get<0>(key), std::get<1>(key),
                                        std::get<2>(key), std::get<3>(key),
                                        count});
  }
  return report;
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  // Continued fraction (Lentz), with the symmetry transform for convergence.
  auto betacf = [](double a, double b, double x) {
    const int max_iter = 300;
    const double eps = 3e-14;
    const double fpmin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
      int m2 = 2 * m;
      double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
      d = 1.0 + aa * d;
      if (std::abs(d) < fpmin) d = fpmin;
      c = 1.0 + aa / c;
      if (std::abs(c) < fpmin) c = fpmin;
      d = 1.0 / d;
      h *= d * c;
      aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
      d = 1.0 + aa * d;
      if (std::abs(d) < fpmin) d = fpmin;
      c = 1.0 + aa / c;
      if (std::abs(c) < fpmin) c = fpmin;
      d = 1.0 / d;
      double del = d * c;
      h *= del;
      if (std::abs(del - 1.0) < eps) break;
    }
    return h;
  };
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log(1.0 - x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double t_test_p_value(double t, int df) {
  if (df < 1) return 1.0;
  if (std::isinf(t)) return 0.0;
  double x = static_cast<double>(df) / (static_cast<double>(df) + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

TrendResult trend_test(const std::vector<double>& annual_counts) {
  const size_t n = annual_counts.size();
  if (n < 3) throw std::invalid_argument("trend_test requires >= 3 years");
  TrendResult res;
  res.n_years = static_cast<int>(n);

  bool all_equal = true;
  for (size_t i = 1; i < n; ++i)
    if (annual_counts[i] != annual_counts[0]) all_equal = false;
  if (all_equal) {
    res.slope = 0.0;
    res.p_value = 1.0;
    return res;
  }

  double mean_x = (static_cast<double>(n) - 1.0) / 2.0;
  double mean_y = 0.0;
  for (double y : annual_counts) mean_y += y;
  mean_y /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double dx = static_cast<double>(i) - mean_x;
    sxx += dx * dx;
    sxy += dx * (annual_counts[i] - mean_y);
  }
  res.slope = sxy / sxx;
  double sse = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double fitted = mean_y + res.slope * (static_cast<double>(i) - mean_x);
    double r = annual_counts[i] - fitted;
    sse += r * r;
  }
  double s2 = sse / static_cast<double>(n - 2);
  if (s2 < 1e-12) {
    res.p_value = res.slope == 0.0 ? 1.0 : 0.0;
    return res;
  }
  double se = std::sqrt(s2 / sxx);
  double t = res.slope / se;
  res.p_value = t_test_p_value(t, static_cast<int>(n) - 2);
  return res;
}

} // namespace scimap
