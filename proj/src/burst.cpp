#include "scimap/burst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "scimap/lexicon.hpp"

namespace scimap {

EventStream build_event_stream(const std::vector<DocTerms>& docs,
                               const std::string& term, int year_start,
                               int year_end) {
  EventStream stream;
  stream.term = term;
  stream.first_year = year_start;
  size_t n = static_cast<size_t>(year_end - year_start + 1);
  stream.d.assign(n, 0);
  stream.r.assign(n, 0);
  for (const auto& doc : docs) {
    if (doc.year < year_start || doc.year > year_end) continue;
    size_t t = static_cast<size_t>(doc.year - year_start);
    stream.d[t]++;
    if (doc.terms.count(term)) stream.r[t]++;
  }
  return stream;
}

double state_cost(int level, long r, long d, double p0, double s) {
  if (d == 0) return 0.0;
  double p = p0;
  for (int i = 0; i < level; ++i) p *= s;
  p = std::min(p, 1.0 - 1e-6);
  return -(static_cast<double>(r) * std::log(p) +
           static_cast<double>(d - r) * std::log(1.0 - p));
}

std::vector<Burst> detect_bursts(const EventStream& stream,
                                 const BurstParams& params,
                                 BurstSource source) {
  const size_t T = stream.d.size();
  std::vector<Burst> bursts;
  if (T == 0) return bursts;

  long sum_r = 0, sum_d = 0;
  for (size_t t = 0; t < T; ++t) {
    sum_r += stream.r[t];
    sum_d += stream.d[t];
  }
  if (sum_r == 0 || sum_d == 0) return bursts;
  const double p0 = static_cast<double>(sum_r) / static_cast<double>(sum_d);

  const int S = params.num_burst_states; // levels 0..S
  const double gl = params.gamma * std::log(static_cast<double>(T));
  auto trans = [gl](int from, int to) {
    return to > from ? static_cast<double>(to - from) * gl : 0.0;
  };

  // sigma[t][q]
  std::vector<std::vector<double>> sigma(T, std::vector<double>(S + 1));
  for (size_t t = 0; t < T; ++t)
    for (int q = 0; q <= S; ++q)
      sigma[t][q] = state_cost(q, stream.r[t], stream.d[t], p0, params.s);

  // Suffix minima: G[t][q] = sigma[t][q] + min over q' of
  // (trans(q, q') + G[t+1][q']). Reconstructing front-to-back and taking the
  // smallest state on ties yields the lexicographically smallest optimal
  // sequence, i.e. lower states as early as possible.
  std::vector<std::vector<double>> G(T, std::vector<double>(S + 1));
  for (int q = 0; q <= S; ++q) G[T - 1][q] = sigma[T - 1][q];
  for (size_t t = T - 1; t-- > 0;) {
    for (int q = 0; q <= S; ++q) {
      double best = std::numeric_limits<double>::infinity();
      for (int nq = 0; nq <= S; ++nq) {
        double cand = trans(q, nq) + G[t + 1][nq];
        if (cand < best) best = cand;
      }
      G[t][q] = sigma[t][q] + best;
    }
  }

  std::vector<int> seq(T, 0);
  {
    double best = std::numeric_limits<double>::infinity();
    int best_q = 0;
    for (int q = 0; q <= S; ++q) {
      double cand = trans(0, q) + G[0][q];
      if (cand < best) {
        best = cand;
        best_q = q;
      }
    }
    seq[0] = best_q;
  }
  for (size_t t = 1; t < T; ++t) {
    double best = std::numeric_limits<double>::infinity();
    int best_q = 0;
    for (int q = 0; q <= S; ++q) {
      double cand = trans(seq[t - 1], q) + G[t][q];
      if (cand < best) {
        best = cand;
        best_q = q;
      }
    }
    seq[t] = best_q;
  }

  // Maximal runs at state >= 1 become bursts.
  size_t t = 0;
  while (t < T) {
    if (seq[t] == 0) {
      ++t;
      continue;
    }
    size_t run_start = t;
    while (t < T && seq[t] >= 1) ++t;
    size_t run_end = t; // exclusive
    if (run_end - run_start < static_cast<size_t>(params.min_burst_length))
      continue;
    Burst b;
    b.term = stream.term;
    b.source = source;
    b.start_year = stream.first_year + static_cast<int>(run_start);
    b.end_year = stream.first_year + static_cast<int>(run_end - 1);
    b.state_level = 0;
    b.weight = 0.0;
    for (size_t u = run_start; u < run_end; ++u) {
      b.weight += sigma[u][0] - sigma[u][seq[u]];
      b.state_level = std::max(b.state_level, seq[u]);
    }
    if (b.weight > 0.0) bursts.push_back(std::move(b));
  }
  return bursts;
}

std::vector<BurstSummary> summarize_and_rank(const std::vector<Burst>& bursts,
                                             size_t top_n) {
  std::map<std::string, BurstSummary> by_term;
  for (const auto& b : bursts) {
    auto& s = by_term[b.term];
    s.term = b.term;
    s.source = b.source;
    s.total_weight += b.weight;
    s.bursts.push_back(b);
  }
  std::vector<BurstSummary> out;
  out.reserve(by_term.size());
  for (auto& [term, s] : by_term) {
    std::sort(s.bursts.begin(), s.bursts.end(),
              [](const Burst& a, const Burst& b) {
                return a.start_year < b.start_year;
              });
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const BurstSummary& a, const BurstSummary& b) {
    if (a.total_weight != b.total_weight) return a.total_weight > b.total_weight;
    return a.term < b.term;
  });
  if (out.size() > top_n) out.resize(top_n);
  return out;
}

namespace {

bool intervals_intersect(const Burst& a, const Burst& b) {
  return a.start_year <= b.end_year && b.start_year <= a.end_year;
}

} // namespace

std::set<std::string> find_cobursts(std::vector<BurstSummary>& funding,
                                    std::vector<BurstSummary>& publication) {
  std::set<std::string> co;
  for (auto& f : funding) {
    std::string f_norm = normalize_term(f.term);
    for (auto& p : publication) {
      if (normalize_term(p.term) != f_norm) continue;
      bool intersects = false;
      for (const auto& fb : f.bursts) {
        for (const auto& pb : p.bursts) {
          if (intervals_intersect(fb, pb)) {
            intersects = true;
            break;
          }
        }
        if (intersects) break;
      }
      if (intersects) {
        f.co_burst = true;
        p.co_burst = true;
        co.insert(f.term);
      }
    }
  }
  return co;
}

std::vector<BurstBar>
layout_burst_bars(const std::vector<BurstSummary>& summaries) {
  std::vector<const BurstSummary*> order;
  order.reserve(summaries.size());
  for (const auto& s : summaries)
    if (!s.bursts.empty()) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const BurstSummary* a, const BurstSummary* b) {
              int sa = a->bursts.front().start_year;
              int sb = b->bursts.front().start_year;
              if (sa != sb) return sa < sb;
              if (a->term != b->term) return a->term < b->term;
              return a->source < b->source;
            });
  std::vector<BurstBar> bars;
  for (const BurstSummary* s : order) {
    for (const auto& b : s->bursts) {
      BurstBar bar;
      bar.term = s->term;
      bar.source = s->source;
      bar.start_year = b.start_year;
      bar.end_year = b.end_year;
      int span = b.end_year - b.start_year + 1;
      bar.height = b.weight / static_cast<double>(span);
      bar.color = s->co_burst ? BarColorClass::co_burst
                 : s->source == BurstSource::funding
                     ? BarColorClass::funding
                     : BarColorClass::publication;
      bars.push_back(std::move(bar));
    }
  }
  return bars;
}

} // namespace scimap
