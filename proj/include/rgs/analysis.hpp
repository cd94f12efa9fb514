#pragma once

// Hamming distance statistics over lists, the d-adjacent Gray code checks,
// worst/average distance tables, and the descent-sequence conjecture.
//
// Averages are kept as exact integer fractions (distance sum over pair
// count) and rounded half-up to two decimals only for rendering, so that
// table comparisons are never decided by floating point error.

#include <array>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgs/gen_prefix.hpp"
#include "rgs/gen_suffix.hpp"
#include "rgs/oracle.hpp"
#include "rgs/sequence.hpp"

namespace rgs {

inline int hamming(SeqView s, SeqView t) {
  if (s.size() != t.size())
    throw std::invalid_argument("hamming: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) d += s[i] != t[i];
  return d;
}

namespace detail {

struct PairDelta {
  int distance = 0;
  int window = 0;        // max - min differing position + 1; 0 when equal
  bool leftmost_pm1 = true;  // leftmost differing digit changed by exactly +-1
};

inline PairDelta pair_delta(SeqView s, SeqView t) {
  if (s.size() != t.size())
    throw std::invalid_argument("pair_delta: length mismatch");
  PairDelta pd;
  int first = -1, last = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == t[i]) continue;
    ++pd.distance;
    if (first < 0) first = static_cast<int>(i);
    last = static_cast<int>(i);
  }
  if (pd.distance > 0) {
    pd.window = last - first + 1;
    pd.leftmost_pm1 = s[first] == t[first] + 1 || s[first] == t[first] - 1;
  }
  return pd;
}

inline std::string render_fraction_2dp(long long num, long long den) {
  if (den == 0) return "0";
  if (num % den == 0) return std::to_string(num / den);
  const long long hundredths = (200 * num + den) / (2 * den);  // half-up
  char out[32];
  std::snprintf(out, sizeof(out), "%lld.%02lld", hundredths / 100, hundredths % 100);
  return out;
}

}  // namespace detail

// Aggregate over the N-1 consecutive pairs of a list plus the wrap pair.
struct TransitionStats {
  long long count = 0;       // N
  int worst = 0;             // max distance, linear pairs
  long long distance_sum = 0;
  int max_window = 0;        // max differing-position span, linear pairs
  int circular_worst = 0;    // distance last <-> first
  int circular_window = 0;
  bool lemma1_ok = true;     // +-1 at the leftmost difference, linear pairs
  std::vector<long long> distance_histogram;  // by distance, linear pairs

  long long pairs() const { return count > 0 ? count - 1 : 0; }
  std::string average_rendered() const {
    return detail::render_fraction_2dp(distance_sum, pairs());
  }
};

// Streaming form of transition_stats: feed sequences in list order, then
// finish(). Memory stays O(n) regardless of list length.
class TransitionAccumulator {
 public:
  void feed(SeqView s) {
    if (stats_.count == 0) {
      first_.assign(s.begin(), s.end());
    } else {
      account(prev_, s);
    }
    prev_.assign(s.begin(), s.end());
    ++stats_.count;
  }

  TransitionStats finish() const {
    TransitionStats out = stats_;
    if (out.count > 0) {
      const auto pd = detail::pair_delta(prev_, first_);
      out.circular_worst = pd.distance;
      out.circular_window = pd.window;
    }
    return out;
  }

 private:
  void account(SeqView a, SeqView b) {
    const auto pd = detail::pair_delta(a, b);
    if (pd.distance > stats_.worst) stats_.worst = pd.distance;
    if (pd.window > stats_.max_window) stats_.max_window = pd.window;
    stats_.distance_sum += pd.distance;
    if (!pd.leftmost_pm1) stats_.lemma1_ok = false;
    if (static_cast<std::size_t>(pd.distance) >= stats_.distance_histogram.size())
      stats_.distance_histogram.resize(pd.distance + 1, 0);
    ++stats_.distance_histogram[pd.distance];
  }

  Sequence first_, prev_;
  TransitionStats stats_;
};

inline TransitionStats transition_stats(const std::vector<Sequence>& list) {
  if (list.empty()) throw std::invalid_argument("transition_stats: empty list");
  TransitionAccumulator acc;
  for (const Sequence& s : list) acc.feed(s);
  return acc.finish();
}

// Stats of a generator run, streamed.
inline TransitionStats transition_stats(ClassId cls, OrderId order, int n) {
  TransitionAccumulator acc;
  auto vis = [&acc](SeqView s) { acc.feed(s); };
  if (order == OrderId::Rgc)
    gen_rgc(cls, n, vis);
  else
    gen_corgc(cls, n, vis);
  return acc.finish();
}

// Index i of the first pair (i, i+1) -- or (N-1, 0) when circular -- whose
// differing positions do not fit in a window of d adjacent indices.
inline std::optional<std::size_t> first_window_violation(
    const std::vector<Sequence>& list, int d, bool circular) {
  if (list.empty()) throw std::invalid_argument("first_window_violation: empty list");
  if (d < 1) throw std::invalid_argument("first_window_violation: d must be >= 1");
  for (std::size_t i = 0; i + 1 < list.size(); ++i)
    if (detail::pair_delta(list[i], list[i + 1]).window > d) return i;
  if (circular && list.size() > 1)
    if (detail::pair_delta(list.back(), list.front()).window > d)
      return list.size() - 1;
  return std::nullopt;
}

// True iff every consecutive pair (and the wrap pair when circular) differs
// in at most d positions, all within a window of d adjacent indices.
inline bool is_d_adjacent_gray(const std::vector<Sequence>& list, int d,
                               bool circular) {
  return !first_window_violation(list, d, circular).has_value();
}

// Descent sequences of length n listed in Co-RGC order, checked for
// 4-adjacency (linear pairs).
inline bool check_conjecture(int n, bool override_guard = false) {
  if (n < 2) throw std::invalid_argument("check_conjecture: n must be >= 2");
  const auto list = oracle_list(ClassId::Descent, n, OrderId::CoRgc, override_guard);
  return is_d_adjacent_gray(list, 4, false);
}

inline constexpr std::array<ClassId, 4> kGenerableClasses = {
    ClassId::Subexcedant, ClassId::Ascent, ClassId::Rgf, ClassId::Staircase};

// Worst-case distance bounds per order and class (SE, A, R, S).
inline constexpr std::array<std::array<int, 4>, 2> kWorstBound = {{
    {1, 3, 3, 3},  // RGC
    {1, 2, 2, 3},  // Co-RGC
}};

struct Table1Cell {
  int bound = 0;
  int observed = 0;
  int attained_at = 0;  // smallest n where observed == bound; 0 if never
};

struct Table1Report {
  int n_min = 2;
  int n_max = 0;
  std::array<std::array<Table1Cell, 4>, 2> cells;  // [order][class]

  bool within_bounds() const {
    for (const auto& row : cells)
      for (const auto& c : row)
        if (c.observed > c.bound) return false;
    return true;
  }
};

// Observed worst-case distance between successive sequences, per class and
// order, over n = 2..n_max, against the theoretical bounds.
inline Table1Report table1_report(int n_max) {
  if (n_max < 2 || n_max > 10)
    throw std::invalid_argument("table1_report: n_max must be in 2..10");
  Table1Report rep;
  rep.n_max = n_max;
  for (int o = 0; o < 2; ++o) {
    for (int c = 0; c < 4; ++c) {
      Table1Cell& cell = rep.cells[o][c];
      cell.bound = kWorstBound[o][c];
      for (int n = 2; n <= n_max; ++n) {
        const auto st = transition_stats(kGenerableClasses[c],
                                         o == 0 ? OrderId::Rgc : OrderId::CoRgc, n);
        if (st.worst > cell.observed) cell.observed = st.worst;
        if (cell.attained_at == 0 && st.worst == cell.bound) cell.attained_at = n;
      }
    }
  }
  return rep;
}

struct Table2Report {
  int n_min = 0;
  int n_max = 0;
  // per n: rendered averages for SE, A, R, S under RGC, then under Co-RGC
  std::vector<std::array<std::string, 8>> rows;
};

// Average distance between successive sequences, rendered to two decimals,
// for n = n_min..n_max.
inline Table2Report table2_report(int n_min, int n_max) {
  if (n_min < 4 || n_min > n_max || n_max > 10)
    throw std::invalid_argument("table2_report: need 4 <= n_min <= n_max <= 10");
  Table2Report rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    std::array<std::string, 8> row;
    for (int o = 0; o < 2; ++o)
      for (int c = 0; c < 4; ++c)
        row[o * 4 + c] =
            transition_stats(kGenerableClasses[c], o == 0 ? OrderId::Rgc : OrderId::CoRgc, n)
                .average_rendered();
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace rgs
