#pragma once

// Suffix partitioned generation in Co-RGC order, constant amortized time.
//
// The work buffer holds n+1 positions: s_{n+1} is a dummy 0 so that mu and
// alpha of the suffix s_k..s_n equal those of s_k..s_n 0. Recursion proceeds
// right to left from the initial buffer 0 1 .. n-1 0. When the defining set
// of the current suffix is the singleton {k-2} the call writes the remaining
// forced digits itself and emits, which removes the would-be chain of
// degree-one calls (path elimination).
//
// The buffer is never reset between emissions: positions left of an
// emission's cutoff keep their forced values 0,1,2,.. from initialization
// and from earlier emissions, and each forced write re-establishes that
// pattern one position further left.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rgs/gen_prefix.hpp"
#include "rgs/sequence.hpp"

namespace rgs {

namespace detail {

template <ClassId C, class Visitor, class Observer>
class SuffixGen {
 public:
  SuffixGen(int n, Visitor& visit, Observer& observe)
      : n_(n), buf_(static_cast<std::size_t>(n) + 2), visit_(visit), observe_(observe) {
    for (int i = 1; i <= n_; ++i) buf_[i] = i - 1;
    buf_[n_ + 1] = 0;  // dummy
  }

  CatMetrics run() {
    metrics_.root_degree = call(n_ + 1, 0, 0, 0);
    return metrics_;
  }

 private:
  // mu of the suffix s_m..s_n 0 with s_m = i, from w = mu(s_{m+1}..s_n 0).
  int mu_step(int m, Digit i, int w) const {
    if constexpr (C == ClassId::Subexcedant) {
      return m == n_ ? n_ - 1 : w - 1;
    } else if constexpr (C == ClassId::Ascent) {
      if (i >= w) return i;
      return i >= buf_[m + 1] ? w : w - 1;
    } else if constexpr (C == ClassId::Rgf) {
      if (i >= w) return i;
      return buf_[m + 1] < w ? w : w - 1;
    } else {
      return i;
    }
  }

  // True when the defining set of s_m..s_n 0 is the singleton {m-2}; also
  // writes the forced digits left of s_m (writes left of s_1 are dropped).
  // At m = 2 the defining set is always {0}: the rgf and staircase case
  // tables do not cover that corner on their own, so it is tested
  // explicitly, keeping the call tree free of degree-one calls.
  bool degree_one(int m, int v) {
    if constexpr (C == ClassId::Subexcedant) {
      return m == 2;
    } else if constexpr (C == ClassId::Ascent) {
      if (v == m - 1 || (v == m - 2 && buf_[m] == 0)) {
        poke(m - 1, m - 2);
        return true;
      }
      return false;
    } else if constexpr (C == ClassId::Rgf) {
      if (m == 2 || v == m - 1 || (v == m - 2 && buf_[m] < m - 2)) {
        poke(m - 1, m - 2);
        return true;
      }
      return false;
    } else {
      if (m == 2 || buf_[m] == m - 1) {
        poke(m - 1, m - 2);
        poke(m - 2, m - 3);
        return true;
      }
      return false;
    }
  }

  // Lowest value in the defining set of s_m..s_n 0.
  int lowest(int m) const {
    if constexpr (C == ClassId::Staircase) {
      return buf_[m] > 1 && buf_[m] <= m - 2 ? buf_[m] - 1 : 0;
    } else {
      return 0;
    }
  }

  // Second largest value in the defining set (the largest is always m-2).
  int second_largest(int m, [[maybe_unused]] int w) const {
    if constexpr (C == ClassId::Ascent) {
      if (w == m - 2 && buf_[m] > 0 && buf_[m] < m - 1) return buf_[m] - 1;
    }
    return m - 3;
  }

  void poke(int idx, Digit val) {
    if (idx >= 1) buf_[idx] = val;
  }

  std::uint64_t call(int k, Digit x, int dir, int v) {
    ++metrics_.total_calls;
    const int depth = n_ + 2 - k;
    if (depth > metrics_.max_depth) metrics_.max_depth = depth;
    buf_[k] = x;
    observe_.enter(k, suffix_view(k));
    const int u = mu_step(k, x, v);
    std::uint64_t degree = 0;
    if (degree_one(k, u)) {
      ++metrics_.outputs;
      if (!invoke_visitor(visit_, SeqView(buf_.data() + 1, static_cast<std::size_t>(n_))))
        stopped_ = true;
    } else {
      const int c = lowest(k);
      const int d = second_largest(k, u);
      if (dir % 2 == 1) {
        for (int i = c; i <= d && !stopped_; ++i) {
          ++degree;
          call(k - 1, i, i, u);
        }
      }
      if (!stopped_) {
        ++degree;
        call(k - 1, k - 2, (k - 1 - dir) % 2, u);
      }
      if (dir % 2 == 0) {
        for (int i = d; i >= c && !stopped_; --i) {
          ++degree;
          call(k - 1, i, i + 1, u);
        }
      }
      if (degree == 1) ++metrics_.degree_one_calls;
    }
    observe_.leave();
    return degree;
  }

  // s_k..s_n without the dummy; empty for the root call at k = n+1.
  SeqView suffix_view(int k) const {
    if (k > n_) return SeqView();
    return SeqView(buf_.data() + k, static_cast<std::size_t>(n_ - k + 1));
  }

  int n_;
  std::vector<Digit> buf_;  // 1-indexed; dummy at n+1
  Visitor& visit_;
  Observer& observe_;
  CatMetrics metrics_;
  bool stopped_ = false;
};

}  // namespace detail

// Generates every length-n member of the class in strictly increasing
// Co-RGC order and returns the call metrics. For n >= 2 the main call
// initiates exactly n recursive calls (a natural parallel split point,
// though runs here are single-threaded).
template <SequenceVisitor Visitor, CallObserver Observer>
CatMetrics gen_corgc(ClassId cls, int n, Visitor&& visit, Observer&& observe) {
  if (n < 1) throw std::invalid_argument("gen_corgc: n must be >= 1");
  using V = std::remove_reference_t<Visitor>;
  using O = std::remove_reference_t<Observer>;
  switch (cls) {
    case ClassId::Subexcedant:
      return detail::SuffixGen<ClassId::Subexcedant, V, O>(n, visit, observe).run();
    case ClassId::Ascent:
      return detail::SuffixGen<ClassId::Ascent, V, O>(n, visit, observe).run();
    case ClassId::Rgf:
      return detail::SuffixGen<ClassId::Rgf, V, O>(n, visit, observe).run();
    case ClassId::Staircase:
      return detail::SuffixGen<ClassId::Staircase, V, O>(n, visit, observe).run();
    case ClassId::Descent:
      break;
  }
  throw std::invalid_argument("gen_corgc: descent sequences are not supported");
}

template <SequenceVisitor Visitor>
CatMetrics gen_corgc(ClassId cls, int n, Visitor&& visit) {
  NullObserver observe;
  return gen_corgc(cls, n, visit, observe);
}

}  // namespace rgs
