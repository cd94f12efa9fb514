#pragma once

// Admissible-suffix calculus for the Co-RGC order: the defining set alpha of
// a suffix, the minimum statistic value mu any completing prefix must
// provide, and the first/last sequences of a prefix- or suffix-constrained
// block.
//
// alpha and mu are computed by a right-to-left scan over the suffix; each
// step classifies the next digit against the current (mu, head) state.  A
// suffix of length L is positioned at k+1..n with k = n - L.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rgs/orders.hpp"
#include "rgs/sequence.hpp"

namespace rgs {

enum class End { First, Last };

struct SuffixInfo {
  Sequence suffix;
  int full_length = 0;
  int mu = 0;
  std::vector<Digit> alpha;
};

namespace detail {

inline void require_suffix_class(ClassId c, const char* op) {
  if (c != ClassId::Subexcedant && c != ClassId::Ascent && c != ClassId::Rgf &&
      c != ClassId::Staircase)
    throw std::invalid_argument(std::string(op) + ": class not supported");
}

// (mu, head) state of a suffix, extended one digit at a time right to left.
struct SuffixWalk {
  ClassId cls;
  int n;
  int k;  // free positions to the left: the suffix occupies k+1..n
  int mu = 0;
  Digit head = 0;  // b_{k+1}

  static SuffixWalk start(ClassId c, int n) { return {c, n, n}; }

  bool empty() const { return k == n; }

  // Defining set of the current suffix, ascending. Empty when the suffix
  // already has full length.
  std::vector<Digit> alpha() const {
    std::vector<Digit> a;
    auto range = [&a](int lo, int hi) {
      for (int x = lo; x <= hi; ++x) a.push_back(x);
    };
    if (empty()) {
      range(0, n - 1);
      return a;
    }
    if (k == 0) return a;
    switch (cls) {
      case ClassId::Subexcedant:
        range(0, k - 1);
        break;
      case ClassId::Ascent:
        if (mu == k || (mu == k - 1 && head == 0)) {
          a.push_back(k - 1);
        } else if (mu == k - 1) {  // 0 < head < k
          range(0, head - 1);
          a.push_back(k - 1);
        } else {
          range(0, k - 1);
        }
        break;
      case ClassId::Rgf:
        if (mu == k || (mu == k - 1 && head < k - 1))
          a.push_back(k - 1);
        else
          range(0, k - 1);
        break;
      case ClassId::Staircase:
        if (head == k)
          a.push_back(k - 1);
        else
          range(std::max(0, head - 1), k - 1);
        break;
      case ClassId::Descent:
        break;
    }
    return a;
  }

  bool alpha_contains(Digit x) const {
    for (Digit d : alpha())
      if (d == x) return true;
    return false;
  }

  // Extend the suffix with x on the left. Returns false when x is not in
  // the defining set (the extended suffix is not admissible).
  bool prepend(Digit x) {
    if (!alpha_contains(x)) return false;
    if (empty()) {
      mu = cls == ClassId::Subexcedant ? n - 1 : x;
    } else {
      switch (cls) {
        case ClassId::Subexcedant:
          mu = mu - 1;
          break;
        case ClassId::Ascent:
          mu = x >= mu ? x : (x >= head ? mu : mu - 1);
          break;
        case ClassId::Rgf:
          mu = x >= mu ? x : (head < mu ? mu : mu - 1);
          break;
        case ClassId::Staircase:
          mu = x;
          break;
        case ClassId::Descent:
          return false;
      }
    }
    head = x;
    --k;
    return true;
  }
};

// Runs the walk over b; nullopt when b is not admissible.
inline std::optional<SuffixWalk> walk_suffix(ClassId c, SeqView b, int n) {
  SuffixWalk w = SuffixWalk::start(c, n);
  for (std::size_t i = b.size(); i-- > 0;)
    if (!w.prepend(b[i])) return std::nullopt;
  return w;
}

}  // namespace detail

// True iff some member of the class of length n ends with b.
inline bool is_admissible(ClassId c, SeqView b, int n) {
  detail::require_suffix_class(c, "is_admissible");
  if (b.empty() || static_cast<int>(b.size()) > n)
    throw std::invalid_argument("is_admissible: suffix length must be in 1..n");
  return detail::walk_suffix(c, b, n).has_value();
}

namespace detail {

// Staircase alpha and mu depend on the leading digit alone, so they are
// evaluated without walking the tail. The other classes need mu of the
// tail and go through the full right-to-left scan, which validates as it
// goes.
inline SuffixWalk require_walk(ClassId c, SeqView b, int n, const char* op) {
  if (c == ClassId::Staircase) {
    const int k = n - static_cast<int>(b.size());
    const Digit head = b.front();
    if (head < 0 || head > k)
      throw std::invalid_argument(std::string(op) + ": suffix is not admissible");
    SuffixWalk w{c, n, k};
    w.mu = head;
    w.head = head;
    return w;
  }
  auto w = walk_suffix(c, b, n);
  if (!w) throw std::invalid_argument(std::string(op) + ": suffix is not admissible");
  return *w;
}

}  // namespace detail

// Defining set of the suffix b; {0..n-1} for the empty suffix, empty for a
// full-length suffix.
inline std::vector<Digit> alpha(ClassId c, SeqView b, int n) {
  detail::require_suffix_class(c, "alpha");
  if (static_cast<int>(b.size()) > n)
    throw std::invalid_argument("alpha: suffix longer than n");
  if (b.empty()) return detail::SuffixWalk::start(c, n).alpha();
  return detail::require_walk(c, b, n, "alpha").alpha();
}

// Minimum statistic value a completing length-(k+1) prefix must provide.
inline int mu(ClassId c, SeqView b, int n) {
  detail::require_suffix_class(c, "mu");
  if (b.empty() || static_cast<int>(b.size()) > n)
    throw std::invalid_argument("mu: suffix length must be in 1..n");
  return detail::require_walk(c, b, n, "mu").mu;
}

inline SuffixInfo suffix_info(ClassId c, SeqView b, int n) {
  detail::require_suffix_class(c, "suffix_info");
  if (b.empty() || static_cast<int>(b.size()) > n)
    throw std::invalid_argument("suffix_info: suffix length must be in 1..n");
  auto w = detail::require_walk(c, b, n, "suffix_info");
  return SuffixInfo{Sequence(b.begin(), b.end()), n, w.mu, w.alpha()};
}

// First or last length-n member, under RGC order, among those starting with
// the member prefix a. Extends greedily: an odd prefix sum selects the
// smallest next digit for Last (largest for First), an even sum the
// opposite.
inline Sequence extreme_with_prefix(ClassId c, SeqView a, int n, End end) {
  if (c == ClassId::Descent)
    throw std::invalid_argument("extreme_with_prefix: descent unsupported");
  if (!is_member(c, a))
    throw std::invalid_argument("extreme_with_prefix: prefix is not a member");
  if (static_cast<int>(a.size()) > n)
    throw std::invalid_argument("extreme_with_prefix: prefix longer than n");
  const StatId st = class_stat(c);
  Sequence s(a.begin(), a.end());
  int v = stat(st, a);
  int parity = digit_sum(a) & 1;
  while (static_cast<int>(s.size()) < n) {
    const bool lowest =
        end == End::Last ? parity == 1 : parity == 0;
    const Digit x = lowest ? 0 : v + 1;
    v = detail::stat_append(st, v, s.back(), x);
    parity ^= x & 1;
    s.push_back(x);
  }
  return s;
}

// First or last length-n member, under Co-RGC order, among those ending with
// the admissible suffix b (empty b means the whole list). Not available for
// subexcedant sequences: their Co-RGC structure comes from a product-space
// restriction and has no closed-form suffix pattern.
inline Sequence extreme_with_suffix(ClassId c, SeqView b, int n, End end) {
  if (c != ClassId::Ascent && c != ClassId::Rgf && c != ClassId::Staircase)
    throw std::invalid_argument(
        "extreme_with_suffix: supported for ascent/rgf/staircase only");
  if (static_cast<int>(b.size()) > n)
    throw std::invalid_argument("extreme_with_suffix: suffix longer than n");
  auto w = detail::walk_suffix(c, b, n);
  if (!w) throw std::invalid_argument("extreme_with_suffix: suffix not admissible");
  // parity of b_{k+1} + ... + b_n + (n - k)
  int parity = (digit_sum(b) + static_cast<int>(b.size())) & 1;
  std::vector<Digit> rev(b.rbegin(), b.rend());
  while (w->k > 0) {
    const std::vector<Digit> a = w->alpha();
    // Even parity orders the position descending, so First takes the
    // largest value; odd parity the smallest. Last is the mirror image.
    const bool largest = end == End::Last ? parity == 1 : parity == 0;
    const Digit x = largest ? a.back() : a.front();
    w->prepend(x);
    parity ^= (x + 1) & 1;
    rev.push_back(x);
  }
  return Sequence(rev.rbegin(), rev.rend());
}

}  // namespace rgs
