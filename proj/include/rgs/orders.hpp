#pragma once

// The two Gray code order relations and the m-ary reflected Gray code list.
//
// Definitions index positions from 1; storage is 0-indexed and the
// translation happens entirely inside this header.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

#include "rgs/sequence.hpp"

namespace rgs {

enum class OrderId { Rgc, CoRgc };

constexpr const char* name(OrderId o) {
  return o == OrderId::Rgc ? "rgc" : "corgc";
}

// s precedes t iff at the leftmost differing position the digits are
// ascending when s_1 + ... + s_{k-1} is even and descending when odd.
inline std::strong_ordering rgc_compare(SeqView s, SeqView t) {
  if (s.size() != t.size())
    throw std::invalid_argument("rgc_compare: length mismatch");
  int parity = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != t[i]) return parity == 0 ? s[i] <=> t[i] : t[i] <=> s[i];
    parity ^= s[i] & 1;
  }
  return std::strong_ordering::equal;
}

// s precedes t iff at the rightmost differing position k the digits are
// descending when s_{k+1} + ... + s_n + (n - k) is even and ascending when
// odd.
inline std::strong_ordering corgc_compare(SeqView s, SeqView t) {
  if (s.size() != t.size())
    throw std::invalid_argument("corgc_compare: length mismatch");
  int parity = 0;  // (suffix sum + suffix length) mod 2, grown right to left
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] != t[i]) return parity == 0 ? t[i] <=> s[i] : s[i] <=> t[i];
    parity ^= (s[i] + 1) & 1;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(OrderId o, SeqView s, SeqView t) {
  return o == OrderId::Rgc ? rgc_compare(s, t) : corgc_compare(s, t);
}

inline bool rgc_less(SeqView s, SeqView t) { return rgc_compare(s, t) < 0; }
inline bool corgc_less(SeqView s, SeqView t) { return corgc_compare(s, t) < 0; }
inline bool less(OrderId o, SeqView s, SeqView t) { return compare(o, s, t) < 0; }

// All m^n sequences over {0..m-1} in RGC order; successive entries differ
// in one position by +1 or -1.
inline std::vector<Sequence> rgc_list(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("rgc_list: negative argument");
  if (m == 0 && n > 0) throw std::invalid_argument("rgc_list: m = 0 with n > 0");
  std::vector<Sequence> out;
  Sequence cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int k, int parity) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    if (parity == 0) {
      for (Digit d = 0; d < m; ++d) {
        cur[k] = d;
        self(self, k + 1, parity ^ (d & 1));
      }
    } else {
      for (Digit d = m - 1; d >= 0; --d) {
        cur[k] = d;
        self(self, k + 1, parity ^ (d & 1));
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

// RGC-to-CoRGC transform: complement every digit when m is even, only the
// digits at odd (1-indexed) positions when m is odd, then reverse.
inline Sequence corgc_transform(SeqView s, int m) {
  Sequence r(s.begin(), s.end());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || r[i] >= m)
      throw std::invalid_argument("corgc_transform: digit out of 0..m-1");
    if (m % 2 == 0 || i % 2 == 0) r[i] = m - 1 - r[i];
  }
  std::reverse(r.begin(), r.end());
  return r;
}

// rgc_list transformed element-wise; the result is sorted under corgc_compare.
inline std::vector<Sequence> corgc_list(int n, int m) {
  std::vector<Sequence> out = rgc_list(n, m);
  for (Sequence& s : out) s = corgc_transform(s, m);
  return out;
}

}  // namespace rgs
