#pragma once

// Core sequence model: the six statistics, membership tests for the
// restricted growth families, and the prefix bound omega.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgs {

using Digit = int;
using Sequence = std::vector<Digit>;
using SeqView = std::span<const Digit>;

// The five families. Descent exists only for membership tests and the
// oracle (conjecture checking); omega and the generators reject it.
enum class ClassId { Subexcedant, Ascent, Rgf, Staircase, Descent };

enum class StatId { Len, Asc, Lev, Desc, Max, LastValue };

constexpr const char* name(ClassId c) {
  switch (c) {
    case ClassId::Subexcedant: return "subexcedant";
    case ClassId::Ascent: return "ascent";
    case ClassId::Rgf: return "rgf";
    case ClassId::Staircase: return "staircase";
    case ClassId::Descent: return "descent";
  }
  return "?";
}

constexpr const char* name(StatId s) {
  switch (s) {
    case StatId::Len: return "len";
    case StatId::Asc: return "asc";
    case StatId::Lev: return "lev";
    case StatId::Desc: return "desc";
    case StatId::Max: return "max";
    case StatId::LastValue: return "last";
  }
  return "?";
}

// Statistic whose growth bound defines each family.
constexpr StatId class_stat(ClassId c) {
  switch (c) {
    case ClassId::Subexcedant: return StatId::Len;
    case ClassId::Ascent: return StatId::Asc;
    case ClassId::Rgf: return StatId::Max;
    case ClassId::Staircase: return StatId::LastValue;
    case ClassId::Descent: return StatId::Desc;
  }
  return StatId::Len;
}

inline int stat(StatId st, SeqView s) {
  if (s.empty()) throw std::invalid_argument("stat: empty sequence");
  switch (st) {
    case StatId::Len:
      return static_cast<int>(s.size()) - 1;
    case StatId::Asc: {
      int c = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) c += s[i] < s[i + 1];
      return c;
    }
    case StatId::Lev: {
      int c = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) c += s[i] == s[i + 1];
      return c;
    }
    case StatId::Desc: {
      int c = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) c += s[i] > s[i + 1];
      return c;
    }
    case StatId::Max:
      return *std::max_element(s.begin(), s.end());
    case StatId::LastValue:
      return s.back();
  }
  throw std::invalid_argument("stat: unknown statistic");
}

namespace detail {

// stat(prefix + next) from stat(prefix), in O(1).
inline int stat_append(StatId st, int v, Digit last, Digit next) {
  switch (st) {
    case StatId::Len: return v + 1;
    case StatId::Asc: return v + (next > last ? 1 : 0);
    case StatId::Lev: return v + (next == last ? 1 : 0);
    case StatId::Desc: return v + (next < last ? 1 : 0);
    case StatId::Max: return std::max(v, next);
    case StatId::LastValue: return next;
  }
  return v;
}

}  // namespace detail

// Total predicate: any integer array is accepted, non-members (including
// sequences not starting with 0) simply yield false.
inline bool is_member(ClassId c, SeqView s) {
  if (s.empty() || s.front() != 0) return false;
  const StatId st = class_stat(c);
  int v = 0;  // every statistic is 0 on the one-element prefix [0]
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] > v + 1) return false;
    v = detail::stat_append(st, v, s[k - 1], s[k]);
  }
  return true;
}

// Largest value by which a member prefix can be extended: stat(prefix) + 1.
inline int omega(ClassId c, SeqView prefix) {
  if (c == ClassId::Descent)
    throw std::invalid_argument("omega: descent sequences are not supported");
  if (!is_member(c, prefix))
    throw std::invalid_argument("omega: prefix is not a member of the class");
  return stat(class_stat(c), prefix) + 1;
}

inline int digit_sum(SeqView s) {
  return std::accumulate(s.begin(), s.end(), 0);
}

inline std::string spaced_string(SeqView s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::string csv_string(SeqView s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

// Digit string; only meaningful while every value is a single digit.
inline std::string compact_string(SeqView s) {
  std::string out;
  out.reserve(s.size());
  for (Digit d : s) {
    if (d < 0 || d > 9)
      throw std::invalid_argument("compact_string: digit out of 0..9");
    out += static_cast<char>('0' + d);
  }
  return out;
}

}  // namespace rgs
