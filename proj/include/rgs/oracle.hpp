#pragma once

// Definition-level reference: enumerate members by bounded prefix extension,
// then sort with the requested comparator. Exists to be obviously correct,
// not fast. Ground truth for every differential test.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rgs/orders.hpp"
#include "rgs/sequence.hpp"

namespace rgs {

struct resource_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kOracleGuard = 9;

// All length-n members of the class (Descent included), sorted ascending
// under the selected order.
inline std::vector<Sequence> oracle_list(ClassId cls, int n, OrderId order,
                                         bool override_guard = false) {
  if (n < 1) throw std::invalid_argument("oracle_list: n must be >= 1");
  if (n > kOracleGuard && !override_guard)
    throw resource_guard_error("oracle_list: n > 9 refused without override");
  const StatId st = class_stat(cls);
  std::vector<Sequence> out;
  Sequence cur{0};
  auto rec = [&](auto&& self, int v) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (Digit x = 0; x <= v + 1; ++x) {
      const int nv = detail::stat_append(st, v, cur.back(), x);
      cur.push_back(x);
      self(self, nv);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [order](const Sequence& a, const Sequence& b) { return less(order, a, b); });
  return out;
}

}  // namespace rgs
