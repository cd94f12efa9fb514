#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rgs;
using rgs::test::load_golden;

namespace {

std::vector<std::string> compacted(const std::vector<Sequence>& list) {
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const Sequence& s : list) out.push_back(compact_string(s));
  return out;
}

constexpr std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("oracle reproduces the golden ascent lists for n = 5") {
  const auto rgc = oracle_list(ClassId::Ascent, 5, OrderId::Rgc);
  CHECK(compacted(rgc) == load_golden("a5_rgc.txt"));
  CHECK(compact_string(rgc.front()) == "00000");
  CHECK(compact_string(rgc.back()) == "01000");

  const auto corgc = oracle_list(ClassId::Ascent, 5, OrderId::CoRgc);
  CHECK(compacted(corgc) == load_golden("a5_corgc.txt"));
  CHECK(compact_string(corgc.front()) == "01234");
}

TEST_CASE("golden membership columns for n = 5") {
  // golden-table rows that are not staircase words / rgfs
  const std::set<std::string> not_s5 = {"00102", "01213", "01203", "01202",
                                        "01102", "01023", "01022", "01021",
                                        "01020", "01013", "01002"};
  const std::set<std::string> not_r5 = {"01013"};
  for (const std::string& row : load_golden("a5_rgc.txt")) {
    Sequence s;
    for (char ch : row) s.push_back(ch - '0');
    CHECK(is_member(ClassId::Staircase, s) == (not_s5.count(row) == 0));
    CHECK(is_member(ClassId::Rgf, s) == (not_r5.count(row) == 0));
  }
  // and the filtered sublists are exactly the oracle lists
  for (OrderId o : {OrderId::Rgc, OrderId::CoRgc}) {
    const auto a5 = oracle_list(ClassId::Ascent, 5, o);
    for (ClassId c : {ClassId::Staircase, ClassId::Rgf}) {
      std::vector<Sequence> filtered;
      for (const Sequence& s : a5)
        if (is_member(c, s)) filtered.push_back(s);
      REQUIRE(filtered == oracle_list(c, 5, o));
    }
  }
}

TEST_CASE("cardinalities") {
  CHECK(oracle_list(ClassId::Staircase, 5, OrderId::Rgc).size() == 42);
  CHECK(oracle_list(ClassId::Rgf, 5, OrderId::CoRgc).size() == 52);
  for (ClassId c : kGenerableClasses)
    for (OrderId o : {OrderId::Rgc, OrderId::CoRgc})
      CHECK(oracle_list(c, 1, o) == std::vector<Sequence>{{0}});

  for (int n = 1; n <= 7; ++n) {
    CHECK(oracle_list(ClassId::Subexcedant, n, OrderId::Rgc).size() == factorial(n));
    // order cannot change cardinality
    for (ClassId c : kGenerableClasses)
      CHECK(oracle_list(c, n, OrderId::Rgc).size() ==
            oracle_list(c, n, OrderId::CoRgc).size());
  }
}

TEST_CASE("list endpoints follow the circularity patterns") {
  for (int n = 2; n <= 7; ++n) {
    Sequence zeros(n, 0);
    Sequence last_rgc(n, 0);
    last_rgc[1] = 1;
    Sequence identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    Sequence last_corgc = identity;
    last_corgc[n - 1] = 0;

    for (ClassId c : kGenerableClasses) {
      const auto list = oracle_list(c, n, OrderId::Rgc);
      CHECK(list.front() == zeros);
      CHECK(list.back() == last_rgc);
    }
    for (ClassId c : {ClassId::Ascent, ClassId::Rgf, ClassId::Staircase}) {
      const auto list = oracle_list(c, n, OrderId::CoRgc);
      CHECK(list.front() == identity);
      CHECK(list.back() == last_corgc);
    }
  }
}

TEST_CASE("descent sequences enumerate through the oracle only") {
  const auto d4 = oracle_list(ClassId::Descent, 4, OrderId::CoRgc);
  for (const Sequence& s : d4) REQUIRE(is_member(ClassId::Descent, s));
  CHECK(d4.size() > 0);
  // sorting again is a no-op
  auto again = d4;
  std::sort(again.begin(), again.end(),
            [](const Sequence& a, const Sequence& b) { return corgc_less(a, b); });
  CHECK(again == d4);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(oracle_list(ClassId::Staircase, 10, OrderId::Rgc), resource_guard_error);
  CHECK(oracle_list(ClassId::Staircase, 10, OrderId::Rgc, true).size() == 16796);
  CHECK_THROWS_AS(oracle_list(ClassId::Ascent, 0, OrderId::Rgc), std::invalid_argument);
}
