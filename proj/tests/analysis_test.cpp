#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rgs;
using rgs::test::collect;

TEST_CASE("hamming distance") {
  CHECK(hamming(Sequence{0, 1, 0}, Sequence{0, 1, 0}) == 0);
  CHECK(hamming(Sequence{0, 0, 0, 0, 0}, Sequence{0, 0, 0, 0, 1}) == 1);
  CHECK(hamming(Sequence{0, 1, 2, 3, 3}, Sequence{0, 1, 0, 2, 3}) == 2);
  CHECK_THROWS_AS(hamming(Sequence{0}, Sequence{0, 1}), std::invalid_argument);
}

TEST_CASE("average rendering is exact-rational with half-up rounding") {
  CHECK(detail::render_fraction_2dp(59, 52) == "1.13");   // 1.1346..
  CHECK(detail::render_fraction_2dp(57, 51) == "1.12");   // 1.1176..
  CHECK(detail::render_fraction_2dp(10, 10) == "1");
  CHECK(detail::render_fraction_2dp(0, 5) == "0");
  CHECK(detail::render_fraction_2dp(9, 8) == "1.13");     // 1.125 rounds up
  CHECK(detail::render_fraction_2dp(3, 2) == "1.50");
}

TEST_CASE("transition stats over the reference averages") {
  CHECK(transition_stats(ClassId::Ascent, OrderId::Rgc, 5).average_rendered() == "1.13");
  CHECK(transition_stats(ClassId::Ascent, OrderId::CoRgc, 5).average_rendered() == "1.19");
  CHECK(transition_stats(ClassId::Staircase, OrderId::CoRgc, 10).average_rendered() == "1.41");

  for (int n = 2; n <= 8; ++n) {
    for (OrderId o : {OrderId::Rgc, OrderId::CoRgc}) {
      const auto st = transition_stats(ClassId::Subexcedant, o, n);
      CHECK(st.worst == 1);
      CHECK(st.distance_sum == st.pairs());  // average exactly 1
      CHECK(st.average_rendered() == "1");
    }
  }
}

TEST_CASE("transition stats edge cases") {
  CHECK_THROWS_AS(transition_stats(std::vector<Sequence>{}), std::invalid_argument);
  const auto one = transition_stats(std::vector<Sequence>{{0}});
  CHECK(one.count == 1);
  CHECK(one.pairs() == 0);
  CHECK(one.worst == 0);
  CHECK(one.circular_worst == 0);
}

TEST_CASE("d-adjacency checks") {
  CHECK(is_d_adjacent_gray(collect(ClassId::Rgf, OrderId::Rgc, 6), 3, true));
  CHECK(is_d_adjacent_gray(collect(ClassId::Rgf, OrderId::CoRgc, 6), 2, true));
  // the staircase corgc bound 3 is attained at n = 6
  CHECK_FALSE(is_d_adjacent_gray(collect(ClassId::Staircase, OrderId::CoRgc, 6), 2, false));

  const auto bad = std::vector<Sequence>{{0, 0, 0}, {1, 0, 1}};
  CHECK(first_window_violation(bad, 2, false) == 0);
  CHECK(is_d_adjacent_gray(bad, 3, false));
}

TEST_CASE("descent conjecture holds for small n") {
  CHECK(check_conjecture(2));
  CHECK(check_conjecture(5));
  CHECK(check_conjecture(8));
  CHECK_THROWS_AS(check_conjecture(1), std::invalid_argument);
}

TEST_CASE("worst-case table") {
  const auto t1 = table1_report(6);
  CHECK(t1.within_bounds());
  // bounds columns
  const int expected_rgc[4] = {1, 3, 3, 3};
  const int expected_corgc[4] = {1, 2, 2, 3};
  for (int c = 0; c < 4; ++c) {
    CHECK(t1.cells[0][c].bound == expected_rgc[c]);
    CHECK(t1.cells[1][c].bound == expected_corgc[c]);
  }
  // subexcedant lists are 1-Gray codes in both orders
  CHECK(t1.cells[0][0].observed == 1);
  CHECK(t1.cells[1][0].observed == 1);
  // the ascent rgc bound 3 is observed by n = 6
  CHECK(t1.cells[0][1].observed == 3);
  CHECK(t1.cells[0][1].attained_at <= 6);
  CHECK_THROWS_AS(table1_report(1), std::invalid_argument);
}

TEST_CASE("average table matches the reference rows for n = 4..7") {
  const auto t2 = table2_report(4, 7);
  REQUIRE(t2.rows.size() == 4);
  using Row = std::array<std::string, 8>;
  CHECK(t2.rows[0] == Row{"1", "1.21", "1.21", "1.31", "1", "1.14", "1.14", "1.15"});
  CHECK(t2.rows[1] == Row{"1", "1.13", "1.12", "1.29", "1", "1.19", "1.18", "1.24"});
  CHECK(t2.rows[2] == Row{"1", "1.09", "1.07", "1.27", "1", "1.23", "1.20", "1.31"});
  CHECK(t2.rows[3] == Row{"1", "1.06", "1.06", "1.26", "1", "1.25", "1.22", "1.35"});
  CHECK_THROWS_AS(table2_report(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(table2_report(5, 11), std::invalid_argument);
}

TEST_CASE("rgc averages eventually beat corgc averages") {
  // reference observation: rgc is lower on A and R from n = 5, on S from n = 6
  for (int n = 5; n <= 7; ++n) {
    for (ClassId c : {ClassId::Ascent, ClassId::Rgf}) {
      const auto a = transition_stats(c, OrderId::Rgc, n);
      const auto b = transition_stats(c, OrderId::CoRgc, n);
      CHECK(a.distance_sum * b.pairs() < b.distance_sum * a.pairs());
    }
  }
  for (int n = 6; n <= 7; ++n) {
    const auto a = transition_stats(ClassId::Staircase, OrderId::Rgc, n);
    const auto b = transition_stats(ClassId::Staircase, OrderId::CoRgc, n);
    CHECK(a.distance_sum * b.pairs() < b.distance_sum * a.pairs());
  }
}
