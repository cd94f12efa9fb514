#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rgs;
using rgs::test::collect;
using rgs::test::collect_compact;
using rgs::test::load_golden;

TEST_CASE("gen_corgc endpoints") {
  const auto a4 = collect_compact(ClassId::Ascent, OrderId::CoRgc, 4);
  CHECK(a4.size() == 15);
  CHECK(a4.front() == "0123");
  CHECK(a4.back() == "0120");

  for (ClassId c : kGenerableClasses)
    CHECK(collect(c, OrderId::CoRgc, 1) == std::vector<Sequence>{{0}});
}

TEST_CASE("gen_corgc reproduces the golden ascent list for n = 5") {
  CHECK(collect_compact(ClassId::Ascent, OrderId::CoRgc, 5) == load_golden("a5_corgc.txt"));
}

TEST_CASE("gen_corgc equals the oracle, n <= 6") {
  CHECK(collect(ClassId::Subexcedant, OrderId::CoRgc, 3) ==
        oracle_list(ClassId::Subexcedant, 3, OrderId::CoRgc));
  for (ClassId c : kGenerableClasses)
    for (int n = 1; n <= 6; ++n)
      REQUIRE(collect(c, OrderId::CoRgc, n) == oracle_list(c, n, OrderId::CoRgc));
}

TEST_CASE("gen_corgc argument errors") {
  CHECK_THROWS_AS(gen_corgc(ClassId::Ascent, 0, [](SeqView) {}), std::invalid_argument);
  CHECK_THROWS_AS(gen_corgc(ClassId::Descent, 3, [](SeqView) {}), std::invalid_argument);
}

TEST_CASE("gen_corgc windows match the per-class bounds") {
  for (int n = 2; n <= 7; ++n) {
    const auto se = transition_stats(collect(ClassId::Subexcedant, OrderId::CoRgc, n));
    CHECK(se.worst == 1);
    CHECK(se.max_window == 1);

    for (ClassId c : {ClassId::Ascent, ClassId::Rgf}) {
      const auto st = transition_stats(collect(c, OrderId::CoRgc, n));
      CHECK(st.max_window <= 2);
      CHECK(st.circular_window <= 2);
    }

    const auto s = transition_stats(collect(ClassId::Staircase, OrderId::CoRgc, n));
    CHECK(s.max_window <= 3);
    CHECK(s.circular_window <= 3);
    // staircase neighbors differ in one or three positions, never two
    for (std::size_t d = 0; d < s.distance_histogram.size(); ++d)
      if (s.distance_histogram[d] > 0) CHECK((d == 1 || d == 3));
  }
}

TEST_CASE("gen_corgc call accounting and root fan-out") {
  for (ClassId c : kGenerableClasses) {
    for (int n = 1; n <= 8; ++n) {
      const auto m = gen_corgc(c, n, [](SeqView) {});
      CHECK(m.degree_one_calls == 0);
      CHECK(m.total_calls < 2 * m.outputs);
      if (n >= 2) CHECK(m.root_degree == static_cast<std::uint64_t>(n));
    }
  }
}

TEST_CASE("gen_corgc visitor can stop a run early") {
  int seen = 0;
  const auto m = gen_corgc(ClassId::Staircase, 6, [&](SeqView) { return ++seen < 7; });
  CHECK(seen == 7);
  CHECK(m.outputs == 7);
}
