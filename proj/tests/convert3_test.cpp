#include <gtest/gtest.h>

#include "support.hpp"

using namespace mcycle;
namespace ts = testing_support;

namespace {

CyclicSequence x8() { return CyclicSequence(ts::printed(ts::text::ucycle_8_3), 8, 3, Kind::subset); }

}  // namespace

TEST(PairSet, Basics) {
  convert::PairSet p(6, {{2, 1}, {4, 3}});
  EXPECT_TRUE(p.contains(1, 2));
  EXPECT_TRUE(p.contains(3, 4));
  EXPECT_FALSE(p.contains(1, 3));
  EXPECT_EQ(p.partner(4), 3);
  EXPECT_FALSE(p.partner(5).has_value());
  EXPECT_TRUE(p.is_matching());
  p.insert(1, 5);
  EXPECT_FALSE(p.is_matching());
  EXPECT_THROW(p.insert(2, 2), error);
  EXPECT_THROW(p.insert(0, 2), error);
}

TEST(MissingPairs, PrintedUcycle) {
  const auto missing = convert::missing_pairs(x8());
  EXPECT_EQ(missing, convert::PairSet(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
}

TEST(MissingPairs, AlwaysAMatching) {
  for (int n : {8, 10, 11, 13, 14, 16, 17}) {
    const auto x = construct_cycle(n, 3, Kind::subset).cycle;
    const auto missing = convert::missing_pairs(x);
    EXPECT_TRUE(missing.is_matching()) << n;
    EXPECT_LE(missing.size(), static_cast<std::size_t>(n / 2)) << n;
  }
}

TEST(MissingPairs, RejectsRepeatedNeighbours) {
  EXPECT_THROW(convert::cyclic_adjacent_pairs(CyclicSequence({1, 1, 2}, 3, 3, Kind::subset)), error);
}

TEST(BoundaryPermutation, PrintedChoice) {
  const auto x = x8();
  const auto perm = convert::build_permutation(x, convert::missing_pairs(x));
  EXPECT_EQ(perm.x, (std::vector<int>{1, 5, 3, 7, 4, 8, 2, 6}));
  EXPECT_EQ(perm.list, 0);
}

TEST(BoundaryPermutation, OddCaseTable) {
  using convert::PairSet;
  auto seq = [](int first, int last) {
    std::vector<int> s(35, 2);  // only front/back matter to build_permutation
    s.front() = first;
    s.back() = last;
    return CyclicSequence(s, 7, 3, Kind::subset);
  };
  auto covers = [](const convert::BoundaryPermutation& p, const PairSet& m) {
    const auto slots = convert::detail::slot_list(static_cast<int>(p.x.size()), p.list);
    for (auto [a, b] : m) {
      bool found = false;
      for (auto [i, j] : slots) found = found || PairSet(7, {{p.x[i], p.x[j]}}).contains(a, b);
      if (!found) return false;
    }
    return true;
  };
  // neither endpoint missing -> list 1
  PairSet none(7, {{2, 3}, {4, 5}});
  auto p = convert::build_permutation(seq(1, 7), none);
  EXPECT_EQ(p.list, 1);
  EXPECT_TRUE(covers(p, none));
  // first only -> list 1
  PairSet first(7, {{1, 3}, {4, 5}});
  p = convert::build_permutation(seq(1, 7), first);
  EXPECT_EQ(p.list, 1);
  EXPECT_TRUE(covers(p, first));
  // last only -> list 3
  PairSet last(7, {{7, 3}, {4, 5}});
  p = convert::build_permutation(seq(1, 7), last);
  EXPECT_EQ(p.list, 3);
  EXPECT_TRUE(covers(p, last));
  // both -> list 2
  PairSet both(7, {{1, 3}, {7, 5}});
  p = convert::build_permutation(seq(1, 7), both);
  EXPECT_EQ(p.list, 2);
  EXPECT_TRUE(covers(p, both));
  EXPECT_EQ(p.x.front(), 1);
  EXPECT_EQ(p.x.back(), 7);
}

TEST(Convert3, PrintedIntermediateDiffersInOnePair) {
  const auto x = x8();
  const auto perm = convert::build_permutation(x, convert::missing_pairs(x));
  auto xp = convert::double_first_instances(x.symbols(), convert::boundary_pairs(perm));
  auto printed = ts::printed(ts::text::x_prime);
  ASSERT_EQ(xp.size(), 96u);
  ASSERT_EQ(printed.size(), 96u);
  // the printed X' doubles the second "7 2" adjacency of X instead of the first
  EXPECT_EQ(std::vector<int>(xp.begin() + 56, xp.begin() + 60), (std::vector<int>{7, 2, 7, 2}));
  EXPECT_EQ(std::vector<int>(printed.begin() + 68, printed.begin() + 72), (std::vector<int>{7, 2, 7, 2}));
  xp.erase(xp.begin() + 58, xp.begin() + 60);
  printed.erase(printed.begin() + 70, printed.begin() + 72);
  EXPECT_EQ(xp, printed);
}

TEST(Convert3, PrintedResultAndOursBothVerify) {
  const auto xpp = convert::convert3(x8());
  EXPECT_EQ(xpp.size(), 120u);
  EXPECT_TRUE(ts::brute_force_universal(xpp));
  const auto golden = ts::golden("converted_8_3.txt");
  EXPECT_EQ(golden.vec(), ts::printed(ts::text::x_double_prime));
  EXPECT_TRUE(ts::brute_force_universal(golden));
  EXPECT_NE(xpp, golden);
  const auto tail = std::vector<int>(xpp.symbols().end() - 24, xpp.symbols().end());
  EXPECT_EQ(tail, ts::printed("111555333777444888222666"));
}

TEST(Convert3, TransitionBuiltUcycles) {
  for (int n : {8, 10, 11, 13, 14, 16, 17}) {
    const auto x = construct_cycle(n, 3, Kind::subset).cycle;
    const auto m = convert::convert3(x);
    EXPECT_EQ(m.size(), static_cast<std::size_t>(ts::pascal(n + 2, 3))) << n;
    EXPECT_EQ(m.size() - x.size(), static_cast<std::size_t>(n * n)) << n;
    EXPECT_TRUE(ts::brute_force_universal(m)) << n;
  }
}

TEST(Convert3, RejectsNonUcycles) {
  try {
    convert::convert3(CyclicSequence(ts::printed(ts::text::cycle_5_3), 5, 3, Kind::subset));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_ucycle);
  }
  EXPECT_THROW(convert::convert3(CyclicSequence(ts::printed(ts::text::cycle_5_3), 5, 3, Kind::multiset)), error);
}

TEST(Convert2, PrintedExample) {
  const CyclicSequence u(ts::printed(ts::text::ucycle_5_2), 5, 2, Kind::subset);
  const auto m = convert::convert2(u);
  EXPECT_EQ(m.vec(), ts::printed(ts::text::mcycle_5_2));
  EXPECT_EQ(m, ts::golden("mcycle_5_2.txt"));
  EXPECT_EQ(u, ts::golden("ucycle_5_2.txt"));
}

TEST(Convert2, OddGroundSets) {
  for (int n = 3; n <= 15; n += 2) {
    const auto u = construct_direct(n, 2, Kind::subset);
    EXPECT_TRUE(ts::brute_force_universal(convert::convert2(u))) << n;
  }
  EXPECT_THROW(convert::convert2(CyclicSequence({1}, 1, 2, Kind::subset)), error);
}
