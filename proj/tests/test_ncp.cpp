#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fixtures.hpp"
#include "minfact/ncp.hpp"
#include "minfact/oracle.hpp"

using namespace minfact;

namespace {

std::vector<std::size_t> sizes(const NonCrossingPartition& p) {
  std::vector<std::size_t> s;
  for (const auto& b : p.blocks()) s.push_back(b.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("is_noncrossing") {
  CHECK_FALSE(is_noncrossing(SetPartition{4, {{1, 3}, {2, 4}}}));
  CHECK(is_noncrossing(SetPartition{5, {{1}, {2}, {3}, {4}, {5}}}));
  CHECK(is_noncrossing(SetPartition{12, testing::example_blocks()}));
  CHECK_THROWS_AS(is_noncrossing(SetPartition{3, {{1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(NonCrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("stack scan agrees with the quadruple scan on all set partitions of [7]") {
  // Restricted growth strings.
  const int n = 7;
  std::vector<int> rgs(n, 0);
  int checked = 0;
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      SetPartition p{n, std::vector<std::vector<int>>(static_cast<std::size_t>(maxb + 1))};
      for (int x = 0; x < n; ++x) p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
      CHECK(is_noncrossing(p) == oracle::is_noncrossing_quadruple(p));
      ++checked;
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  rec(1, 0);
  CHECK(checked == 877);
}

TEST_CASE("Catalan counts") {
  CHECK(oracle::enumerate_noncrossing_partitions(3).size() == 5);
  CHECK(oracle::enumerate_noncrossing_partitions(4).size() == 14);
  CHECK(oracle::enumerate_noncrossing_partitions(8).size() == 1430);
}

TEST_CASE("kreweras complement of the example partition") {
  const NonCrossingPartition p(12, testing::example_blocks());
  // The printed complement omits the singleton {9}; it is forced by the block count n + 1 - 6 = 7.
  const NonCrossingPartition expected(12, {{1, 2}, {3, 4}, {5, 12}, {6}, {7, 8, 10}, {9}, {11}});
  CHECK(kreweras(p) == expected);
}

TEST_CASE("kreweras of singletons is the full block") {
  for (int n = 1; n <= 6; ++n) CHECK(kreweras(NonCrossingPartition::singletons(n)) == NonCrossingPartition::full(n));
}

TEST_CASE("kreweras invariants for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : oracle::enumerate_noncrossing_partitions(n)) {
      const auto k = kreweras(p);
      const auto kk = kreweras(k);
      CHECK(k.block_count() + p.block_count() == n + 1);
      CHECK(kk == rotate(p, -1));
      auto a = sizes(p), b = sizes(k), c = sizes(kk);
      a.insert(a.end(), b.begin(), b.end());
      b.insert(b.end(), c.begin(), c.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("geodesic_perm_of has increasing cycles on the blocks") {
  const NonCrossingPartition p(12, testing::example_blocks());
  const auto s = geodesic_perm_of(p);
  CHECK(s(1) == 3);
  CHECK(s(5) == 1);
  CHECK(s(7) == 11);
  CHECK(s(12) == 6);
  CHECK(NonCrossingPartition(cycle_partition(s)) == p);
}

TEST_CASE("rotate") {
  const NonCrossingPartition p(3, {{1, 2}, {3}});
  CHECK(rotate(p, 0) == p);
  CHECK(rotate(p, 3) == p);
  CHECK(rotate(p, 1) == NonCrossingPartition(3, {{2, 3}, {1}}));
}
