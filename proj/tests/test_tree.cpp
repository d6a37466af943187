#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "minfact/ncp.hpp"
#include "minfact/oracle.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/tree.hpp"

using namespace minfact;

TEST_CASE("dual tree of singletons and of the full block") {
  const auto t = dual_tree(NonCrossingPartition::singletons(3));
  CHECK(t.parents() == std::vector<int>{-1, 0, 1, 1});
  CHECK(t.black_count() == 3);
  CHECK(t.white_count() == 1);
  const auto f = dual_tree(NonCrossingPartition::full(4));
  CHECK(f.parents() == std::vector<int>{-1, 0, 0, 0, 0});
  CHECK(f.black_count() == 1);
  CHECK(f.white_count() == 4);
}

TEST_CASE("dual tree of the example partition") {
  const NonCrossingPartition p(12, testing::example_blocks());
  const auto t = dual_tree(p);
  CHECK(t.parents() == testing::example_dual_parents());
  CHECK(t.black_count() == p.block_count());
  CHECK(t.white_count() == kreweras(p).block_count());
  CHECK(partition_of_tree(t) == p);
  // Corner labels: block {6,7,11,12} sits at the root with 12 at the root corner.
  const auto cl = corner_labels(t);
  CHECK(cl.labels[0] == std::vector<int>{6, 7, 11, 12});
}

TEST_CASE("partition_of_tree on the smallest tree") {
  CHECK(partition_of_tree(BiTypeTree({-1, 0})) == NonCrossingPartition(1, {{1}}));
}

TEST_CASE("contour sequence") {
  CHECK(contour_sequence(PlaneTree({-1})) == std::vector<int>{0});
  CHECK(contour_sequence(PlaneTree({-1, 0, 0})) == std::vector<int>{0, 1, 0, 2, 0});
  for (const auto& t : oracle::enumerate_plane_trees(8)) {
    const auto c = contour_sequence(t);
    CHECK(c.size() == static_cast<std::size_t>(2 * t.edges() + 1));
    std::vector<int> visits(static_cast<std::size_t>(t.size()), 0);
    for (std::size_t i = 1; i < c.size(); ++i) {
      const int a = c[i - 1], b = c[i];
      CHECK((t.parent(b) == a || t.parent(a) == b));
      ++visits[static_cast<std::size_t>(t.parent(b) == a ? b : a)];
    }
    for (int v = 1; v < t.size(); ++v) CHECK(visits[static_cast<std::size_t>(v)] == 2);
  }
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(PlaneTree({0}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneTree({-1, 0, 2}), std::invalid_argument);
  // Not a preorder listing: 3 hangs under 1 after 2 closed 1's subtree.
  CHECK_THROWS_AS(PlaneTree({-1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("round trip on all non-crossing partitions, degree correspondence") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : oracle::enumerate_noncrossing_partitions(n)) {
      const auto t = dual_tree(p);
      REQUIRE(partition_of_tree(t) == p);
      // Black vertices with i children <-> blocks of size i + 1, the root <-> a block of size i.
      std::vector<int> black_sizes, block_sizes, white_sizes, dual_sizes;
      for (int v = 0; v < t.size(); ++v) {
        const int k = t.child_count(v);
        if (t.is_black(v)) black_sizes.push_back(v == 0 ? k : k + 1);
        else white_sizes.push_back(k + 1);
      }
      for (const auto& b : p.blocks()) block_sizes.push_back(static_cast<int>(b.size()));
      const auto kp = kreweras(p);
      for (const auto& b : kp.blocks()) dual_sizes.push_back(static_cast<int>(b.size()));
      std::sort(black_sizes.begin(), black_sizes.end());
      std::sort(block_sizes.begin(), block_sizes.end());
      std::sort(white_sizes.begin(), white_sizes.end());
      std::sort(dual_sizes.begin(), dual_sizes.end());
      CHECK(black_sizes == block_sizes);
      CHECK(white_sizes == dual_sizes);
    }
  }
}

TEST_CASE("block_label_bounds on the chain tree") {
  const BiTypeTree t({-1, 0, 1});
  const auto b = block_label_bounds(t, 1);
  CHECK(b.x == 1);
  CHECK(b.y == 1);
  CHECK(b.desc == 0);
  CHECK_THROWS_AS(block_label_bounds(t, 0), std::out_of_range);
  CHECK_THROWS_AS(block_label_bounds(t, 2), std::out_of_range);
}

TEST_CASE("corner arithmetic agrees with direct labelling on all trees <= 9 vertices") {
  for (const auto& t : oracle::enumerate_plane_trees(9)) {
    if (t.size() < 2) continue;
    const auto cl = corner_labels(t);
    const int whites = t.white_count();
    // Sum of black child counts over lexicographically smaller black vertices.
    std::vector<int> prefix(static_cast<std::size_t>(t.black_count()) + 1, 0);
    for (int r = 0; r < t.black_count(); ++r)
      prefix[static_cast<std::size_t>(r) + 1] = prefix[static_cast<std::size_t>(r)] + t.child_count(t.black_vertices()[static_cast<std::size_t>(r)]);
    for (int i = 1; i < t.black_count(); ++i) {
      const auto b = block_label_bounds(t, i);
      const auto& lab = cl.labels[static_cast<std::size_t>(i)];
      CHECK(b.x == lab.front());
      CHECK(b.y == lab.back());
      CHECK(b.y - b.x == b.desc);
      CHECK(b.x == i + prefix[static_cast<std::size_t>(i)] - b.ell);
      CHECK(i <= b.x);
      CHECK(b.x <= i + whites);
      CHECK(i + b.black_desc <= b.y);
      CHECK(b.y <= i + b.black_desc + 2 * whites);
    }
  }
}

TEST_CASE("reduced black subtree") {
  const auto r = reduced_black_subtree(BiTypeTree({-1, 0, 1, 1}));
  CHECK(r.parents() == std::vector<int>{-1, 0, 0});
  CHECK(reduced_black_subtree(dual_tree(NonCrossingPartition::singletons(3))).parents() == std::vector<int>{-1, 0, 0});
  for (const auto& t : oracle::enumerate_plane_trees(9)) CHECK(lukasiewicz_path(reduced_black_subtree(t)) == hb_paths(t).b_bar());
}
