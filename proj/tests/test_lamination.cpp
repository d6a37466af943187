#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "minfact/lamination.hpp"
#include "minfact/levy.hpp"
#include "minfact/ncp.hpp"
#include "minfact/oracle.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/rng.hpp"
#include "minfact/samplers.hpp"
#include "minfact/tree.hpp"

using namespace minfact;

namespace {

std::set<std::pair<int, int>> vertex_pairs(const Lamination& l) {
  std::set<std::pair<int, int>> out;
  for (const auto& c : l.chords) {
    int a = static_cast<int>(std::lround(c.s * l.n)), b = static_cast<int>(std::lround(c.t * l.n));
    if (a == 0) a = l.n;
    if (b == 0) b = l.n;
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

// Hausdorff distance by dense sampling of both chord unions.
double brute_hausdorff(const Lamination& a, const Lamination& b) {
  auto sample = [](const Lamination& l) {
    std::vector<Point> pts;
    for (const auto& c : l.chords) {
      const Point p = point_at(c.s), q = point_at(c.t);
      for (int i = 0; i <= 2000; ++i) {
        const double t = i / 2000.0;
        pts.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    return pts;
  };
  const auto pa = sample(a), pb = sample(b);
  auto directed = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    double worst = 0;
    for (const auto& p : x) {
      double best = 1e9;
      for (const auto& q : y) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

}  // namespace

TEST_CASE("points use the clockwise orientation") {
  const Point p = point_at(0.25);
  CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(-1.0));
  CHECK(chord_length(vertex_chord(12, 6, 12)) == doctest::Approx(2.0));
}

TEST_CASE("partition laminations") {
  CHECK(lam_of_partition(NonCrossingPartition::singletons(5)).chords.empty());
  CHECK(lam_of_partition(NonCrossingPartition(3, {{1, 2}, {3}})).chords.size() == 1);
  const auto P = lam_of_partition(NonCrossingPartition(12, testing::example_blocks()));
  const std::set<std::pair<int, int>> expected{{1, 3}, {3, 5}, {1, 5}, {6, 7}, {7, 11}, {11, 12}, {6, 12}, {9, 10}};
  CHECK(vertex_pairs(P) == expected);
  CHECK(longest_chord(P) == doctest::Approx(2.0));
}

TEST_CASE("forest laminations") {
  const auto f = testing::example_factorization();
  const auto F = lam_of_forest(12, {f.begin(), f.begin() + 6});
  const std::set<std::pair<int, int>> expected{{1, 3}, {6, 12}, {1, 5}, {7, 12}, {9, 10}, {11, 12}};
  CHECK(vertex_pairs(F) == expected);
  CHECK(lam_of_forest(5, {}).chords.empty());
  CHECK_THROWS_AS(lam_of_forest(4, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("non-crossing tests") {
  CHECK(chords_cross(Chord{0.1, 0.5}, Chord{0.3, 0.7}));
  CHECK_FALSE(chords_cross(Chord{0.1, 0.5}, Chord{0.5, 0.7}));
  CHECK_FALSE(chords_cross(Chord{0.1, 0.5}, Chord{0.2, 0.3}));
}

TEST_CASE("longest chord") {
  CHECK(longest_chord(Lamination{}) == 0.0);
  CHECK(longest_chord(Lamination{0, {{0.0, 0.5}}}) == doctest::Approx(2.0));
}

TEST_CASE("Hausdorff distance") {
  const auto P = lam_of_partition(NonCrossingPartition(12, testing::example_blocks()));
  CHECK(hausdorff(P, P) == 0.0);
  const Lamination a{0, {{0.1, 0.4}}}, b{0, {{0.6, 0.9}}};
  const double exact = 2 * std::sin(0.2 * std::numbers::pi);
  const auto r = hausdorff_detail(a, b, HausdorffMode::chords_only, 1e-3);
  CHECK(std::abs(r.distance - exact) <= r.error_bound + 1e-12);
  CHECK(r.error_bound <= 0.5e-3);
  CHECK(hausdorff(a, b, HausdorffMode::chords_only) == doctest::Approx(hausdorff(b, a, HausdorffMode::chords_only)).epsilon(1e-3));
  // With the circle included both sets contain the circle, so only chord-to-set distances matter.
  CHECK(hausdorff(Lamination{}, Lamination{}) == 0.0);
  CHECK(hausdorff(Lamination{}, Lamination{0, {{0.0, 0.5}}}) == doctest::Approx(1.0).epsilon(1e-3));
  const auto f = testing::example_factorization();
  const auto F = lam_of_forest(12, {f.begin(), f.begin() + 6});
  const double d = hausdorff(F, P, HausdorffMode::chords_only);
  CHECK(d <= 0.5 * std::max(longest_chord(F), longest_chord(P)) + 1e-3);
  CHECK(std::abs(d - brute_hausdorff(F, P)) < 2e-3);
}

TEST_CASE("Hausdorff distance agrees with dense sampling on random laminations") {
  RngStream rng(6);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(4, 20));
    const auto f = sample_min_factorization(n, rng);
    const int k = static_cast<int>(rng.uniform_int(1, n - 1));
    const auto P = lam_of_partition(partial_product_partition(f, k));
    const auto F = lam_of_forest(n, forest_edges(f, k));
    if (P.chords.empty()) continue;
    CHECK(std::abs(hausdorff(F, P, HausdorffMode::chords_only, 1e-3) - brute_hausdorff(F, P)) < 2e-3);
  }
}

TEST_CASE("circle points of forest and partition coincide on all of M_6") {
  for (const auto& f : oracle::enumerate_factorizations(6))
    for (int k = 1; k <= 5; ++k) {
      const auto P = lam_of_partition(partial_product_partition(f, k));
      const auto F = lam_of_forest(6, forest_edges(f, k));
      CHECK(circle_points(F) == circle_points(P));
      CHECK(is_noncrossing(P));
      CHECK(is_noncrossing(F));
    }
}

TEST_CASE("excursion laminations") {
  const auto grid = uniform_grid(5);
  CHECK(lam_of_excursion(SampledPath{grid, {0, 0, 0, 0, 0}}, ExcursionMode::cadlag).chords.empty());
  CHECK(lam_of_excursion(SampledPath{grid, {0, 0, 0, 0, 0}}, ExcursionMode::continuous).chords.empty());
  const auto l = lam_of_discrete_path({1, 0, -1});
  CHECK(l.chords.size() == 2);
  CHECK(is_noncrossing(l));
  RngStream rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto e = brownian_excursion_discrete(200, rng);
    CHECK(is_noncrossing(lam_of_excursion(e, ExcursionMode::continuous)));
    CHECK(is_noncrossing(lam_of_excursion(e, ExcursionMode::cadlag)));
  }
}

TEST_CASE("laminations of conditioned trees are non-crossing") {
  RngStream rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 64));
    const int K = static_cast<int>(rng.uniform_int(1, n - 1));
    const auto t = sample_conditioned_tree(n, K, trial % 2 == 0, rng);
    const auto bbar = hb_paths(t).b_bar();
    CHECK(is_noncrossing(lam_of_discrete_path(bbar, t)));
    CHECK(is_noncrossing(lam_of_discrete_path(bbar)));
  }
}
