#pragma once

#include <utility>
#include <vector>

#include "minfact/levy.hpp"
#include "minfact/ncp.hpp"
#include "minfact/tree.hpp"

namespace minfact {

// Angles are fractions of a turn; the point for angle s is exp(-2 pi i s).
struct Chord {
  double s = 0.0;
  double t = 0.0;
  bool operator==(const Chord&) const = default;
  auto operator<=>(const Chord&) const = default;
};

struct Lamination {
  int n = 0;  // 0 for continuum angles
  std::vector<Chord> chords;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

Point point_at(double angle);
double chord_length(const Chord& c);

// Chord between vertices j and k of the regular n-gon.
Chord vertex_chord(int n, int j, int k);

Lamination lam_of_partition(const NonCrossingPartition& p);
// Throws std::invalid_argument if two edges cross.
Lamination lam_of_forest(int n, const std::vector<Transposition>& edges);

bool chords_cross(const Chord& a, const Chord& b);
bool is_noncrossing(const Lamination& l);

enum class HausdorffMode { with_circle, chords_only };

struct HausdorffResult {
  double distance = 0.0;
  double error_bound = 0.0;
};

HausdorffResult hausdorff_detail(const Lamination& l1, const Lamination& l2,
                                 HausdorffMode mode = HausdorffMode::with_circle, double delta = 2e-3);
double hausdorff(const Lamination& l1, const Lamination& l2,
                 HausdorffMode mode = HausdorffMode::with_circle, double delta = 2e-3);

double longest_chord(const Lamination& l);

enum class ExcursionMode { cadlag, continuous };

std::vector<ChordRelationPair> chord_pairs(const SampledPath& p, ExcursionMode mode);
Lamination lam_of_excursion(const SampledPath& p, ExcursionMode mode);
// Chords of the pairs of an excursion path B_1..B_m; with a source tree the
// pair (i, j) is placed at the corner labels of the i-th black vertex.
Lamination lam_of_discrete_path(const std::vector<long long>& bbar);
Lamination lam_of_discrete_path(const std::vector<long long>& bbar, const BiTypeTree& source);

// Sorted vertex indices in [0, n) touched by some chord (discrete laminations).
std::vector<int> circle_points(const Lamination& l);

}  // namespace minfact
