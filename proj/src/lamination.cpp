#include "minfact/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "minfact/path_codec.hpp"

namespace minfact {

Point point_at(double angle) {
  const double th = 2.0 * std::numbers::pi * angle;
  return {std::cos(th), -std::sin(th)};
}

double chord_length(const Chord& c) { return 2.0 * std::abs(std::sin(std::numbers::pi * (c.t - c.s))); }

Chord vertex_chord(int n, int j, int k) {
  const double a = static_cast<double>(((j % n) + n) % n) / n;
  const double b = static_cast<double>(((k % n) + n) % n) / n;
  return a < b ? Chord{a, b} : Chord{b, a};
}

namespace {

void dedupe(Lamination& l) {
  std::sort(l.chords.begin(), l.chords.end());
  l.chords.erase(std::unique(l.chords.begin(), l.chords.end()), l.chords.end());
}

}  // namespace

Lamination lam_of_partition(const NonCrossingPartition& p) {
  Lamination l;
  l.n = p.n();
  for (const auto& b : p.blocks()) {
    if (b.size() < 2) continue;
    for (std::size_t i = 0; i < b.size(); ++i) l.chords.push_back(vertex_chord(p.n(), b[i], b[(i + 1) % b.size()]));
  }
  dedupe(l);
  return l;
}

bool chords_cross(const Chord& a, const Chord& b) {
  return (a.s < b.s && b.s < a.t && a.t < b.t) || (b.s < a.s && a.s < b.t && b.t < a.t);
}

bool is_noncrossing(const Lamination& l) {
  for (std::size_t i = 0; i < l.chords.size(); ++i)
    for (std::size_t j = i + 1; j < l.chords.size(); ++j)
      if (chords_cross(l.chords[i], l.chords[j])) return false;
  return true;
}

Lamination lam_of_forest(int n, const std::vector<Transposition>& edges) {
  Lamination l;
  l.n = n;
  for (const auto& e : edges) {
    if (e.a < 1 || e.b > n) throw std::out_of_range("lam_of_forest: edge outside [n]");
    l.chords.push_back(vertex_chord(n, e.a, e.b));
  }
  dedupe(l);
  if (!is_noncrossing(l)) throw std::invalid_argument("lam_of_forest: crossing edges");
  return l;
}

namespace {

struct Segment {
  Point p, q;
};

double point_segment(const Point& x, const Segment& s) {
  const double dx = s.q.x - s.p.x, dy = s.q.y - s.p.y;
  const double len2 = dx * dx + dy * dy;
  double u = len2 > 0.0 ? ((x.x - s.p.x) * dx + (x.y - s.p.y) * dy) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  const double ex = s.p.x + u * dx - x.x, ey = s.p.y + u * dy - x.y;
  return std::sqrt(ex * ex + ey * ey);
}

std::vector<Segment> segments_of(const Lamination& l) {
  std::vector<Segment> out;
  out.reserve(l.chords.size());
  for (const auto& c : l.chords) out.push_back({point_at(c.s), point_at(c.t)});
  return out;
}

// sup over the chords of a (not shared with b) of the distance to the set b.
double directed(const Lamination& a, const Lamination& b, bool circle, double delta) {
  std::set<Chord> shared(b.chords.begin(), b.chords.end());
  const auto bs = segments_of(b);
  double best = 0.0;
  // Distance from x to b, or any value <= floor once it is known to be below floor.
  auto dist = [&](const Point& x, double floor) {
    double d = circle ? 1.0 - std::sqrt(x.x * x.x + x.y * x.y) : HUGE_VAL;
    for (const auto& s : bs) {
      if (d <= floor) return d;
      d = std::min(d, point_segment(x, s));
    }
    return d;
  };
  struct Piece {
    double u0, u1;
  };
  for (const auto& c : a.chords) {
    if (shared.count(c)) continue;
    const Segment seg{point_at(c.s), point_at(c.t)};
    const double len = std::hypot(seg.q.x - seg.p.x, seg.q.y - seg.p.y);
    auto at = [&](double u) { return Point{seg.p.x + u * (seg.q.x - seg.p.x), seg.p.y + u * (seg.q.y - seg.p.y)}; };
    std::vector<Piece> stack{{0.0, 1.0}};
    while (!stack.empty()) {
      Piece pc = stack.back();
      stack.pop_back();
      const double h = 0.5 * (pc.u1 - pc.u0) * len;
      const double um = 0.5 * (pc.u0 + pc.u1);
      const double d = dist(at(um), best - h);
      best = std::max(best, d);
      if (d + h <= best || h <= 0.5 * delta) continue;
      stack.push_back({pc.u0, um});
      stack.push_back({um, pc.u1});
    }
  }
  return best;
}

}  // namespace

HausdorffResult hausdorff_detail(const Lamination& l1, const Lamination& l2, HausdorffMode mode, double delta) {
  const bool circle = mode == HausdorffMode::with_circle;
  if (!circle && (l1.chords.empty() || l2.chords.empty()))
    throw std::invalid_argument("hausdorff: empty chord set in chords-only mode");
  HausdorffResult r;
  r.distance = std::max(directed(l1, l2, circle, delta), directed(l2, l1, circle, delta));
  r.error_bound = 0.5 * delta;
  return r;
}

double hausdorff(const Lamination& l1, const Lamination& l2, HausdorffMode mode, double delta) {
  return hausdorff_detail(l1, l2, mode, delta).distance;
}

double longest_chord(const Lamination& l) {
  double best = 0.0;
  for (const auto& c : l.chords) best = std::max(best, chord_length(c));
  return best;
}

std::vector<ChordRelationPair> chord_pairs(const SampledPath& p, ExcursionMode mode) {
  const auto& v = p.values;
  const auto& g = p.grid;
  const std::size_t m = v.size();
  std::vector<ChordRelationPair> out;
  if (m < 2) return out;
  if (mode == ExcursionMode::cadlag) {
    // Jump times k (with value 0 before time 0): t = first u > k with v_u <= v_{k-1}.
    for (std::size_t k = 0; k < m; ++k) {
      const double before = k == 0 ? 0.0 : v[k - 1];
      if (!(v[k] > before)) continue;
      for (std::size_t u = k + 1; u < m; ++u) {
        if (v[u] <= before) {
          if (g[u] > g[k]) out.push_back({g[k], g[u]});
          break;
        }
      }
    }
    return out;
  }
  // Linear interpolation: from each start of a rise, the first return to the same level.
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (!(v[k + 1] > v[k])) continue;
    for (std::size_t u = k + 2; u < m; ++u) {
      if (v[u] <= v[k]) {
        const double frac = (v[u - 1] - v[k]) / (v[u - 1] - v[u]);
        const double t = g[u - 1] + frac * (g[u] - g[u - 1]);
        if (t > g[k]) out.push_back({g[k], t});
        break;
      }
    }
  }
  return out;
}

Lamination lam_of_excursion(const SampledPath& p, ExcursionMode mode) {
  Lamination l;
  for (const auto& pr : chord_pairs(p, mode)) {
    double s = pr.s, t = pr.t;
    if (t >= 1.0) t = 0.0;
    if (s == t) continue;
    l.chords.push_back(s < t ? Chord{s, t} : Chord{t, s});
  }
  dedupe(l);
  return l;
}

Lamination lam_of_discrete_path(const std::vector<long long>& bbar) {
  Lamination l;
  const auto m = static_cast<int>(bbar.size());
  l.n = m;
  for (auto [i, j] : chords_from_discrete_path(bbar)) {
    if (i % m == j % m) continue;
    l.chords.push_back(vertex_chord(m, i, j));
  }
  dedupe(l);
  return l;
}

Lamination lam_of_discrete_path(const std::vector<long long>& bbar, const BiTypeTree& source) {
  if (static_cast<int>(bbar.size()) != source.black_count())
    throw std::invalid_argument("lam_of_discrete_path: path length differs from black count");
  Lamination l;
  const int n = source.edges();
  l.n = n;
  if (n == 0) return l;
  auto cl = corner_labels(source);
  for (auto [i, j] : chords_from_discrete_path(bbar)) {
    (void)j;
    if (i >= source.black_count()) continue;
    const auto& lab = cl.labels[static_cast<std::size_t>(i)];
    if (lab.front() % n == lab.back() % n) continue;
    l.chords.push_back(vertex_chord(n, lab.front(), lab.back()));
  }
  dedupe(l);
  return l;
}

std::vector<int> circle_points(const Lamination& l) {
  if (l.n <= 0) throw std::invalid_argument("circle_points: needs a discrete lamination");
  std::set<int> pts;
  for (const auto& c : l.chords) {
    pts.insert(static_cast<int>(std::llround(c.s * l.n)) % l.n);
    pts.insert(static_cast<int>(std::llround(c.t * l.n)) % l.n);
  }
  return {pts.begin(), pts.end()};
}

}  // namespace minfact
