#pragma once

// Test-only reference computations. Each one works from the geometric
// definitions directly and shares no code path with the library routine it
// checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "boxed_bertrand/exact_geometry.hpp"

namespace oracle {

using boxed_bertrand::GridBox;

inline std::int64_t brute_r2(std::int64_t m) {
  std::int64_t count = 0;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m))) + 1;
  for (std::int64_t i = -r; i <= r; ++i) {
    for (std::int64_t j = -r; j <= r; ++j) count += (i * i + j * j == m) ? 1 : 0;
  }
  return count;
}

// All boxes with |i|, |j| <= n+1 passing the membership predicate.
inline std::set<std::pair<std::int64_t, std::int64_t>> exhaustive_circle(std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t i = -n - 1; i <= n + 1; ++i) {
    for (std::int64_t j = -n - 1; j <= n + 1; ++j) {
      if (boxed_bertrand::intersects_unit_circle(GridBox(i, j, n))) out.emplace(i, j);
    }
  }
  return out;
}

// Closed-box distance range to the origin by evaluating corners and the
// foot points on the axes, in floating point (scale 1).
inline std::pair<double, double> float_distance_range(const GridBox& b) {
  const double n = static_cast<double>(b.n());
  const double x0 = b.i() / n, x1 = (b.i() + 1) / n, y0 = b.j() / n, y1 = (b.j() + 1) / n;
  auto clamp0 = [](double lo, double hi) { return lo <= 0 && 0 <= hi ? 0.0 : std::min(std::abs(lo), std::abs(hi)); };
  const double cx = clamp0(x0, x1), cy = clamp0(y0, y1);
  double far = 0;
  for (double x : {x0, x1}) {
    for (double y : {y0, y1}) far = std::max(far, std::hypot(x, y));
  }
  return {std::hypot(cx, cy), far};
}

// Max distance between two boxes over all 16 corner pairs, floating point.
inline double corner_max_distance(const GridBox& a, const GridBox& b) {
  const double n = static_cast<double>(a.n());
  double best = 0;
  for (int da = 0; da < 4; ++da) {
    for (int db = 0; db < 4; ++db) {
      const double ax = (a.i() + (da & 1)) / n, ay = (a.j() + (da >> 1)) / n;
      const double bx = (b.i() + (db & 1)) / n, by = (b.j() + (db >> 1)) / n;
      best = std::max(best, std::hypot(ax - bx, ay - by));
    }
  }
  return best;
}

// Angular interval [lo, hi] (hi may exceed 2pi) of the closed arc of the
// unit circle inside the closed box, from the circle's crossings with the
// four box edges.
inline std::pair<double, double> box_arc_interval(const GridBox& b) {
  const double n = static_cast<double>(b.n());
  const double x0 = b.i() / n, x1 = (b.i() + 1) / n, y0 = b.j() / n, y1 = (b.j() + 1) / n;
  std::vector<double> angles;
  auto push = [&](double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0) a += 2 * std::numbers::pi;
    angles.push_back(a);
  };
  for (double x : {x0, x1}) {
    const double s = 1 - x * x;
    if (s < 0) continue;
    for (double y : {std::sqrt(s), -std::sqrt(s)}) {
      if (y >= y0 - 1e-15 && y <= y1 + 1e-15) push(x, y);
    }
  }
  for (double y : {y0, y1}) {
    const double s = 1 - y * y;
    if (s < 0) continue;
    for (double x : {std::sqrt(s), -std::sqrt(s)}) {
      if (x >= x0 - 1e-15 && x <= x1 + 1e-15) push(x, y);
    }
  }
  std::sort(angles.begin(), angles.end());
  double lo = angles.front(), hi = angles.back();
  if (hi - lo > std::numbers::pi) {
    // Straddles angle 0: shift the small angles up by 2pi.
    for (auto& a : angles) {
      if (a < std::numbers::pi) a += 2 * std::numbers::pi;
    }
    std::sort(angles.begin(), angles.end());
    lo = angles.front();
    hi = angles.back();
  }
  return {lo, hi};
}

// Boxes of the exhaustive circle whose arc interval meets the open arc.
inline std::int64_t scan_arc_count(std::int64_t n, double alpha, double beta) {
  std::int64_t count = 0;
  const double two_pi = 2 * std::numbers::pi;
  for (const auto& [i, j] : exhaustive_circle(n)) {
    auto [lo, hi] = box_arc_interval(GridBox(i, j, n));
    bool hit = false;
    for (double shift : {-two_pi, 0.0, two_pi}) {
      if (lo + shift < beta && hi + shift > alpha) hit = true;
    }
    count += hit ? 1 : 0;
  }
  return count;
}

// Composite Simpson rule, for smooth-enough integrands over short spans.
template <typename F>
double simpson(const F& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int k = 1; k < panels; ++k) s += f(a + k * h) * (k % 2 ? 4 : 2);
  return s * h / 3;
}

// Boxes crossed by random segments joining interior points of a and b.
inline std::set<std::pair<std::int64_t, std::int64_t>> sampled_full_chord(const GridBox& a,
                                                                          const GridBox& b,
                                                                          int segments,
                                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(1e-6, 1 - 1e-6);
  std::set<std::pair<std::int64_t, std::int64_t>> hit;
  for (int s = 0; s < segments; ++s) {
    const double ax = a.i() + u(rng), ay = a.j() + u(rng);
    const double bx = b.i() + u(rng), by = b.j() + u(rng);
    constexpr int kSteps = 4000;
    for (int k = 0; k <= kSteps; ++k) {
      const double t = static_cast<double>(k) / kSteps;
      const double x = ax + t * (bx - ax), y = ay + t * (by - ay);
      // Points within 1e-9 of a grid line are ambiguous; skip them.
      if (std::abs(x - std::round(x)) < 1e-9 || std::abs(y - std::round(y)) < 1e-9) continue;
      hit.emplace(static_cast<std::int64_t>(std::floor(x)), static_cast<std::int64_t>(std::floor(y)));
    }
  }
  return hit;
}

}  // namespace oracle
