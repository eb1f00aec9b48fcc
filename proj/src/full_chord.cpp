#include "boxed_bertrand/full_chord.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <unordered_set>

#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/grid_circle.hpp"
#include "boxed_bertrand/parallel.hpp"

namespace boxed_bertrand {
namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Vertical extent of the polygon on the line x = c, for candidate generation.
void extent_at(const std::vector<LatticePoint>& poly, double c, double& lo, double& hi) {
  const std::size_t m = poly.size();
  for (std::size_t k = 0; k < m; ++k) {
    const LatticePoint& p = poly[k];
    const LatticePoint& q = poly[(k + 1) % m];
    const auto px = static_cast<double>(p.x);
    const auto qx = static_cast<double>(q.x);
    if (c < std::min(px, qx) || c > std::max(px, qx)) continue;
    if (p.x == q.x) {
      lo = std::min({lo, static_cast<double>(p.y), static_cast<double>(q.y)});
      hi = std::max({hi, static_cast<double>(p.y), static_cast<double>(q.y)});
    } else {
      const double y = static_cast<double>(p.y) +
                       (c - px) * static_cast<double>(q.y - p.y) / (qx - px);
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
}

// Flattened (i, j) list; the hash key of a full chord at fixed n.
using ChordKey = std::vector<std::int32_t>;

struct ChordKeyHash {
  std::size_t operator()(const ChordKey& key) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const std::int32_t v : key) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

ChordKey key_of(const FullChord& chord) {
  ChordKey key;
  key.reserve(2 * chord.boxes.size());
  for (const auto& b : chord.boxes) {
    key.push_back(static_cast<std::int32_t>(b.i()));
    key.push_back(static_cast<std::int32_t>(b.j()));
  }
  return key;
}

}  // namespace

std::vector<LatticePoint> box_pair_hull(const GridBox& a, const GridBox& b) {
  std::vector<LatticePoint> pts;
  pts.reserve(8);
  for (const GridBox* box : {&a, &b}) {
    for (std::int64_t dx = 0; dx <= 1; ++dx) {
      for (std::int64_t dy = 0; dy <= 1; ++dy) pts.push_back({box->i() + dx, box->j() + dy});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& p, const LatticePoint& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Andrew's monotone chain; strict turns drop collinear vertices.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t idx = pts.size() - 1, lower = k + 1; idx-- > 0;) {
    const auto& p = pts[idx];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool box_meets_open_polygon(const GridBox& box, const std::vector<LatticePoint>& polygon) {
  const LatticePoint corners[4] = {{box.i(), box.j()},
                                   {box.i() + 1, box.j()},
                                   {box.i() + 1, box.j() + 1},
                                   {box.i(), box.j() + 1}};
  auto separated_along = [&](std::int64_t nx, std::int64_t ny) {
    std::int64_t blo = nx * corners[0].x + ny * corners[0].y;
    std::int64_t bhi = blo;
    for (const auto& c : corners) {
      const std::int64_t d = nx * c.x + ny * c.y;
      blo = std::min(blo, d);
      bhi = std::max(bhi, d);
    }
    std::int64_t plo = nx * polygon[0].x + ny * polygon[0].y;
    std::int64_t phi = plo;
    for (const auto& p : polygon) {
      const std::int64_t d = nx * p.x + ny * p.y;
      plo = std::min(plo, d);
      phi = std::max(phi, d);
    }
    // Touching projections leave the open sets disjoint.
    return bhi <= plo || phi <= blo;
  };
  if (separated_along(1, 0) || separated_along(0, 1)) return false;
  const std::size_t m = polygon.size();
  for (std::size_t k = 0; k < m; ++k) {
    const LatticePoint& p = polygon[k];
    const LatticePoint& q = polygon[(k + 1) % m];
    if (separated_along(q.y - p.y, p.x - q.x)) return false;
  }
  return true;
}

FullChord full_chord(const GridBox& a, const GridBox& b) {
  if (a.n() != b.n()) throw ResolutionMismatch("full chord boxes need the same resolution");
  if (a == b) throw InvalidChord("a full chord needs two distinct boxes");
  const auto hull = box_pair_hull(a, b);
  std::int64_t x_lo = hull.front().x;
  std::int64_t x_hi = hull.front().x;
  for (const auto& p : hull) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
  }

  FullChord chord;
  chord.n = a.n();
  chord.first = a;
  chord.second = b;
  for (std::int64_t i = x_lo; i < x_hi; ++i) {
    double lo = INFINITY;
    double hi = -INFINITY;
    extent_at(hull, static_cast<double>(i), lo, hi);
    extent_at(hull, static_cast<double>(i + 1), lo, hi);
    // Floating extents only pick candidates; the exact test decides.
    const auto j_lo = static_cast<std::int64_t>(std::floor(lo)) - 1;
    const auto j_hi = static_cast<std::int64_t>(std::ceil(hi));
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const GridBox candidate(i, j, a.n());
      if (box_meets_open_polygon(candidate, hull)) chord.boxes.push_back(candidate);
    }
  }
  // Column-major generation is already (i, j) sorted.
  return chord;
}

double full_chord_cost_estimate(std::int64_t n) {
  const double size = 8.0 * static_cast<double>(n);
  return size * size / 2.0 * static_cast<double>(n);
}

FullChordCount count_distinct_full_chords(std::int64_t n, std::int64_t cap, unsigned threads) {
  if (n < 1) throw InvalidArgument("grid resolution n must be >= 1");
  if (n > cap) {
    const double cost = full_chord_cost_estimate(n);
    throw CapExceeded("full-chord census at n=" + std::to_string(n) + " exceeds the cap " +
                          std::to_string(cap) + " (about " + std::to_string(cost) +
                          " box tests); raise the cap explicitly",
                      cost);
  }
  const auto boxes = enumerate_circle(n).boxes();
  const std::size_t m = boxes.size();

  std::mutex mu;
  std::unordered_set<ChordKey, ChordKeyHash> distinct;
  parallel_slices(m, resolve_threads(threads), [&](std::size_t begin, std::size_t end, unsigned) {
    std::unordered_set<ChordKey, ChordKeyHash> local;
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) local.insert(key_of(full_chord(boxes[a], boxes[b])));
    }
    std::lock_guard lock(mu);
    distinct.merge(local);
  });

  FullChordCount out;
  out.n = n;
  out.distinct = distinct.size();
  out.unordered_pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  out.ratio = out.unordered_pairs == 0
                  ? 0.0
                  : static_cast<double>(out.distinct) / static_cast<double>(out.unordered_pairs);
  return out;
}

void write_full_chord_csv(std::ostream& out, const FullChord& chord) {
  out << "i,j,n\n";
  for (const auto& b : chord.boxes) out << b.i() << ',' << b.j() << ',' << b.n() << '\n';
}

}  // namespace boxed_bertrand
