#include "boxed_bertrand/grid_circle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "boxed_bertrand/arith.hpp"
#include "boxed_bertrand/continuum.hpp"
#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/lattice.hpp"

namespace boxed_bertrand {
namespace {

// sign * sqrt(sq), exact.
struct Root {
  int sign = 0;
  std::uint64_t sq = 0;

  static Root of_int(std::int64_t k) {
    const auto a = static_cast<std::uint64_t>(k < 0 ? -k : k);
    return {k > 0 ? 1 : (k < 0 ? -1 : 0), a * a};
  }
  double to_double() const { return sign * std::sqrt(static_cast<double>(sq)); }
  // Valid only when sq is not a perfect square.
  std::int64_t floor_irrational() const {
    const auto r = static_cast<std::int64_t>(isqrt(sq));
    return sign > 0 ? r : -r - 1;
  }
  std::int64_t exact_int() const {
    return sign * static_cast<std::int64_t>(isqrt(sq));
  }
};

bool operator<(const Root& a, const Root& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.sign > 0) return a.sq < b.sq;
  if (a.sign < 0) return a.sq > b.sq;
  return false;
}

// A point where the circle crosses a grid line; the box entered there.
struct Crossing {
  Root x;
  Root y;
  RingEntry entry;
};

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_of(const Crossing& c) {
  return (c.y.sign > 0 || (c.y.sign == 0 && c.x.sign > 0)) ? 0 : 1;
}

// Angle order is x-decreasing on the upper half and x-increasing on the
// lower half; within a half x determines the point.
bool ccw_before(const Crossing& a, const Crossing& b) {
  const int ha = half_of(a);
  const int hb = half_of(b);
  if (ha != hb) return ha < hb;
  return ha == 0 ? b.x < a.x : a.x < b.x;
}

double angle_of(const Root& x, const Root& y) {
  double a = std::atan2(y.to_double(), x.to_double());
  if (a < 0) a += kTwoPi;
  return a;
}

std::uint64_t nearest_abs(std::int64_t k) {
  if (k <= 0 && 0 <= k + 1) return 0;
  const auto a = static_cast<std::uint64_t>(k < 0 ? -k : k);
  const auto b = static_cast<std::uint64_t>(k + 1 < 0 ? -(k + 1) : k + 1);
  return std::min(a, b);
}

std::uint64_t farthest_abs(std::int64_t k) {
  const auto a = static_cast<std::uint64_t>(k < 0 ? -k : k);
  const auto b = static_cast<std::uint64_t>(k + 1 < 0 ? -(k + 1) : k + 1);
  return std::max(a, b);
}

void require_resolution(std::int64_t n) {
  if (n < 1) throw InvalidArgument("grid resolution n must be >= 1");
}

// Lattice point (px, py) on the circle. The tangent there is (-py, px); where
// one tangent component vanishes (the four axis points) the circle curves
// toward the origin, which decides that coordinate.
GridBox box_entered_at_vertex(std::int64_t px, std::int64_t py, std::int64_t n) {
  const std::int64_t column = (py > 0 || (py == 0 && px > 0)) ? px - 1 : px;
  const std::int64_t row = (px > 0 || (px == 0 && py < 0)) ? py : py - 1;
  return {column, row, n};
}

}  // namespace

CircleRing::CircleRing(std::int64_t n, std::vector<RingEntry> entries)
    : n_(n), entries_(std::move(entries)) {
  require_resolution(n);
}

std::vector<GridBox> CircleRing::boxes() const {
  std::vector<GridBox> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.box);
  return out;
}

std::size_t CircleRing::count_vertical() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const RingEntry& e) { return e.vertical; }));
}

std::size_t CircleRing::count_horizontal() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const RingEntry& e) { return e.horizontal; }));
}

std::size_t CircleRing::count_enters_at_vertex() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const RingEntry& e) { return e.enters_at_vertex; }));
}

std::int64_t circle_size_formula(std::int64_t n) {
  require_resolution(n);
  return 8 * n - r2_of_square(static_cast<std::uint64_t>(n));
}

CircleRing enumerate_circle(std::int64_t n) {
  require_resolution(n);
  const auto n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(8 * n));

  // Vertical lines x = i. These also produce every lattice point on C.
  for (std::int64_t i = -n; i <= n; ++i) {
    const Root x = Root::of_int(i);
    const std::uint64_t s = n2 - x.sq;
    const bool lattice = is_square(s);
    for (int sign : {1, -1}) {
      if (s == 0 && sign < 0) break;
      const Root y{s == 0 ? 0 : sign, s};
      Crossing c{x, y, RingEntry{GridBox(0, 0, n)}};
      if (lattice) {
        c.entry.box = box_entered_at_vertex(i, y.exact_int(), n);
        c.entry.vertical = c.entry.horizontal = c.entry.enters_at_vertex = true;
      } else {
        // Moving with x-velocity -y: left on the upper half, right on the lower.
        c.entry.box = GridBox(y.sign > 0 ? i - 1 : i, y.floor_irrational(), n);
        c.entry.vertical = true;
      }
      crossings.push_back(c);
    }
  }

  // Horizontal lines y = j, skipping lattice points already produced.
  for (std::int64_t j = -n + 1; j <= n - 1; ++j) {
    const Root y = Root::of_int(j);
    const std::uint64_t s = n2 - y.sq;
    if (is_square(s)) continue;
    for (int sign : {1, -1}) {
      const Root x{sign, s};
      Crossing c{x, y, RingEntry{GridBox(0, 0, n)}};
      // Moving with y-velocity x: up on the right half, down on the left.
      c.entry.box = GridBox(x.floor_irrational(), x.sign > 0 ? j : j - 1, n);
      c.entry.horizontal = true;
      crossings.push_back(c);
    }
  }

  std::sort(crossings.begin(), crossings.end(), ccw_before);
  std::vector<RingEntry> entries;
  entries.reserve(crossings.size());
  for (auto& c : crossings) {
    c.entry.entry_angle = angle_of(c.x, c.y);
    entries.push_back(c.entry);
  }
  return CircleRing(n, std::move(entries));
}

std::vector<GridBox> scan_circle_columns(std::int64_t n) {
  require_resolution(n);
  const auto n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::vector<GridBox> out;
  out.reserve(static_cast<std::size_t>(8 * n));
  for (std::int64_t i = -n; i <= n - 1; ++i) {
    const std::uint64_t lo = nearest_abs(i);
    const std::uint64_t hi = farthest_abs(i);
    const std::uint64_t a = n2 - lo * lo;  // row j >= 0 needs j^2 < a
    const std::uint64_t b = n2 - hi * hi;  // ... and (j+1)^2 > b
    const std::uint64_t ra = isqrt(a);
    const auto j_max = static_cast<std::int64_t>(ra * ra == a ? ra - 1 : ra);
    const auto j_min = static_cast<std::int64_t>(isqrt(b));
    for (std::int64_t j = j_min; j <= j_max; ++j) out.emplace_back(i, j, n);
    for (std::int64_t j = j_min; j <= j_max; ++j) out.emplace_back(i, -j - 1, n);
  }
  return out;
}

std::int64_t disc_count(std::int64_t n) {
  require_resolution(n);
  const auto n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::int64_t total = 0;
  for (std::int64_t i = -n; i <= n - 1; ++i) {
    const std::uint64_t cx = nearest_abs(i);
    const std::uint64_t rest = n2 - cx * cx;  // >= 2n - 1 > 0
    // Rows j >= 0 with j^2 < rest, mirrored below the axis.
    total += 2 * static_cast<std::int64_t>(isqrt(rest - 1) + 1);
  }
  return total;
}

void validate_arc(const ArcSpec& arc) {
  if (!(std::isfinite(arc.alpha) && std::isfinite(arc.beta)) || arc.alpha < 0.0 ||
      arc.beta > kTwoPi || !(arc.alpha < arc.beta)) {
    throw InvalidArgument("arc bounds must satisfy 0 <= alpha < beta <= 2pi");
  }
}

std::int64_t arc_count(const CircleRing& ring, const ArcSpec& arc, ArcFilter filter) {
  validate_arc(arc);
  const double lo = arc.alpha + kArcGuard;
  const double hi = arc.beta - kArcGuard;
  std::int64_t count = 0;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const RingEntry& e = ring[k];
    if (filter == ArcFilter::kVertical && !e.vertical) continue;
    if (filter == ArcFilter::kHorizontal && !e.horizontal) continue;
    if (ring.entry_angle(k) < hi && ring.exit_angle(k) > lo) ++count;
  }
  return count;
}

std::int64_t arc_count(std::int64_t n, const ArcSpec& arc, ArcFilter filter) {
  validate_arc(arc);
  return arc_count(enumerate_circle(n), arc, filter);
}

std::vector<HistogramBin> angular_histogram(const CircleRing& ring, std::size_t bins) {
  if (bins == 0) throw InvalidArgument("histogram needs at least one bin");
  std::vector<HistogramBin> out;
  out.reserve(bins);
  const double total = static_cast<double>(ring.size());
  for (std::size_t k = 0; k < bins; ++k) {
    HistogramBin bin;
    bin.bin = k;
    bin.lo = kTwoPi * static_cast<double>(k) / static_cast<double>(bins);
    bin.hi = k + 1 == bins ? kTwoPi
                           : kTwoPi * static_cast<double>(k + 1) / static_cast<double>(bins);
    bin.count = arc_count(ring, ArcSpec{bin.lo, bin.hi});
    bin.expected = total * density_mass(bin.lo, bin.hi);
    out.push_back(bin);
  }
  return out;
}

void write_ring_csv(std::ostream& out, const CircleRing& ring) {
  const auto old_precision = out.precision(17);
  out << "i,j,n,angle_entry,vertical,horizontal,enters_at_vertex\n";
  for (const auto& e : ring.entries()) {
    out << e.box.i() << ',' << e.box.j() << ',' << e.box.n() << ',' << e.entry_angle << ','
        << int(e.vertical) << ',' << int(e.horizontal) << ',' << int(e.enters_at_vertex) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace boxed_bertrand
