#pragma once

// Full chords T_{B,B'}(n): every box whose interior is crossed by some
// segment joining interior points of B and B'.
//
// The union of open segments between points of two open convex sets is the
// interior of the convex hull of their union, so membership of a box A
// reduces to "A° meets the open hull H". Both are convex polygons with
// integer vertices at scale n, and their interiors meet iff no edge normal of
// either polygon separates them (the projections overlap in an open
// interval). That test is done in exact integer arithmetic.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "boxed_bertrand/exact_geometry.hpp"

namespace boxed_bertrand {

struct FullChord {
  std::int64_t n = 1;
  std::vector<GridBox> boxes;  // sorted by (i, j)
  GridBox first{0, 0, 1};
  GridBox second{0, 0, 1};

  // Set equality; the generator pair is not part of the identity.
  bool same_boxes(const FullChord& other) const { return boxes == other.boxes; }
};

FullChord full_chord(const GridBox& a, const GridBox& b);

// Scaled integer point.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Convex hull of the eight corners of a and b, counter-clockwise, no
// collinear vertices.
std::vector<LatticePoint> box_pair_hull(const GridBox& a, const GridBox& b);

// Interior of box meets interior of the convex polygon (counter-clockwise).
bool box_meets_open_polygon(const GridBox& box, const std::vector<LatticePoint>& polygon);

struct FullChordCount {
  std::int64_t n = 0;
  std::uint64_t distinct = 0;
  std::uint64_t unordered_pairs = 0;
  double ratio = 0.0;
};

inline constexpr std::int64_t kDefaultFullChordCap = 32;

// Rough operation count |C(n)|^2 / 2 * n used in refusals.
double full_chord_cost_estimate(std::int64_t n);

// Distinct full chords over all unordered pairs of C(n). Throws CapExceeded
// when n > cap.
FullChordCount count_distinct_full_chords(std::int64_t n, std::int64_t cap = kDefaultFullChordCap,
                                          unsigned threads = 0);

// Columns: i,j,n
void write_full_chord_csv(std::ostream& out, const FullChord& chord);

}  // namespace boxed_bertrand
