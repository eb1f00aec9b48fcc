#pragma once

// The box circle C(n): all boxes B_{i,j}(n) whose interior meets the unit
// circle, in counter-clockwise order, with the vertical / horizontal /
// enters-at-vertex classification of the box the oriented circle enters.

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <vector>

#include "boxed_bertrand/exact_geometry.hpp"

namespace boxed_bertrand {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RingEntry {
  GridBox box;
  // Angle in [0, 2pi) of the point where the counter-clockwise circle enters the box.
  double entry_angle = 0.0;
  bool vertical = false;
  bool horizontal = false;
  bool enters_at_vertex = false;
};

class CircleRing {
 public:
  CircleRing(std::int64_t n, std::vector<RingEntry> entries);

  std::int64_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const RingEntry> entries() const noexcept { return entries_; }
  const RingEntry& operator[](std::size_t k) const { return entries_[k]; }
  std::vector<GridBox> boxes() const;

  // The open arc of C inside box k is (entry_angle(k), exit_angle(k)).
  double entry_angle(std::size_t k) const { return entries_[k].entry_angle; }
  double exit_angle(std::size_t k) const {
    return k + 1 < entries_.size() ? entries_[k + 1].entry_angle : kTwoPi;
  }

  std::size_t count_vertical() const;
  std::size_t count_horizontal() const;
  std::size_t count_enters_at_vertex() const;

 private:
  std::int64_t n_;
  std::vector<RingEntry> entries_;
};

// 8n - r2(n^2).
std::int64_t circle_size_formula(std::int64_t n);

CircleRing enumerate_circle(std::int64_t n);

// Membership-only enumeration: walks columns i = -n..n-1 and derives each
// column's row range from integer square roots. Column-major order.
std::vector<GridBox> scan_circle_columns(std::int64_t n);

// |D(n)|: boxes whose interior meets the open unit disc.
std::int64_t disc_count(std::int64_t n);

struct ArcSpec {
  double alpha = 0.0;
  double beta = kTwoPi;
};

enum class ArcFilter { kAll, kVertical, kHorizontal };

// Angle comparisons in arc membership treat values within this band of a
// tie as not overlapping.
inline constexpr double kArcGuard = 1e-12;

void validate_arc(const ArcSpec& arc);

// |C_{alpha,beta}(n)|: boxes whose interior meets the open arc.
std::int64_t arc_count(const CircleRing& ring, const ArcSpec& arc,
                       ArcFilter filter = ArcFilter::kAll);
std::int64_t arc_count(std::int64_t n, const ArcSpec& arc,
                       ArcFilter filter = ArcFilter::kAll);

struct HistogramBin {
  std::size_t bin = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t count = 0;
  // |C(n)| times the limiting angular mass of the bin.
  double expected = 0.0;
};

std::vector<HistogramBin> angular_histogram(const CircleRing& ring, std::size_t bins);

// Columns: i,j,n,angle_entry,vertical,horizontal,enters_at_vertex
void write_ring_csv(std::ostream& out, const CircleRing& ring);

}  // namespace boxed_bertrand
