#pragma once

// Exact integer predicates on grid boxes.
//
// A box B_{i,j}(n) is the closed square [i/n,(i+1)/n] x [j/n,(j+1)/n]. The
// geometric definitions are stated for open interiors; each predicate here is
// reduced to a strict integer inequality on the extrema of the closed box:
//
//   * the supremum of a continuous function over an open box equals its
//     maximum over the closure, and the infimum equals the minimum, so
//     "some interior point has value > c" is exactly "max over closure > c";
//   * the interior is connected, so the squared distance to the origin takes
//     every value strictly between its closed-box min and max there.
//
// All quantities are carried at scale n (coordinates) or n^2 (squared
// lengths), so no rounding ever enters a predicate.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace boxed_bertrand {

class GridBox {
 public:
  GridBox(std::int64_t i, std::int64_t j, std::int64_t n);

  std::int64_t i() const noexcept { return i_; }
  std::int64_t j() const noexcept { return j_; }
  std::int64_t n() const noexcept { return n_; }

  friend bool operator==(const GridBox&, const GridBox&) = default;
  friend auto operator<=>(const GridBox&, const GridBox&) = default;

 private:
  std::int64_t i_;
  std::int64_t j_;
  std::int64_t n_;
};

// Exact squared length num / n^2.
struct ScaledSq {
  std::uint64_t num = 0;
  std::int64_t scale = 1;

  friend bool operator==(const ScaledSq&, const ScaledSq&) = default;
};

std::strong_ordering compare(const ScaledSq& a, const ScaledSq& b);

// Squared chord-length cutoff t^2 = p/q, stored gcd-reduced.
class Threshold {
 public:
  Threshold() = default;
  Threshold(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_default() const noexcept { return p_ == 3 && q_ == 1; }
  double length() const;  // t = sqrt(p/q)

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::int64_t p_ = 3;
  std::int64_t q_ = 1;
};

// Parses "p/q" or "p".
Threshold parse_threshold(const std::string& text);

ScaledSq min_sq_dist_origin(const GridBox& b);
ScaledSq max_sq_dist_origin(const GridBox& b);

// B° meets the unit circle: min < n^2 < max, both strict.
bool intersects_unit_circle(const GridBox& b);

// Some corner lies exactly on the unit circle.
bool is_exceptional(const GridBox& b);

// n^2 * max squared distance between the two closed boxes.
ScaledSq max_sq_gap(const GridBox& a, const GridBox& b);

// (a, b) admits interior points at distance > t. Throws InvalidChord for a == b.
bool is_long_pair(const GridBox& a, const GridBox& b, const Threshold& t = {});

// Unchecked fast path for the pair counters: same n, a != b assumed.
inline bool is_long_gap(std::int64_t di, std::int64_t dj, __int128 q,
                        __int128 rhs) {
  const __int128 gi = (di < 0 ? -di : di) + 1;
  const __int128 gj = (dj < 0 ? -dj : dj) + 1;
  return q * (gi * gi + gj * gj) > rhs;
}

}  // namespace boxed_bertrand

template <>
struct std::hash<boxed_bertrand::GridBox> {
  std::size_t operator()(const boxed_bertrand::GridBox& b) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(b.i()) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(b.j()) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(b.n()) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
