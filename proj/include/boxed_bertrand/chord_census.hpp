#pragma once

// Counting long ordered pairs |Ch(n)|: pairs (B, B') of distinct boxes of
// C(n) admitting interior points at distance > t.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boxed_bertrand/arith.hpp"
#include "boxed_bertrand/exact_geometry.hpp"
#include "boxed_bertrand/grid_circle.hpp"

namespace boxed_bertrand {

enum class CensusMode { kNaive, kFast };

struct ChordCensus {
  std::int64_t n = 0;
  std::int64_t circle_size = 0;
  Count long_pairs = 0;
  Count total_pairs = 0;     // |C(n)|^2
  Decimal ratio = 0;         // long_pairs / |C(n)|^2
  Decimal ratio_offdiag = 0; // long_pairs / (|C(n)|^2 - |C(n)|)
  Threshold threshold;
};

struct CountOptions {
  unsigned threads = 0;  // 0 = resolve_threads()
  // Exactly re-check every pair the sweep classifies without a predicate
  // call; throws InvariantViolation on disagreement.
  bool verify_windows = false;
};

// O(N^2) exact scan over ordered pairs; the oracle for the sweep.
Count count_long_pairs_naive(std::span<const GridBox> boxes, const Threshold& t = {},
                             const CountOptions& options = {});
Count count_long_pairs_naive(const CircleRing& ring, const Threshold& t = {},
                             const CountOptions& options = {});

// Angular sweep over the counter-clockwise ring. For box a with entry point
// E_a and any box b, the entry points lie in the closed boxes, so
//     |E_a E_b| <= maxgap(a, b) <= |E_a E_b| + 2 sqrt2 / n.
// |E_a E_b| is the chord of the entry-angle difference, which is monotone in
// ring offset, so the boxes split into a certainly-long window, a
// certainly-short remainder and two thin bands that get the exact predicate.
Count count_long_pairs_fast(const CircleRing& ring, const Threshold& t = {},
                            const CountOptions& options = {});

ChordCensus bertrand_ratio(std::int64_t n, const Threshold& t = {},
                           CensusMode mode = CensusMode::kFast, const CountOptions& options = {});
ChordCensus make_census(const CircleRing& ring, Count long_pairs, const Threshold& t);

// Angular window {a}^ap = (a + 2pi/3, a + 4pi/3) mod 2pi.
struct AntipodalWindow {
  double center_angle = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double width() const;
};

AntipodalWindow antipodal_window(double center_angle);

struct ConvergenceRow {
  std::int64_t n = 0;
  std::int64_t circle_size = 0;
  Count long_pairs = 0;
  Decimal ratio = 0;
  std::optional<Decimal> error;  // ratio - target, default threshold only
};

std::vector<ConvergenceRow> convergence_table(std::span<const std::int64_t> n_values,
                                              const Threshold& t = {},
                                              CensusMode mode = CensusMode::kFast,
                                              const CountOptions& options = {});

}  // namespace boxed_bertrand
