#include "boxed_bertrand/chord_census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "boxed_bertrand/continuum.hpp"
#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/parallel.hpp"

namespace boxed_bertrand {
namespace {

// Slack on chord lengths; angle and asin rounding is ~1e-14 at most.
constexpr double kChordSlack = 1e-9;

struct Coords {
  std::vector<std::int64_t> i;
  std::vector<std::int64_t> j;
  std::int64_t n = 1;
  std::int64_t span = 0;  // max |delta| over either axis
};

Coords split_coords(std::span<const GridBox> boxes) {
  Coords c;
  c.i.reserve(boxes.size());
  c.j.reserve(boxes.size());
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& b : boxes) {
    if (b.n() != boxes.front().n()) {
      throw ResolutionMismatch("all boxes of a census must share one resolution");
    }
    c.i.push_back(b.i());
    c.j.push_back(b.j());
    lo = std::min({lo, b.i(), b.j()});
    hi = std::max({hi, b.i(), b.j()});
  }
  if (!boxes.empty()) {
    c.n = boxes.front().n();
    c.span = hi - lo;
  }
  return c;
}

// True when q * ((span+1)^2 * 2) and p * n^2 both fit in a signed 64-bit word.
bool fits_int64(const Coords& c, const Threshold& t) {
  const long double limit = static_cast<long double>(std::numeric_limits<std::int64_t>::max()) / 4;
  const long double g = static_cast<long double>(c.span) + 1;
  const long double lhs = static_cast<long double>(t.q()) * 2 * g * g;
  const long double rhs = static_cast<long double>(t.p()) * c.n * c.n;
  return lhs < limit && rhs < limit;
}

template <typename Int>
std::uint64_t naive_row(const Coords& c, std::size_t a, Int q, Int rhs) {
  const Int ai = static_cast<Int>(c.i[a]);
  const Int aj = static_cast<Int>(c.j[a]);
  std::uint64_t hits = 0;
  const std::size_t m = c.i.size();
  for (std::size_t b = 0; b < m; ++b) {
    Int di = ai - static_cast<Int>(c.i[b]);
    Int dj = aj - static_cast<Int>(c.j[b]);
    di = (di < 0 ? -di : di) + 1;
    dj = (dj < 0 ? -dj : dj) + 1;
    hits += static_cast<std::uint64_t>(q * (di * di + dj * dj) > rhs);
  }
  // b == a contributed iff 2q > p n^2; a box is not a chord with itself.
  if (q * 2 > rhs) --hits;
  return hits;
}

template <typename Int>
Count naive_count(const Coords& c, const Threshold& t, unsigned threads) {
  const Int q = static_cast<Int>(t.q());
  const Int rhs = static_cast<Int>(t.p()) * static_cast<Int>(c.n) * static_cast<Int>(c.n);
  std::mutex mu;
  Count total = 0;
  parallel_slices(c.i.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
    Count local = 0;
    for (std::size_t a = begin; a < end; ++a) local += naive_row<Int>(c, a, q, rhs);
    std::lock_guard lock(mu);
    total += local;
  });
  return total;
}

}  // namespace

Count count_long_pairs_naive(std::span<const GridBox> boxes, const Threshold& t,
                             const CountOptions& options) {
  if (boxes.empty()) throw InvalidArgument("census needs a nonempty ring");
  const Coords c = split_coords(boxes);
  const unsigned threads = resolve_threads(options.threads);
  return fits_int64(c, t) ? naive_count<std::int64_t>(c, t, threads)
                          : naive_count<__int128>(c, t, threads);
}

Count count_long_pairs_naive(const CircleRing& ring, const Threshold& t,
                             const CountOptions& options) {
  const auto boxes = ring.boxes();
  return count_long_pairs_naive(std::span<const GridBox>(boxes), t, options);
}

Count count_long_pairs_fast(const CircleRing& ring, const Threshold& t,
                            const CountOptions& options) {
  if (ring.empty()) throw InvalidArgument("census needs a nonempty ring");
  const std::size_t m = ring.size();
  std::vector<std::int64_t> bi(m);
  std::vector<std::int64_t> bj(m);
  std::vector<double> theta(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    bi[k] = ring[k].box.i();
    bj[k] = ring[k].box.j();
    theta[k] = ring.entry_angle(k);
    theta[k + m] = theta[k] + kTwoPi;
  }
  for (std::size_t k = 1; k < m; ++k) {
    if (!(theta[k - 1] < theta[k])) {
      throw InvalidArgument("ring must be sorted counter-clockwise by entry angle");
    }
  }

  const std::int64_t n = ring.n();
  const __int128 q = t.q();
  const __int128 rhs = static_cast<__int128>(t.p()) * n * n;
  const double length = t.length();
  const double diameters = 2.0 * std::numbers::sqrt2 / static_cast<double>(n);

  // Certainly long: chord(delta) > t + slack, i.e. delta in (d_long, 2pi - d_long).
  const double long_arg = (length + kChordSlack) / 2.0;
  const bool has_long_window = long_arg < 1.0;
  const double d_long = has_long_window ? 2.0 * std::asin(long_arg) : std::numbers::pi;
  // Certainly short: chord(delta) + 2 diameters < t - slack.
  const double short_arg = (length - diameters - kChordSlack) / 2.0;
  if (short_arg >= 1.0) return 0;
  const double d_short = short_arg > 0.0 ? 2.0 * std::asin(short_arg) : 0.0;

  auto long_with = [&](std::size_t a, std::size_t b) {
    return is_long_gap(bi[a] - bi[b], bj[a] - bj[b], q, rhs);
  };

  std::mutex mu;
  Count total = 0;
  parallel_slices(m, resolve_threads(options.threads), [&](std::size_t begin, std::size_t end,
                                                           unsigned) {
    Count local = 0;
    for (std::size_t a = begin; a < end; ++a) {
      const double base = theta[a];
      const auto first = theta.begin() + static_cast<std::ptrdiff_t>(a + 1);
      const auto last = theta.begin() + static_cast<std::ptrdiff_t>(a + m);
      auto at = [&](auto it) { return static_cast<std::size_t>(it - theta.begin()); };

      const std::size_t s1 = at(std::lower_bound(first, last, base + d_short));
      const std::size_t s2 = at(std::upper_bound(first, last, base + kTwoPi - d_short));
      std::size_t l1 = s2;
      std::size_t l2 = s2;
      if (has_long_window) {
        l1 = at(std::upper_bound(first, last, base + d_long));
        l2 = at(std::lower_bound(first, last, base + kTwoPi - d_long));
        l2 = std::max(l1, l2);
        local += l2 - l1;
      }
      for (std::size_t k = s1; k < l1; ++k) local += long_with(a, k % m) ? 1 : 0;
      for (std::size_t k = l2; k < s2; ++k) local += long_with(a, k % m) ? 1 : 0;

      if (options.verify_windows) {
        for (std::size_t k = a + 1; k < a + m; ++k) {
          const bool inside_long = k >= l1 && k < l2;
          const bool outside = k < s1 || k >= s2;
          const bool exact = long_with(a, k % m);
          if ((inside_long && !exact) || (outside && exact)) {
            throw InvariantViolation("sweep window misclassified a pair at ring index " +
                                     std::to_string(a));
          }
        }
      }
    }
    std::lock_guard lock(mu);
    total += local;
  });
  return total;
}

ChordCensus make_census(const CircleRing& ring, Count long_pairs, const Threshold& t) {
  ChordCensus census;
  census.n = ring.n();
  census.circle_size = static_cast<std::int64_t>(ring.size());
  census.long_pairs = long_pairs;
  const Count size = ring.size();
  census.total_pairs = size * size;
  census.ratio = to_decimal(long_pairs) / to_decimal(census.total_pairs);
  const Count offdiag = census.total_pairs - size;
  census.ratio_offdiag = offdiag == 0 ? Decimal(0) : to_decimal(long_pairs) / to_decimal(offdiag);
  census.threshold = t;
  return census;
}

ChordCensus bertrand_ratio(std::int64_t n, const Threshold& t, CensusMode mode,
                           const CountOptions& options) {
  const CircleRing ring = enumerate_circle(n);
  const Count pairs = mode == CensusMode::kNaive ? count_long_pairs_naive(ring, t, options)
                                                 : count_long_pairs_fast(ring, t, options);
  return make_census(ring, pairs, t);
}

double AntipodalWindow::width() const {
  const double w = hi - lo;
  return w < 0 ? w + kTwoPi : w;
}

AntipodalWindow antipodal_window(double center_angle) {
  auto wrap = [](double x) {
    x = std::fmod(x, kTwoPi);
    return x < 0 ? x + kTwoPi : x;
  };
  const double c = wrap(center_angle);
  return {c, wrap(c + kTwoPi / 3.0), wrap(c + 2.0 * kTwoPi / 3.0)};
}

std::vector<ConvergenceRow> convergence_table(std::span<const std::int64_t> n_values,
                                              const Threshold& t, CensusMode mode,
                                              const CountOptions& options) {
  if (n_values.empty()) throw InvalidArgument("convergence table needs at least one n");
  if (!std::is_sorted(n_values.begin(), n_values.end())) {
    throw InvalidArgument("convergence table n values must be ascending");
  }
  const Decimal target = closed_form_target();
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_values.size());
  for (const std::int64_t n : n_values) {
    const ChordCensus census = bertrand_ratio(n, t, mode, options);
    ConvergenceRow row{n, census.circle_size, census.long_pairs, census.ratio, std::nullopt};
    if (t.is_default()) row.error = census.ratio - target;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace boxed_bertrand
