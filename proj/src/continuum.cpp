#include "boxed_bertrand/continuum.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/parallel.hpp"
#include "boxed_bertrand/quadrature.hpp"

namespace boxed_bertrand {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kChunk = 1u << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Integral of |sin t| over [0, x].
double abs_sin_primitive(double x) {
  const double k = std::floor(x / kPi);
  return 2.0 * k + (1.0 - std::cos(x - k * kPi));
}

class Sampler {
 public:
  Sampler(int id, double apex_angle)
      : id_(id), ax_(std::cos(apex_angle)), ay_(std::sin(apex_angle)) {}

  bool long_chord(std::mt19937_64& rng) const {
    switch (id_) {
      case 1: {
        // Two independent uniform endpoints; long iff the gap is antipodal.
        const double u = 2.0 * kPi * unit(rng);
        const double v = 2.0 * kPi * unit(rng);
        double gap = v - u;
        if (gap < 0) gap += 2.0 * kPi;
        return gap > 2.0 * kPi / 3.0 && gap < 4.0 * kPi / 3.0;
      }
      case 2: {
        // Direction in [0, pi), position along the perpendicular diameter in (0, 2).
        [[maybe_unused]] const double direction = kPi * unit(rng);
        double x = 0.0;
        do {
          x = 2.0 * unit(rng);
        } while (x == 0.0);
        return std::abs(1.0 - x) < 0.5;
      }
      case 3: {
        // Midpoint uniform in the punctured open disc.
        double x = 0.0;
        double y = 0.0;
        double r2 = 0.0;
        do {
          x = 2.0 * unit(rng) - 1.0;
          y = 2.0 * unit(rng) - 1.0;
          r2 = x * x + y * y;
        } while (r2 >= 1.0 || r2 == 0.0);
        return r2 < 0.25;
      }
      case 4: {
        // Fixed a on C, b uniform in the closed disc; chord through a and b.
        double dx = 0.0;
        double dy = 0.0;
        double d2 = 0.0;
        for (;;) {
          const double x = 2.0 * unit(rng) - 1.0;
          const double y = 2.0 * unit(rng) - 1.0;
          if (x * x + y * y > 1.0) continue;
          dx = x - ax_;
          dy = y - ay_;
          d2 = dx * dx + dy * dy;
          if (d2 > 0.0) break;
        }
        // The chord from a along unit direction u has length 2|a.u|.
        const double dot = ax_ * dx + ay_ * dy;
        return 4.0 * dot * dot > 3.0 * d2;
      }
      case 5: {
        // Length d uniform in (0, 2], then a fair coin picks the side.
        const double d = 2.0 * (1.0 - unit(rng));
        [[maybe_unused]] const bool upper = (rng() & 1u) != 0;
        return d * d > 3.0;
      }
      default:
        throw InvalidArgument("solution id must be in 1..5");
    }
  }

 private:
  int id_;
  double ax_;
  double ay_;
};

}  // namespace

Decimal closed_form_target() {
  using boost::math::constants::pi;
  const Decimal sqrt3 = sqrt(Decimal(3));
  return (1 + sqrt3) / 8 - pi<Decimal>() * (2 - sqrt3) / 96;
}

std::vector<NamedConstant> constant_table() {
  using boost::math::constants::pi;
  const Decimal sqrt3 = sqrt(Decimal(3));
  const Decimal p = pi<Decimal>();
  return {
      {"sol1", Decimal(1) / 3, "uniform endpoints on C"},
      {"sol2", Decimal(1) / 2, "perpendicular-diameter position"},
      {"sol3", Decimal(1) / 4, "uniform midpoint in D"},
      {"sol4", Decimal(1) / 3 + sqrt3 / (2 * p), "fixed endpoint, second point in closed disc"},
      {"sol5_paper", 2 - sqrt3, "stated value for the uniform-length scheme"},
      {"sol5_literal", (2 - sqrt3) / 2,
       "P(d > sqrt3) for d uniform on (0,2]; differs from sol5_paper by a factor 2"},
      {"target", closed_form_target(), "limit of |Ch(n)|/|C(n)|^2"},
      {"arc13", (1 + sqrt3) / 16, "limit of |C_{0,pi/3}(n)|/|C(n)|"},
      {"integral_I", Decimal(kIntegralReferenceDigits), "published digits of the antipodal integral"},
  };
}

double density_f(double phi) {
  return (std::abs(std::sin(phi)) + std::abs(std::cos(phi))) / 8.0;
}

double density_mass(double a, double b) {
  auto primitive = [](double x) {
    return (abs_sin_primitive(x) + abs_sin_primitive(x + kPi / 2) - 1.0) / 8.0;
  };
  return primitive(b) - primitive(a);
}

double analytic_solution_value(int id) {
  switch (id) {
    case 1: return 1.0 / 3.0;
    case 2: return 0.5;
    case 3: return 0.25;
    case 4: return 1.0 / 3.0 + std::sqrt(3.0) / (2.0 * kPi);
    case 5: return (2.0 - std::sqrt(3.0)) / 2.0;
    default: throw InvalidArgument("solution id must be in 1..5");
  }
}

SimEstimate simulate_solution(int id, std::uint64_t samples, std::uint64_t seed,
                              const SimOptions& options) {
  if (id < 1 || id > 5) throw InvalidArgument("solution id must be in 1..5");
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  const Sampler sampler(id, options.apex_angle);

  // Chunk c always draws from stream seed ^ splitmix64(c), so the result does
  // not depend on how chunks are spread over workers.
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> hits{0};
  parallel_slices(static_cast<std::size_t>(chunks), resolve_threads(options.threads),
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    std::uint64_t local = 0;
                    for (std::size_t c = begin; c < end; ++c) {
                      std::mt19937_64 rng(seed ^ splitmix64(c));
                      const std::uint64_t first = c * kChunk;
                      const std::uint64_t count = std::min(kChunk, samples - first);
                      for (std::uint64_t s = 0; s < count; ++s) {
                        local += sampler.long_chord(rng) ? 1 : 0;
                      }
                    }
                    hits += local;
                  });

  SimEstimate est;
  est.solution_id = id;
  est.samples = samples;
  est.hits = hits.load();
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  est.seed = seed;
  est.rng = kRngName;
  return est;
}

namespace {

double tensor_rule_sum(const std::function<double(double)>& density,
                       const std::vector<double>& x_cuts, const quadrature::Rule& rule,
                       double* abs_sum) {
  constexpr double y_lo = 2.0 * kPi / 3.0;
  constexpr double y_hi = 4.0 * kPi / 3.0;
  constexpr double quarter = kPi / 2.0;
  double total = 0.0;
  double magnitude = 0.0;
  std::vector<double> y_cuts;
  for (std::size_t c = 0; c + 1 < x_cuts.size(); ++c) {
    const double xa = x_cuts[c];
    const double xb = x_cuts[c + 1];
    const double x_cell = quadrature::integrate(
        [&](double x) {
          // Inner integral over y, split where x + y crosses a multiple of pi/2.
          y_cuts.assign({y_lo});
          const double first = std::ceil((x + y_lo) / quarter);
          for (double k = first; k * quarter - x < y_hi; k += 1.0) {
            const double y = k * quarter - x;
            if (y > y_lo) y_cuts.push_back(y);
          }
          y_cuts.push_back(y_hi);
          double inner = 0.0;
          for (std::size_t m = 0; m + 1 < y_cuts.size(); ++m) {
            inner += quadrature::integrate([&](double y) { return density(x + y); }, y_cuts[m],
                                           y_cuts[m + 1], rule);
          }
          return density(x) * inner;
        },
        xa, xb, rule);
    total += x_cell;
    magnitude += std::abs(x_cell);
  }
  if (abs_sum != nullptr) *abs_sum = magnitude;
  return total;
}

}  // namespace

QuadratureResult antipodal_integral(const std::function<double(double)>& density,
                                    double target_abs_err, int subdivisions) {
  if (!(target_abs_err >= 1e-12)) {
    throw InvalidArgument("quadrature target error must be >= 1e-12");
  }
  if (subdivisions < 1) throw InvalidArgument("subdivisions must be >= 1");

  constexpr int kBaseCells = 12;  // multiples of pi/6 on [0, 2pi]
  const int cells = kBaseCells * subdivisions;
  std::vector<double> x_cuts(static_cast<std::size_t>(cells) + 1);
  for (int c = 0; c <= cells; ++c) x_cuts[static_cast<std::size_t>(c)] = 2.0 * kPi * c / cells;

  constexpr int kMaxOrder = 128;
  double previous = tensor_rule_sum(density, x_cuts, quadrature::gauss_legendre(4), nullptr);
  double estimate = std::numeric_limits<double>::infinity();
  for (int order = 8; order <= kMaxOrder; order *= 2) {
    double magnitude = 0.0;
    const double current =
        tensor_rule_sum(density, x_cuts, quadrature::gauss_legendre(order), &magnitude);
    // The difference of successive orders cannot resolve below rounding.
    const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
    estimate = std::max(std::abs(current - previous), rounding);
    if (estimate <= target_abs_err) return {current, estimate, order, cells};
    previous = current;
  }
  throw ToleranceUnreachable("antipodal integral did not reach the requested tolerance",
                             estimate);
}

QuadratureResult referee_integral(double target_abs_err, int subdivisions) {
  return antipodal_integral(density_f, target_abs_err, subdivisions);
}

}  // namespace boxed_bertrand
