#pragma once

// Continuum reference models: closed-form constants, Monte Carlo simulators
// of the classical chord schemes, and the limiting angular density of C(n)
// with its antipodal double integral.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boxed_bertrand/arith.hpp"

namespace boxed_bertrand {

// (1+sqrt3)/8 - pi(2-sqrt3)/96, the limit of |Ch(n)| / |C(n)|^2.
Decimal closed_form_target();

// Reference digits of the antipodal integral, as published.
inline constexpr const char* kIntegralReferenceDigits = "0.33273773412864161039";

struct NamedConstant {
  std::string name;
  Decimal value;
  std::string note;
};

std::vector<NamedConstant> constant_table();

// f(phi) = (|sin phi| + |cos phi|) / 8.
double density_f(double phi);

// Integral of density_f over [a, b], in closed form.
double density_mass(double a, double b);

struct SimOptions {
  unsigned threads = 0;         // 0 = resolve_threads()
  double apex_angle = 0.0;      // solution 4/5: position of the fixed point a on C
};

struct SimEstimate {
  int solution_id = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  std::string rng;
};

inline constexpr const char* kRngName = "mt19937_64+splitmix64 streams, 65536-sample chunks";

// Bernoulli mean of the long-chord event (length > sqrt3) under solution
// `id` in 1..5. Deterministic in (id, samples, seed, apex_angle) and
// independent of the thread count.
SimEstimate simulate_solution(int id, std::uint64_t samples, std::uint64_t seed,
                              const SimOptions& options = {});

// Analytic probability of the sampling scheme actually simulated.
double analytic_solution_value(int id);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int order = 0;
  int cells = 0;
};

// Integral over x in [0, 2pi], y in [2pi/3, 4pi/3] of density(x) density(x+y).
// The domain is cut at multiples of pi/6 in x (which contains every x where
// a kink line x+y = k*pi/2 meets a y bound, and the lines x = k*pi/2) and at
// the kink lines in y; each cell gets a fixed-order Gauss-Legendre rule and
// the order doubles until |Q(2p) - Q(p)| reaches target_abs_err.
QuadratureResult antipodal_integral(const std::function<double(double)>& density,
                                    double target_abs_err, int subdivisions = 1);

QuadratureResult referee_integral(double target_abs_err, int subdivisions = 1);

}  // namespace boxed_bertrand
