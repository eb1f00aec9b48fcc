#pragma once

#include <vector>

namespace boxed_bertrand::quadrature {

// Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes by Newton iteration on the Legendre recurrence. order >= 1.
Rule gauss_legendre(int order);

template <typename F>
double integrate(const F& f, double a, double b, const Rule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

}  // namespace boxed_bertrand::quadrature
