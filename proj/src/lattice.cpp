#include "boxed_bertrand/lattice.hpp"

#include "boxed_bertrand/errors.hpp"

namespace boxed_bertrand {
namespace {

void require_positive(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("argument must be a positive integer");
}

// The alternating odd-divisor sum is multiplicative: for an odd prime p with
// character chi(p) = +-1 the local factor is sum_{k<=e} chi(p)^k.
std::int64_t character_sum_from(const std::vector<std::pair<std::uint64_t, int>>& factors,
                                int exponent_scale) {
  std::int64_t total = 1;
  for (const auto& [p, e0] : factors) {
    const int e = e0 * exponent_scale;
    if (p == 2) continue;
    if (p % 4 == 1) {
      total *= e + 1;
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  return total;
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m) {
  require_positive(m);
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  return factors;
}

std::int64_t odd_divisor_character_sum(std::uint64_t m) {
  return character_sum_from(factorize(m), 1);
}

std::int64_t r2(std::uint64_t m) { return 4 * odd_divisor_character_sum(m); }

std::int64_t tau(std::uint64_t m) {
  std::int64_t total = 1;
  for (const auto& [p, e] : factorize(m)) total *= e + 1;
  return total;
}

DivisorCounts divisor_counts(std::uint64_t m) {
  const auto factors = factorize(m);
  std::int64_t t = 1;
  for (const auto& [p, e] : factors) t *= e + 1;
  return {m, 4 * character_sum_from(factors, 1), t};
}

std::int64_t r2_of_square(std::uint64_t n) {
  return 4 * character_sum_from(factorize(n), 2);
}

}  // namespace boxed_bertrand
