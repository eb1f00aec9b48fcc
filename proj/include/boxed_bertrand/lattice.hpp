#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace boxed_bertrand {

// Prime factorization by trial division up to sqrt(m).
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m);

struct DivisorCounts {
  std::uint64_t m = 1;
  std::int64_t r2 = 4;    // integer solutions of i^2 + j^2 = m
  std::int64_t tau = 1;   // number of divisors of m
};

// Sum over odd divisors d = 2e+1 of m of (-1)^e; r2(m) is four times this.
std::int64_t odd_divisor_character_sum(std::uint64_t m);

std::int64_t r2(std::uint64_t m);
std::int64_t tau(std::uint64_t m);
DivisorCounts divisor_counts(std::uint64_t m);

// r2(n^2), factoring n rather than n^2.
std::int64_t r2_of_square(std::uint64_t n);

}  // namespace boxed_bertrand
