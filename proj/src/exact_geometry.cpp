#include "boxed_bertrand/exact_geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "boxed_bertrand/errors.hpp"

namespace boxed_bertrand {
namespace {

std::uint64_t abs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

// Nearest |coordinate| of [k, k+1] to zero.
std::uint64_t nearest_abs(std::int64_t k) {
  if (k <= 0 && 0 <= k + 1) return 0;
  return std::min(abs64(k), abs64(k + 1));
}

std::uint64_t farthest_abs(std::int64_t k) {
  return std::max(abs64(k), abs64(k + 1));
}

void require_same_resolution(const GridBox& a, const GridBox& b) {
  if (a.n() != b.n()) {
    throw ResolutionMismatch("boxes have different resolutions: " +
                             std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()));
  }
}

}  // namespace

GridBox::GridBox(std::int64_t i, std::int64_t j, std::int64_t n)
    : i_(i), j_(j), n_(n) {
  if (n < 1) throw InvalidArgument("grid resolution n must be >= 1");
}

std::strong_ordering compare(const ScaledSq& a, const ScaledSq& b) {
  if (a.scale != b.scale) {
    throw ResolutionMismatch("ScaledSq values at different scales");
  }
  return a.num <=> b.num;
}

Threshold::Threshold(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) {
    throw InvalidArgument("threshold p/q needs positive p and q");
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

double Threshold::length() const {
  return std::sqrt(static_cast<double>(p_) / static_cast<double>(q_));
}

Threshold parse_threshold(const std::string& text) {
  const auto slash = text.find('/');
  auto parse = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc{} || ptr != end || part.empty()) {
      throw InvalidArgument("malformed threshold '" + text + "', expected p/q");
    }
    return v;
  };
  const std::string_view view(text);
  if (slash == std::string::npos) return Threshold(parse(view), 1);
  return Threshold(parse(view.substr(0, slash)), parse(view.substr(slash + 1)));
}

ScaledSq min_sq_dist_origin(const GridBox& b) {
  const std::uint64_t cx = nearest_abs(b.i());
  const std::uint64_t cy = nearest_abs(b.j());
  return {cx * cx + cy * cy, b.n()};
}

ScaledSq max_sq_dist_origin(const GridBox& b) {
  const std::uint64_t fx = farthest_abs(b.i());
  const std::uint64_t fy = farthest_abs(b.j());
  return {fx * fx + fy * fy, b.n()};
}

bool intersects_unit_circle(const GridBox& b) {
  const auto n2 = static_cast<std::uint64_t>(b.n()) * static_cast<std::uint64_t>(b.n());
  return min_sq_dist_origin(b).num < n2 && max_sq_dist_origin(b).num > n2;
}

bool is_exceptional(const GridBox& b) {
  const __int128 n2 = static_cast<__int128>(b.n()) * b.n();
  for (std::int64_t dx = 0; dx <= 1; ++dx) {
    for (std::int64_t dy = 0; dy <= 1; ++dy) {
      const __int128 x = b.i() + dx;
      const __int128 y = b.j() + dy;
      if (x * x + y * y == n2) return true;
    }
  }
  return false;
}

ScaledSq max_sq_gap(const GridBox& a, const GridBox& b) {
  require_same_resolution(a, b);
  const std::uint64_t gi = abs64(a.i() - b.i()) + 1;
  const std::uint64_t gj = abs64(a.j() - b.j()) + 1;
  return {gi * gi + gj * gj, a.n()};
}

bool is_long_pair(const GridBox& a, const GridBox& b, const Threshold& t) {
  require_same_resolution(a, b);
  if (a == b) throw InvalidChord("a chord needs two distinct boxes");
  const __int128 n2 = static_cast<__int128>(a.n()) * a.n();
  return is_long_gap(a.i() - b.i(), a.j() - b.j(), t.q(), t.p() * n2);
}

}  // namespace boxed_bertrand
