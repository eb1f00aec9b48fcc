#include "boxed_bertrand/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace boxed_bertrand {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  // Correct the floating estimate; r*r must not overflow, so clamp first.
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFull;
  r = std::min(r, kMaxRoot);
  while (r * r > v) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::string to_string(const Decimal& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

}  // namespace boxed_bertrand
