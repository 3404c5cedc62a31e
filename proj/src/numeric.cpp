#include "roughdist/numeric.hpp"

#include <stdexcept>

namespace roughdist {

std::uint64_t isqrt_floor_u64(std::uint64_t n) {
  if (n == 0) return 0;
  // Newton iteration seeded from the bit length; monotone decrease to the floor.
  int bits = 64 - __builtin_clzll(n);
  std::uint64_t x = std::uint64_t(1) << ((bits + 1) / 2);
  while (true) {
    std::uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
  if (n <= Integer(UINT64_MAX)) return Integer(isqrt_floor_u64(n.convert_to<std::uint64_t>()));
  return boost::multiprecision::sqrt(n);
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer kk = k;
  if (n - k < kk) kk = n - k;
  Integer result = 1;
  for (Integer i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

}  // namespace roughdist
