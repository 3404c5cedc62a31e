#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace roughdist {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the integer square root. Exact, no floating point.
Integer isqrt_floor(const Integer& n);

/// Fast path for machine-word inputs.
std::uint64_t isqrt_floor_u64(std::uint64_t n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(const Integer& n, const Integer& k);

}  // namespace roughdist
