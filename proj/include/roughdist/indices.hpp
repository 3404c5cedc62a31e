#pragma once

#include <stdexcept>
#include <vector>

#include "roughdist/granular.hpp"
#include "roughdist/numeric.hpp"

namespace roughdist {

enum class NuValue { Zero, One, InvPi, InvE };

/// Disagreement weight of two approximation pairs, per the four-way table.
NuValue nu(const ApproximationPair& a, const ApproximationPair& b);

/// Exact value c1 + c_pi/pi + c_e/e, kept as integer coefficients.
struct SymbolicIndex {
  Integer c0, c1, c_pi, c_e;

  Integer pair_count() const { return c0 + c1 + c_pi + c_e; }
  double numeric() const;
  std::string render() const;  // "c1 + c_pi/pi + c_e/e"
};

/// iota(R, C): nu summed over all ordered pairs of R, diagonal included
/// (the diagonal contributes Zero).
SymbolicIndex iota(const std::vector<ApproximationPair>& rough_pairs);

/// iota / (n - k)^2, coefficients as exact rationals.
struct RelativeIndex {
  Rational q1, q_pi, q_e;
  double numeric() const;
};

class IndexError : public std::runtime_error {
 public:
  explicit IndexError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Throws IndexError when n = k (degenerate denominator).
RelativeIndex iota_star(const SymbolicIndex& idx, const Integer& n, const Integer& k);

}  // namespace roughdist
