#include "roughdist/indices.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace roughdist {

NuValue nu(const ApproximationPair& a, const ApproximationPair& b) {
  const bool lowers_equal = a.lower == b.lower;
  const bool uppers_equal = a.upper == b.upper;
  if (lowers_equal && uppers_equal) return NuValue::Zero;
  if (!lowers_equal && !uppers_equal) return NuValue::One;
  if (!lowers_equal) return NuValue::InvPi;
  return NuValue::InvE;
}

SymbolicIndex iota(const std::vector<ApproximationPair>& rough_pairs) {
  SymbolicIndex idx{0, 0, 0, 0};
  for (const auto& a : rough_pairs)
    for (const auto& b : rough_pairs) {
      switch (nu(a, b)) {
        case NuValue::Zero: ++idx.c0; break;
        case NuValue::One: ++idx.c1; break;
        case NuValue::InvPi: ++idx.c_pi; break;
        case NuValue::InvE: ++idx.c_e; break;
      }
    }
  return idx;
}

double SymbolicIndex::numeric() const {
  return c1.convert_to<double>() + c_pi.convert_to<double>() / std::numbers::pi +
         c_e.convert_to<double>() / std::numbers::e;
}

std::string SymbolicIndex::render() const {
  std::ostringstream os;
  os << c1 << " + " << c_pi << "/pi + " << c_e << "/e";
  return os.str();
}

double RelativeIndex::numeric() const {
  return q1.convert_to<double>() + q_pi.convert_to<double>() / std::numbers::pi +
         q_e.convert_to<double>() / std::numbers::e;
}

RelativeIndex iota_star(const SymbolicIndex& idx, const Integer& n, const Integer& k) {
  if (n == k) throw IndexError("iota_star: n = k gives a degenerate denominator");
  Integer d = (n - k) * (n - k);
  return RelativeIndex{Rational(idx.c1, d), Rational(idx.c_pi, d), Rational(idx.c_e, d)};
}

}  // namespace roughdist
