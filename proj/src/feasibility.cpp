#include "roughdist/feasibility.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace roughdist {

namespace {

Rational case_pi(const Integer& n, const Integer& k) {
  return Rational(n - k, k * k - k);
}

// Largest k with k*k <= n/alpha, as an exact integer.
Integer k_range_max(const Integer& n, const Rational& alpha) {
  Integer p = boost::multiprecision::numerator(alpha);
  Integer q = boost::multiprecision::denominator(alpha);
  return isqrt_floor(n * q / p);
}

}  // namespace

std::optional<Integer> case0_k(const Integer& n) {
  if (n < 1) return std::nullopt;
  Integer d = 1 + 4 * n;
  Integer s = isqrt_floor(d);
  if (s * s != d) return std::nullopt;
  if ((s - 1) % 2 != 0) return std::nullopt;
  Integer k = (s - 1) / 2;
  if (k < 1) return std::nullopt;
  return k;
}

std::optional<Integer> case1_k(const Integer& n) {
  if (n < 1) return std::nullopt;
  Integer s = isqrt_floor(n);
  if (s * s != n) return std::nullopt;
  return s;
}

std::vector<PowerSetModel> case1_powerset_models(const Integer& n_bound) {
  std::vector<PowerSetModel> out;
  Integer n = 1;
  for (unsigned x = 0; n <= n_bound; ++x, n *= 2) {
    if (x % 2 != 0) continue;
    PowerSetModel m;
    m.x = x;
    m.k = Integer(1) << (x / 2);
    m.n = n;
    out.push_back(std::move(m));
  }
  return out;
}

FeasibilityReport case2_admissible_ks(const Integer& n, const Rational& alpha) {
  if (n < 3)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "case 2 needs n >= 3");
  if (alpha <= 0 || alpha > 1)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "alpha must be in (0,1]");
  FeasibilityReport report;
  report.k_min = 2;
  report.k_max = k_range_max(n, alpha);
  if (report.k_max < 2)
    throw FeasibilityError(FeasibilityError::Kind::DegenerateRange,
                           "no k >= 2 in the scan range");
  report.candidate_count = report.k_max - 1;
  const Integer sqrt_n = isqrt_floor(n);
  for (Integer k = 2; k <= report.k_max; ++k) {
    Rational pi = case_pi(n, k);
    if (pi <= 0 || pi > alpha) continue;
    FeasibilityEntry e{k, pi, n - k};
    if (k <= sqrt_n) report.admissible_trimmed.push_back(e);
    report.admissible.push_back(std::move(e));
  }
  if (report.admissible.empty())
    report.infeasible_reason = "no k in {2.." + report.k_max.str() +
                               "} has (n-k)/(k^2-k) in (0, alpha]";
  return report;
}

std::vector<Integer> case2_k_from_pi(const Integer& n, const Rational& pi) {
  if (n < 3)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "case 2 needs n >= 3");
  if (pi <= 0 || pi > 1)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "pi must be in (0,1]");
  // n - k = pi (k^2 - k) with pi = p/q becomes p k^2 + (q - p) k - n q = 0.
  Integer p = boost::multiprecision::numerator(pi);
  Integer q = boost::multiprecision::denominator(pi);
  Integer disc = (q - p) * (q - p) + 4 * p * n * q;
  Integer s = isqrt_floor(disc);
  std::vector<Integer> out;
  if (s * s != disc) return out;
  Integer num = p - q + s;
  if (num % (2 * p) != 0) return out;
  Integer k = num / (2 * p);
  if (k >= 2 && Rational(n - k, 1) == pi * Rational(k * k - k, 1)) out.push_back(k);
  return out;
}

Integer case2_count_values(const Integer& n, const Rational& pi, bool trimmed,
                           bool strict) {
  if (n < 3)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "case 2 needs n >= 3");
  if (pi <= 0 || pi > 1)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "pi must be in (0,1]");
  Integer k_max = k_range_max(n, pi);
  if (trimmed) k_max = std::min(k_max, isqrt_floor(n));
  if (k_max < 2) return 0;
  if (!strict) return k_max - 1;
  Integer count = 0;
  for (Integer k = 2; k <= k_max; ++k) {
    Rational v = case_pi(n, k);
    if (v > 0 && v <= pi) ++count;
  }
  return count;
}

std::vector<AlphaScanEntry> alpha_scan(const Integer& n, AlphaScanRange range) {
  if (n < 3)
    throw FeasibilityError(FeasibilityError::Kind::BadArgument, "alpha scan needs n >= 3");
  Integer k_max = range == AlphaScanRange::OpenRoot
                      ? (n >= 2 ? isqrt_floor(n - 2) : Integer(0))  // k < sqrt(n-1)
                      : isqrt_floor(n);
  if (k_max < 2)
    throw FeasibilityError(FeasibilityError::Kind::DegenerateRange,
                           "no k >= 2 below the range bound");
  std::vector<AlphaScanEntry> out;
  for (Integer k = 2; k <= k_max; ++k) {
    AlphaScanEntry e;
    e.k = k;
    e.alpha = case_pi(n, k);
    e.admissible = e.alpha > 0 && e.alpha <= 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Rational> alpha_refine(const AlphaBracket& contains,
                                     const AlphaSearchConfig& config) {
  if (config.grid_n < 2 || config.epsilon <= 0 || config.max_rounds == 0)
    throw FeasibilityError(FeasibilityError::Kind::InvalidConfig,
                           "need grid_n >= 2, epsilon > 0, max_rounds >= 1");
  Rational lo = 0, hi = 1;
  for (unsigned round = 0; round < config.max_rounds; ++round) {
    Rational step = (hi - lo) / config.grid_n;
    // Exact hits at grid points end the search immediately.
    for (unsigned i = 1; i < config.grid_n; ++i) {
      Rational q = lo + step * i;
      if (contains(q, q)) return q;
    }
    bool bracketed = false;
    for (unsigned i = 0; i < config.grid_n; ++i) {
      Rational a = lo + step * i;
      Rational b = lo + step * (i + 1);
      if (contains(a, b)) {
        lo = a;
        hi = b;
        bracketed = true;
        break;
      }
    }
    if (!bracketed) return std::nullopt;
    if (hi - lo < config.epsilon) return (lo + hi) / 2;
  }
  return std::nullopt;
}

}  // namespace roughdist
