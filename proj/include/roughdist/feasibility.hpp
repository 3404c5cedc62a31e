#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roughdist/numeric.hpp"

namespace roughdist {

class FeasibilityError : public std::runtime_error {
 public:
  enum class Kind { DegenerateRange, InvalidConfig, BadArgument };
  FeasibilityError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Case-0: n = k^2 + k. Present iff 1 + 4n is a perfect square with positive
/// integral root. Exact integer arithmetic only.
std::optional<Integer> case0_k(const Integer& n);

/// Case-1: n - k = k^2 - k, so k = sqrt(n) when n is a perfect square.
std::optional<Integer> case1_k(const Integer& n);

struct PowerSetModel {
  unsigned x = 0;  // power-set exponent, n = 2^x
  Integer k;
  Integer n;
};

/// All solutions of 2^x = k^2 with n = 2^x <= n_bound: x even, k = 2^{x/2}.
std::vector<PowerSetModel> case1_powerset_models(const Integer& n_bound);

struct FeasibilityEntry {
  Integer k;
  std::optional<Rational> pi;
  Integer rough_count;
};

struct FeasibilityReport {
  std::vector<FeasibilityEntry> admissible;          // exact pi(k) in (0, alpha]
  std::vector<FeasibilityEntry> admissible_trimmed;  // additionally k <= floor(sqrt(n))
  Integer k_min, k_max;                              // scanned range {2..floor(sqrt(n/alpha))}
  Integer candidate_count;                           // size of the scanned range
  std::string infeasible_reason;
};

/// Scans k in {2..floor(sqrt(n/alpha))}, computing pi(k) = (n-k)/(k^2-k)
/// exactly; an entry is admissible iff 0 < pi(k) <= alpha. candidate_count is
/// the range size (the reading behind the published count of possible k).
FeasibilityReport case2_admissible_ks(const Integer& n, const Rational& alpha);

/// Integral roots k of n - k = pi (k^2 - k), via the exact quadratic.
std::vector<Integer> case2_k_from_pi(const Integer& n, const Rational& pi);

/// Untrimmed: #{k : 2 <= k <= floor(sqrt(n/pi))}; trimmed caps at floor(sqrt(n)).
/// strict = count only k whose pi(k) equals some exact admissible value
/// (i.e. pi(k) in (0, pi]).
Integer case2_count_values(const Integer& n, const Rational& pi, bool trimmed,
                           bool strict = false);

enum class AlphaScanRange {
  TheoremBound,   // k in {2..floor(sqrt(n/alpha))} with alpha = 1, i.e. floor(sqrt(n))
  OpenRoot,       // k < sqrt(n - 1)
};

struct AlphaScanEntry {
  Integer k;
  Rational alpha;
  bool admissible = false;  // alpha in (0, 1]
};

/// Algorithm 1: alpha_k = (n-k)/(k^2-k) for every k in the selected range.
std::vector<AlphaScanEntry> alpha_scan(const Integer& n,
                                       AlphaScanRange range = AlphaScanRange::TheoremBound);

struct AlphaSearchConfig {
  unsigned grid_n = 10;
  Rational epsilon;
  unsigned max_rounds = 32;
};

/// Interval predicate: contains(lo, hi) is true iff a solution lies in
/// [lo, hi]; a degenerate interval [q, q] tests q itself.
using AlphaBracket = std::function<bool(const Rational& lo, const Rational& hi)>;

/// Algorithm 2: refine (0,1) by grid_n-fold subdivision of the bracketing
/// sub-interval; stops on an exact grid hit or when the bracket is narrower
/// than epsilon; absent after max_rounds.
std::optional<Rational> alpha_refine(const AlphaBracket& contains,
                                     const AlphaSearchConfig& config);

}  // namespace roughdist
