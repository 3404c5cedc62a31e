#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "roughdist/numeric.hpp"
#include "roughdist/poset.hpp"

namespace roughdist {

class CountingError : public std::runtime_error {
 public:
  enum class Kind { InvalidSegment, NoBounds, InvalidConstraint };
  CountingError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// r rough objects over g distinguishable slots, each slot load in [a, b].
struct PartitionConstraint {
  Integer r;
  std::size_t g = 0;
  Integer a, b;
};

struct CountReport {
  Integer B;
  Integer n_o;
  Integer lower;
  Integer upper;
  bool zero_parts_permitted = false;  // a = 0: compositions allowed, products vanish
};

/// Streams every length-g sequence with sum r and parts in [a, b], in
/// lexicographic order. Returning false from the callback stops the stream.
void bounded_compositions(const PartitionConstraint& c,
                          const std::function<bool(const std::vector<Integer>&)>& emit);

/// Number of admissible compositions, by inclusion-exclusion. Cross-check
/// for the streaming count.
Integer bounded_composition_count(const PartitionConstraint& c);

/// B = sum over admissible compositions of the product of parts, with the
/// bounds n_o * a^g <= B <= n_o * b^g. Computed by convolution, not by
/// enumeration.
CountReport bounded_model_count(const PartitionConstraint& c);

/// Placements of pi indistinguishable objects into the alpha^2 - alpha
/// slots of a chain of alpha crisp elements: C(pi + s - 1, pi).
Integer chain_distribution_count(const Integer& pi_count, const Integer& alpha_len);

/// n(pi, alpha) - n(pi, alpha_o); the segment below the branching point is
/// excluded. Throws InvalidSegment when alpha_o > alpha.
Integer branched_chain_count(const Integer& pi_count, const Integer& alpha_len,
                             const Integer& alpha_o_len);

/// Distributes r rough objects over the slots of a bounded crisp poset using
/// its disjoint chain cover: r is split into at most width(C*) ordered parts,
/// per-chain placement counts are multiplied and summed. Slots shared below
/// branching points (the bottom/top segment common to extended chains) are
/// owned by the earliest chain; comparable pairs spanning two side chains are
/// accounted as cross slots. Throws NoBounds when the poset lacks 0 or 1.
CountReport chain_cover_model_count(const FinitePoset& c_star, const Integer& r,
                                    std::optional<std::pair<Integer, Integer>> bounds = {});

/// Ground-truth enumeration: multisets of size r over the ordered pairs of
/// distinct comparable elements of the poset. Intended for small instances.
Integer placement_oracle_count(const FinitePoset& c_star, std::size_t r);

/// Number of ordered pairs of distinct comparable elements.
std::size_t comparable_pair_count(const FinitePoset& p);

}  // namespace roughdist
