#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "roughdist/numeric.hpp"

namespace roughdist {

/// Thrown when a candidate relation fails one of the order axioms, or when an
/// operation receives a structurally invalid input. `witness` holds the
/// offending element indices (pair or triple, depending on the axiom).
class PosetError : public std::runtime_error {
 public:
  enum class Kind {
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    EmptyPoset,
    NotAChain,
    NotSquare,
    DuplicateElement,
  };

  PosetError(Kind kind, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

/// Explicit finite partial order over labeled elements. Immutable after
/// construction; the order axioms are checked by the factory functions.
class FinitePoset {
 public:
  /// Validates a candidate relation table. Throws PosetError naming the
  /// violated axiom with a witness pair/triple.
  static FinitePoset validate(std::vector<std::string> labels,
                              std::vector<std::vector<bool>> leq);

  /// Builds a poset from "a <= b" pairs by reflexive-transitive closure,
  /// then validates (closure can only fail antisymmetry).
  static FinitePoset from_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static FinitePoset chain(std::size_t m);
  static FinitePoset antichain(std::size_t m);
  /// Powerset of `atoms` elements ordered by inclusion; element i is the
  /// subset with characteristic bits of i.
  static FinitePoset boolean_lattice(std::size_t atoms);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq_[i][j] || leq_[j][i]; }
  bool covers(std::size_t i, std::size_t j) const;  // j covers i
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// Global bottom/top if present.
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  FinitePoset induced(const std::vector<std::size_t>& subset) const;

 private:
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

/// Strictly increasing sequence of elements of a host poset.
struct Chain {
  std::vector<std::size_t> members;
};

struct ChainCover {
  std::vector<Chain> chains;
  bool disjoint = false;
};

/// Indexed family of subsets of {0, ..., ground_size-1}.
struct SetFamily {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::size_t>> members;
};

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const FinitePoset& p);

/// i(S) = c(S)/#(S) as an exact rational. Throws EmptyPoset.
Rational hasse_index(const FinitePoset& p);

/// True iff every consecutive pair of the chain is a covering pair.
/// Throws NotAChain when the members are not strictly increasing in p.
bool is_saturated_chain(const FinitePoset& p, const Chain& c);

struct WidthResult {
  std::size_t width = 0;
  std::vector<std::size_t> antichain;  // lexicographically first maximum antichain
};

/// Dilworth width via bipartite matching; the witness antichain is the
/// lexicographically first maximum one. Throws EmptyPoset.
WidthResult width(const FinitePoset& p);

/// Exhaustive maximum-antichain search, usable for m <= 20. Oracle path.
std::size_t max_antichain_bruteforce(const FinitePoset& p);

/// Pairwise-disjoint chain cover with exactly width(p) chains.
ChainCover disjoint_chain_cover(const FinitePoset& p);

struct Grading {
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::size_t> rank;
};

struct GradingResult {
  std::optional<Grading> grading;
  // Covering pair violating level consistency when not graded.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

GradingResult grading(const FinitePoset& p);

/// Partition into saturated chains spanning ranks j..(r-j); exhaustive search,
/// intended for m <= 16. Absent when p is not graded or no SCD exists.
std::optional<std::vector<Chain>> symmetric_chain_decomposition(const FinitePoset& p);

/// Hall-condition check (exponential in family size); oracle path.
bool sdr_exists_hall(const SetFamily& f);

/// Matching-based SDR existence; production path. Agrees with the Hall check.
bool sdr_exists(const SetFamily& f);

/// Distinct representatives when they exist; empty list for the empty family.
std::optional<std::vector<std::size_t>> find_sdr(const SetFamily& f);

}  // namespace roughdist
