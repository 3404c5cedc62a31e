#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roughdist/poset.hpp"

namespace roughdist {

/// Subsets of the universe as bitmasks; universe size is capped at 24.
using Subset = std::uint32_t;

class GranularError : public std::runtime_error {
 public:
  enum class Kind {
    NotAPartition,
    UniverseTooLarge,
    ConventionMismatch,
    EmptyScope,
    BadTables,
  };
  GranularError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct ApproximationPair {
  Subset lower = 0;
  Subset upper = 0;
  friend auto operator<=>(const ApproximationPair&, const ApproximationPair&) = default;
};

/// Universe with a granulation and lower/upper operators. A space built from a
/// partition evaluates the Pawlak operators on demand; explicit tables (for
/// |U| <= 16) store both maps over the full powerset.
class GranularOperatorSpace {
 public:
  static constexpr std::size_t kMaxUniverse = 24;
  static constexpr std::size_t kMaxTabulated = 16;

  /// Classical Pawlak construction from a partition of the universe.
  static GranularOperatorSpace pawlak(std::vector<std::string> element_labels,
                                      std::vector<Subset> blocks);

  /// Explicit extensional tables indexed by subset mask (size 2^|U| each).
  static GranularOperatorSpace from_tables(std::vector<std::string> element_labels,
                                           std::vector<Subset> granulation,
                                           std::vector<Subset> lower_table,
                                           std::vector<Subset> upper_table);

  Subset lower(Subset a) const;
  Subset upper(Subset a) const;

  std::size_t universe_size() const { return labels_.size(); }
  Subset full() const { return subset_count() - 1; }
  Subset subset_count() const { return Subset(1) << labels_.size(); }
  const std::vector<Subset>& granulation() const { return granulation_; }
  const std::vector<std::string>& element_labels() const { return labels_; }
  bool is_pawlak() const { return !blocks_.empty() || granulation_.empty(); }

  std::string render_subset(Subset a) const;

 private:
  GranularOperatorSpace() = default;

  std::vector<std::string> labels_;
  std::vector<Subset> granulation_;
  std::vector<Subset> blocks_;       // nonempty in Pawlak mode
  std::vector<Subset> lower_table_;  // nonempty in table mode
  std::vector<Subset> upper_table_;
};

struct SpaceValidation {
  struct Failure {
    std::string axiom;
    Subset witness;
  };
  std::vector<Failure> failures;
  /// Subsets where the definition's strict u-inclusion would fail (A^u = A^uu).
  std::vector<Subset> strictness_equalities;
  bool ok() const { return failures.empty(); }
};

/// Checks the space axioms over the whole powerset; monotonicity is checked
/// over single-element extensions, which suffices by chaining.
SpaceValidation validate_space(const GranularOperatorSpace& g);

struct AdmissibilityReport {
  bool wra = false, ls = false, fu = false;
  std::optional<Subset> wra_witness, ls_witness;
  std::optional<std::pair<Subset, Subset>> fu_witness;
  bool ok() const { return wra && ls && fu; }
};

/// WRA with the term operation fixed to finite unions of granules; LS; FU.
AdmissibilityReport check_admissible_granulation(const GranularOperatorSpace& g);

struct DefinitenessReport {
  bool lower_definite = false;
  bool upper_definite = false;
  bool definite = false;
  bool strongly_upper_definite = false;
  bool pre_strongly_upper_definite = false;
  bool upper_pre_definite = false;
  std::size_t stabilization_index = 0;  // smallest n with A^{u^n} = A^{u^{n+1}}
};

DefinitenessReport classify_definiteness(const GranularOperatorSpace& g, Subset a);

struct RoughQuotient {
  struct Class {
    ApproximationPair pair;
    std::vector<Subset> members;
  };
  std::vector<Class> classes;
  FinitePoset order;  // basic rough order, componentwise inclusion of pairs
  std::size_t bottom_class = 0;
  std::size_t top_class = 0;
};

RoughQuotient rough_quotient(const GranularOperatorSpace& g);

/// Maximal roughly consistent objects (the ~-classes) as member lists.
std::vector<std::vector<Subset>> roughly_consistent_objects(const GranularOperatorSpace& g);
std::vector<std::vector<Subset>> rough_objects_maximal(const GranularOperatorSpace& g);
std::vector<std::vector<Subset>> definite_rough_objects(const GranularOperatorSpace& g);

enum class RoughConvention { NonDefiniteSubsets, MaximalClasses };

struct FrameworkInstance {
  std::vector<Subset> all_objects;  // the classified collection, powerset order
  std::vector<Subset> crisp;
  std::vector<Subset> rough;
  std::map<Subset, ApproximationPair> phi;
  std::size_t n = 0;
  std::size_t k = 0;
};

/// C = definite subsets, R = rough objects per convention, phi = (x^l, x^u)
/// unless an explicit map is supplied. Validates the RO/CO/RC assumptions.
FrameworkInstance build_framework(
    const GranularOperatorSpace& g,
    RoughConvention convention = RoughConvention::NonDefiniteSubsets,
    const std::map<Subset, ApproximationPair>* explicit_phi = nullptr);

/// Maximal crisp subsets below x / minimal crisp supersets above x.
std::vector<Subset> lower_definable_scope(Subset x, const std::vector<Subset>& crisp);
std::vector<Subset> upper_definable_scope(Subset x, const std::vector<Subset>& crisp);

/// c(x)*v(x) minus diagonal pairs (psi maps into C^2 minus the diagonal).
std::size_t representation_count(Subset x, const std::vector<Subset>& crisp);

struct OracleClassification {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t rough = 0;
  std::map<std::pair<Subset, Subset>, std::size_t> multiplicity;
};

/// Exhaustive subset classification; |U| <= 12.
OracleClassification oracle_classify(const GranularOperatorSpace& g);

}  // namespace roughdist
