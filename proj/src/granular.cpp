#include "roughdist/granular.hpp"

#include <algorithm>
#include <bit>

namespace roughdist {

GranularOperatorSpace GranularOperatorSpace::pawlak(std::vector<std::string> element_labels,
                                                    std::vector<Subset> blocks) {
  if (element_labels.size() > kMaxUniverse)
    throw GranularError(GranularError::Kind::UniverseTooLarge,
                        "universe larger than " + std::to_string(kMaxUniverse));
  const Subset full = (Subset(1) << element_labels.size()) - 1;
  Subset covered = 0;
  for (Subset b : blocks) {
    if (b == 0)
      throw GranularError(GranularError::Kind::NotAPartition, "empty block");
    if ((b & ~full) != 0)
      throw GranularError(GranularError::Kind::NotAPartition, "block outside universe");
    if ((b & covered) != 0)
      throw GranularError(GranularError::Kind::NotAPartition, "blocks overlap");
    covered |= b;
  }
  if (covered != full)
    throw GranularError(GranularError::Kind::NotAPartition, "blocks do not cover universe");

  GranularOperatorSpace g;
  g.labels_ = std::move(element_labels);
  g.granulation_ = blocks;
  g.blocks_ = std::move(blocks);
  if (g.labels_.size() <= kMaxTabulated) {
    const Subset count = Subset(1) << g.labels_.size();
    g.lower_table_.resize(count);
    g.upper_table_.resize(count);
    for (Subset a = 0; a < count; ++a) {
      Subset lo = 0, up = 0;
      for (Subset b : g.blocks_) {
        if ((b & a) == b) lo |= b;
        if ((b & a) != 0) up |= b;
      }
      g.lower_table_[a] = lo;
      g.upper_table_[a] = up;
    }
  }
  return g;
}

GranularOperatorSpace GranularOperatorSpace::from_tables(
    std::vector<std::string> element_labels, std::vector<Subset> granulation,
    std::vector<Subset> lower_table, std::vector<Subset> upper_table) {
  if (element_labels.size() > kMaxTabulated)
    throw GranularError(GranularError::Kind::UniverseTooLarge,
                        "explicit tables capped at universe size " +
                            std::to_string(kMaxTabulated));
  const std::size_t count = std::size_t(1) << element_labels.size();
  if (lower_table.size() != count || upper_table.size() != count)
    throw GranularError(GranularError::Kind::BadTables,
                        "tables must be total over the powerset");
  GranularOperatorSpace g;
  g.labels_ = std::move(element_labels);
  g.granulation_ = std::move(granulation);
  g.lower_table_ = std::move(lower_table);
  g.upper_table_ = std::move(upper_table);
  return g;
}

Subset GranularOperatorSpace::lower(Subset a) const {
  if (!lower_table_.empty()) return lower_table_[a];
  Subset lo = 0;
  for (Subset b : blocks_)
    if ((b & a) == b) lo |= b;
  return lo;
}

Subset GranularOperatorSpace::upper(Subset a) const {
  if (!upper_table_.empty()) return upper_table_[a];
  Subset up = 0;
  for (Subset b : blocks_)
    if ((b & a) != 0) up |= b;
  return up;
}

std::string GranularOperatorSpace::render_subset(Subset a) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (a & (Subset(1) << i)) {
      if (!first) s += ",";
      s += labels_[i];
      first = false;
    }
  return s + "}";
}

SpaceValidation validate_space(const GranularOperatorSpace& g) {
  SpaceValidation report;
  const Subset count = g.subset_count();
  auto fail = [&](const char* axiom, Subset witness) {
    report.failures.push_back({axiom, witness});
  };
  if (g.lower(0) != 0) fail("empty_lower", 0);
  if (g.upper(0) != 0) fail("empty_upper", 0);
  if ((g.lower(g.full()) & ~g.full()) != 0) fail("S_lower_subset", g.full());
  if ((g.upper(g.full()) & ~g.full()) != 0) fail("S_upper_subset", g.full());

  for (Subset a = 0; a < count; ++a) {
    Subset lo = g.lower(a), up = g.upper(a);
    if ((lo & a) != lo) fail("lower_contraction", a);
    if (g.lower(lo) != lo) fail("lower_idempotent", a);
    Subset upup = g.upper(up);
    if ((up & upup) != up) fail("upper_expansion", a);
    if (up == upup) report.strictness_equalities.push_back(a);
    // Monotonicity over single-element extensions.
    for (std::size_t i = 0; i < g.universe_size(); ++i) {
      Subset bit = Subset(1) << i;
      if (a & bit) continue;
      Subset b = a | bit;
      if ((lo & g.lower(b)) != lo) fail("lower_monotone", a);
      if ((up & g.upper(b)) != up) fail("upper_monotone", a);
    }
  }
  return report;
}

AdmissibilityReport check_admissible_granulation(const GranularOperatorSpace& g) {
  AdmissibilityReport report;
  const Subset count = g.subset_count();
  const auto& granules = g.granulation();

  // WRA with t = finite union: x^l and x^u must each be a union of granules.
  auto is_union_of_granules = [&](Subset target) {
    if (target == 0) return true;  // empty union
    Subset built = 0;
    for (Subset y : granules)
      if ((y & target) == y) built |= y;
    return built == target;
  };
  report.wra = true;
  for (Subset x = 0; x < count; ++x)
    if (!is_union_of_granules(g.lower(x)) || !is_union_of_granules(g.upper(x))) {
      report.wra = false;
      report.wra_witness = x;
      break;
    }

  report.ls = true;
  for (Subset x = 0; x < count && report.ls; ++x)
    for (Subset y : granules)
      if ((y & x) == y && (y & g.lower(x)) != y) {
        report.ls = false;
        report.ls_witness = x;
        break;
      }

  report.fu = true;
  for (std::size_t i = 0; i < granules.size() && report.fu; ++i)
    for (std::size_t j = 0; j < granules.size(); ++j) {
      Subset x = granules[i], y = granules[j];
      bool found = false;
      // Containment is read inclusively so that z = S works whenever S is
      // definite (otherwise the one-block granulation would have no z at all).
      for (Subset z = 0; z < count; ++z) {
        if ((x & z) != x || (y & z) != y) continue;
        if (g.lower(z) == z && g.upper(z) == z) { found = true; break; }
      }
      if (!found) {
        report.fu = false;
        report.fu_witness = std::make_pair(x, y);
        break;
      }
    }
  return report;
}

DefinitenessReport classify_definiteness(const GranularOperatorSpace& g, Subset a) {
  DefinitenessReport r;
  r.lower_definite = g.lower(a) == a;
  r.upper_definite = g.upper(a) == a;
  r.definite = r.lower_definite && r.upper_definite;

  // Iterate the upper orbit until it repeats; monotone, so it stabilizes.
  Subset cur = a;
  std::size_t index = 0;
  const std::size_t cap = std::size_t(g.subset_count());
  bool stabilized = false;
  for (std::size_t step = 0; step <= cap; ++step) {
    Subset next = g.upper(cur);
    if (next == cur) {
      index = step;
      stabilized = true;
      break;
    }
    cur = next;
  }
  r.upper_pre_definite = stabilized;
  r.stabilization_index = index;
  r.pre_strongly_upper_definite = r.upper_definite && stabilized;
  r.strongly_upper_definite =
      a == g.upper(a) && g.upper(a) == g.upper(g.upper(a));
  return r;
}

namespace {

std::vector<RoughQuotient::Class> quotient_classes(const GranularOperatorSpace& g) {
  std::map<ApproximationPair, std::vector<Subset>> buckets;
  for (Subset a = 0; a < g.subset_count(); ++a)
    buckets[{g.lower(a), g.upper(a)}].push_back(a);
  std::vector<RoughQuotient::Class> classes;
  classes.reserve(buckets.size());
  for (auto& [pair, members] : buckets) classes.push_back({pair, std::move(members)});
  return classes;
}

}  // namespace

RoughQuotient rough_quotient(const GranularOperatorSpace& g) {
  auto classes = quotient_classes(g);
  const std::size_t m = classes.size();
  std::vector<std::string> labels(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.render_subset(classes[i].pair.lower) + "|" +
                g.render_subset(classes[i].pair.upper);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& a = classes[i].pair;
      const auto& b = classes[j].pair;
      leq[i][j] = (a.lower & b.lower) == a.lower && (a.upper & b.upper) == a.upper;
    }
  }
  RoughQuotient q{std::move(classes), FinitePoset::validate(std::move(labels), std::move(leq)),
                  0, 0};
  ApproximationPair bottom{0, 0};
  ApproximationPair top{g.lower(g.full()), g.upper(g.full())};
  for (std::size_t i = 0; i < m; ++i) {
    if (q.classes[i].pair == bottom) q.bottom_class = i;
    if (q.classes[i].pair == top) q.top_class = i;
  }
  return q;
}

std::vector<std::vector<Subset>> roughly_consistent_objects(const GranularOperatorSpace& g) {
  std::vector<std::vector<Subset>> out;
  for (auto& c : quotient_classes(g)) out.push_back(std::move(c.members));
  return out;
}

std::vector<std::vector<Subset>> rough_objects_maximal(const GranularOperatorSpace& g) {
  return roughly_consistent_objects(g);
}

std::vector<std::vector<Subset>> definite_rough_objects(const GranularOperatorSpace& g) {
  std::vector<std::vector<Subset>> out;
  for (auto& c : quotient_classes(g)) {
    bool all_ok = true;
    for (Subset a : c.members) {
      Subset lo = g.lower(a), up = g.upper(a);
      if (g.lower(lo) != lo || g.upper(up) != up) { all_ok = false; break; }
    }
    if (all_ok) out.push_back(std::move(c.members));
  }
  return out;
}

FrameworkInstance build_framework(const GranularOperatorSpace& g,
                                  RoughConvention convention,
                                  const std::map<Subset, ApproximationPair>* explicit_phi) {
  FrameworkInstance inst;
  for (Subset a = 0; a < g.subset_count(); ++a) {
    inst.all_objects.push_back(a);
    if (g.lower(a) == a && g.upper(a) == a)
      inst.crisp.push_back(a);
  }

  if (convention == RoughConvention::NonDefiniteSubsets) {
    for (Subset a = 0; a < g.subset_count(); ++a)
      if (!(g.lower(a) == a && g.upper(a) == a)) inst.rough.push_back(a);
  } else {
    // Maximal roughly consistent classes, represented by their least member,
    // restricted to classes of non-definite sets.
    for (const auto& members : rough_objects_maximal(g)) {
      Subset rep = members.front();
      if (!(g.lower(rep) == rep && g.upper(rep) == rep)) inst.rough.push_back(rep);
    }
  }

  inst.n = inst.all_objects.size();
  inst.k = inst.crisp.size();

  for (Subset x : inst.rough) {
    ApproximationPair pair{g.lower(x), g.upper(x)};
    if (explicit_phi) {
      auto it = explicit_phi->find(x);
      if (it == explicit_phi->end())
        throw GranularError(GranularError::Kind::ConventionMismatch,
                            "explicit phi missing rough object " + g.render_subset(x));
      pair = it->second;
    }
    // RC2: phi(x) = (a, b), a strictly below b, both crisp.
    if (pair.lower == pair.upper)
      throw GranularError(GranularError::Kind::ConventionMismatch,
                          "phi(" + g.render_subset(x) + ") hits the diagonal");
    if ((pair.lower & pair.upper) != pair.lower)
      throw GranularError(GranularError::Kind::ConventionMismatch,
                          "phi(" + g.render_subset(x) + ") not an increasing pair");
    auto crisp_has = [&](Subset c) {
      return std::binary_search(inst.crisp.begin(), inst.crisp.end(), c);
    };
    if (!crisp_has(pair.lower) || !crisp_has(pair.upper))
      throw GranularError(GranularError::Kind::ConventionMismatch,
                          "phi(" + g.render_subset(x) + ") leaves the crisp collection");
    inst.phi[x] = pair;
  }

  if (convention == RoughConvention::NonDefiniteSubsets &&
      inst.k + inst.rough.size() != inst.n)
    throw GranularError(GranularError::Kind::ConventionMismatch,
                        "crisp and rough counts do not partition the powerset");
  return inst;
}

std::vector<Subset> lower_definable_scope(Subset x, const std::vector<Subset>& crisp) {
  std::vector<Subset> below;
  for (Subset c : crisp)
    if ((c & x) == c) below.push_back(c);
  std::vector<Subset> maximal;
  for (Subset c : below) {
    bool is_max = true;
    for (Subset d : below)
      if (d != c && (c & d) == c) { is_max = false; break; }
    if (is_max) maximal.push_back(c);
  }
  if (maximal.empty())
    throw GranularError(GranularError::Kind::EmptyScope, "no crisp set below x");
  return maximal;
}

std::vector<Subset> upper_definable_scope(Subset x, const std::vector<Subset>& crisp) {
  std::vector<Subset> above;
  for (Subset c : crisp)
    if ((x & c) == x) above.push_back(c);
  std::vector<Subset> minimal;
  for (Subset c : above) {
    bool is_min = true;
    for (Subset d : above)
      if (d != c && (d & c) == d) { is_min = false; break; }
    if (is_min) minimal.push_back(c);
  }
  if (minimal.empty())
    throw GranularError(GranularError::Kind::EmptyScope, "no crisp set above x");
  return minimal;
}

std::size_t representation_count(Subset x, const std::vector<Subset>& crisp) {
  auto sl = lower_definable_scope(x, crisp);
  auto su = upper_definable_scope(x, crisp);
  std::size_t diagonal = 0;
  for (Subset a : sl)
    if (std::find(su.begin(), su.end(), a) != su.end()) ++diagonal;
  return sl.size() * su.size() - diagonal;
}

OracleClassification oracle_classify(const GranularOperatorSpace& g) {
  if (g.universe_size() > 12)
    throw GranularError(GranularError::Kind::UniverseTooLarge,
                        "oracle limited to universes of size 12");
  OracleClassification out;
  out.n = std::size_t(g.subset_count());
  for (Subset a = 0; a < g.subset_count(); ++a) {
    Subset lo = g.lower(a), up = g.upper(a);
    if (lo == a && up == a) {
      ++out.k;
    } else {
      ++out.rough;
      ++out.multiplicity[{lo, up}];
    }
  }
  return out;
}

}  // namespace roughdist
