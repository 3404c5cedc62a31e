#include "roughdist/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace roughdist {

namespace {

std::string name_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

}  // namespace

FinitePoset FinitePoset::validate(std::vector<std::string> labels,
                                  std::vector<std::vector<bool>> leq) {
  const std::size_t m = labels.size();
  if (leq.size() != m)
    throw PosetError(PosetError::Kind::NotSquare, "relation table is not square");
  for (const auto& row : leq)
    if (row.size() != m)
      throw PosetError(PosetError::Kind::NotSquare, "relation table is not square");

  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < m; ++i)
      if (!seen.insert(labels[i]).second)
        throw PosetError(PosetError::Kind::DuplicateElement,
                         "duplicate element '" + labels[i] + "'", {i});
  }

  for (std::size_t i = 0; i < m; ++i)
    if (!leq[i][i])
      throw PosetError(PosetError::Kind::NotReflexive,
                       "not reflexive at " + name_of(labels, i), {i});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (leq[i][j] && leq[j][i])
        throw PosetError(PosetError::Kind::NotAntisymmetric,
                         "antisymmetry fails on (" + name_of(labels, i) + ", " +
                             name_of(labels, j) + ")",
                         {i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (leq[j][k] && !leq[i][k])
          throw PosetError(PosetError::Kind::NotTransitive,
                           "transitivity fails on (" + name_of(labels, i) + ", " +
                               name_of(labels, j) + ", " + name_of(labels, k) + ")",
                           {i, j, k});
    }

  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t m = labels.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) leq[i][i] = true;
  for (auto [a, b] : pairs) leq[a][b] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return validate(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::chain(std::size_t m) {
  std::vector<std::string> labels(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = "c" + std::to_string(i);
    for (std::size_t j = i; j < m; ++j) leq[i][j] = true;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::antichain(std::size_t m) {
  std::vector<std::string> labels(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = "a" + std::to_string(i);
    leq[i][i] = true;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::boolean_lattice(std::size_t atoms) {
  const std::size_t m = std::size_t(1) << atoms;
  std::vector<std::string> labels(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t b = 0; b < atoms; ++b)
      if (i & (std::size_t(1) << b)) {
        if (!first) s += ",";
        s += std::to_string(b + 1);
        first = false;
      }
    s += "}";
    labels[i] = s;
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = (i & j) == i;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

bool FinitePoset::covers(std::size_t i, std::size_t j) const {
  if (!less(i, j)) return false;
  for (std::size_t z = 0; z < size(); ++z)
    if (less(i, z) && less(z, j)) return false;
  return true;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (less(j, i)) { minimal = false; break; }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) { maximal = false; break; }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (!leq(i, j)) { below_all = false; break; }
    if (below_all) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool above_all = true;
    for (std::size_t j = 0; j < size(); ++j)
      if (!leq(j, i)) { above_all = false; break; }
    if (above_all) return i;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (auto i : subset) labels.push_back(labels_[i]);
  std::vector<std::vector<bool>> leq(subset.size(), std::vector<bool>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      leq[a][b] = leq_[subset[a]][subset[b]];
  return FinitePoset(std::move(labels), std::move(leq));
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.covers(i, j)) out.emplace_back(i, j);
  return out;
}

Rational hasse_index(const FinitePoset& p) {
  if (p.empty()) throw PosetError(PosetError::Kind::EmptyPoset, "hasse_index of empty poset");
  return Rational(Integer(covering_pairs(p).size()), Integer(p.size()));
}

bool is_saturated_chain(const FinitePoset& p, const Chain& c) {
  for (auto i : c.members)
    if (i >= p.size())
      throw PosetError(PosetError::Kind::NotAChain, "chain member outside poset", {i});
  for (std::size_t t = 0; t + 1 < c.members.size(); ++t)
    if (!p.less(c.members[t], c.members[t + 1]))
      throw PosetError(PosetError::Kind::NotAChain, "members not strictly increasing",
                       {c.members[t], c.members[t + 1]});
  for (std::size_t t = 0; t + 1 < c.members.size(); ++t)
    if (!p.covers(c.members[t], c.members[t + 1])) return false;
  return true;
}

namespace {

// Kuhn augmenting-path matching on the strict-order bipartite graph
// (left copy i -- right copy j whenever i < j). Deterministic by index order.
struct OrderMatching {
  std::vector<int> match_right;  // right j -> left i or -1
  std::vector<int> match_left;   // left i -> right j or -1
  std::size_t size = 0;
};

bool try_augment(const FinitePoset& p, std::size_t i, std::vector<bool>& visited,
                 std::vector<int>& match_right) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!p.less(i, j) || visited[j]) continue;
    visited[j] = true;
    if (match_right[j] < 0 ||
        try_augment(p, std::size_t(match_right[j]), visited, match_right)) {
      match_right[j] = int(i);
      return true;
    }
  }
  return false;
}

OrderMatching maximum_order_matching(const FinitePoset& p) {
  OrderMatching m;
  m.match_right.assign(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<bool> visited(p.size(), false);
    if (try_augment(p, i, visited, m.match_right)) ++m.size;
  }
  m.match_left.assign(p.size(), -1);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (m.match_right[j] >= 0) m.match_left[m.match_right[j]] = int(j);
  return m;
}

std::size_t dilworth_width(const FinitePoset& p) {
  return p.size() - maximum_order_matching(p).size;
}

}  // namespace

std::size_t max_antichain_bruteforce(const FinitePoset& p) {
  const std::size_t m = p.size();
  if (m > 20) throw std::length_error("max_antichain_bruteforce: poset too large");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < m && antichain; ++i)
      if (mask & (1u << i))
        for (std::size_t j = i + 1; j < m; ++j)
          if ((mask & (1u << j)) && p.comparable(i, j)) { antichain = false; break; }
    if (antichain) best = std::max<std::size_t>(best, std::size_t(__builtin_popcount(mask)));
  }
  return best;
}

WidthResult width(const FinitePoset& p) {
  if (p.empty()) throw PosetError(PosetError::Kind::EmptyPoset, "width of empty poset");
  WidthResult result;
  result.width = dilworth_width(p);

  // Lexicographically first maximum antichain: greedily keep the smallest
  // index whose inclusion still admits a completion among later elements.
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < p.size() && chosen.size() < result.width; ++i) {
    bool compatible = true;
    for (auto c : chosen)
      if (p.comparable(c, i)) { compatible = false; break; }
    if (!compatible) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool ok = !p.comparable(i, j);
      for (auto c : chosen)
        if (p.comparable(c, j)) { ok = false; break; }
      if (ok) rest.push_back(j);
    }
    std::size_t tail = rest.empty() ? 0 : dilworth_width(p.induced(rest));
    if (chosen.size() + 1 + tail >= result.width) chosen.push_back(i);
  }
  result.antichain = std::move(chosen);
  return result;
}

ChainCover disjoint_chain_cover(const FinitePoset& p) {
  if (p.empty()) throw PosetError(PosetError::Kind::EmptyPoset, "chain cover of empty poset");
  OrderMatching m = maximum_order_matching(p);
  // Matched edges i -> j stitch elements into chains.
  std::vector<bool> has_pred(p.size(), false);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (m.match_right[j] >= 0) has_pred[j] = true;
  ChainCover cover;
  cover.disjoint = true;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (has_pred[start]) continue;
    Chain chain;
    int cur = int(start);
    while (cur >= 0) {
      chain.members.push_back(std::size_t(cur));
      cur = m.match_left[cur];
    }
    cover.chains.push_back(std::move(chain));
  }
  std::sort(cover.chains.begin(), cover.chains.end(),
            [](const Chain& a, const Chain& b) { return a.members[0] < b.members[0]; });
  return cover;
}

GradingResult grading(const FinitePoset& p) {
  GradingResult result;
  const std::size_t m = p.size();
  std::vector<long> rank(m, -1);
  for (auto i : p.minimal_elements()) rank[i] = 0;
  auto covers = covering_pairs(p);
  // Propagate rank(y) = rank(x) + 1 along covering pairs to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [x, y] : covers) {
      if (rank[x] < 0) continue;
      if (rank[y] < 0) {
        rank[y] = rank[x] + 1;
        changed = true;
      } else if (rank[y] != rank[x] + 1) {
        result.witness = std::make_pair(x, y);
        return result;
      }
    }
  }
  Grading g;
  g.rank.resize(m);
  long top_rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    g.rank[i] = std::size_t(rank[i]);
    top_rank = std::max(top_rank, rank[i]);
  }
  g.levels.assign(std::size_t(top_rank) + 1, {});
  for (std::size_t i = 0; i < m; ++i) g.levels[g.rank[i]].push_back(i);
  if (m == 0) g.levels.clear();
  result.grading = std::move(g);
  return result;
}

namespace {

// All saturated chains through `e` whose members are currently free, with
// rank span exactly [j, r-j]. Chains are emitted as sorted member lists.
void extend_down(const FinitePoset& p, const std::vector<bool>& used,
                 std::vector<std::size_t>& below, std::size_t cur,
                 std::vector<std::vector<std::size_t>>& out) {
  out.push_back(below);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (used[x] || !p.covers(x, cur)) continue;
    below.push_back(x);
    extend_down(p, used, below, x, out);
    below.pop_back();
  }
}

void extend_up(const FinitePoset& p, const std::vector<bool>& used,
               std::vector<std::size_t>& above, std::size_t cur,
               std::vector<std::vector<std::size_t>>& out) {
  out.push_back(above);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (used[x] || !p.covers(cur, x)) continue;
    above.push_back(x);
    extend_up(p, used, above, x, out);
    above.pop_back();
  }
}

bool scd_search(const FinitePoset& p, const Grading& g, std::size_t top_rank,
                std::vector<bool>& used, std::vector<Chain>& acc) {
  std::size_t e = p.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!used[i]) { e = i; break; }
  if (e == p.size()) return true;

  used[e] = true;
  std::vector<std::vector<std::size_t>> downs, ups;
  {
    std::vector<std::size_t> scratch;
    extend_down(p, used, scratch, e, downs);
    extend_up(p, used, scratch, e, ups);
  }
  for (const auto& down : downs) {
    std::size_t lo_rank = down.empty() ? g.rank[e] : g.rank[down.back()];
    for (const auto& up : ups) {
      std::size_t hi_rank = up.empty() ? g.rank[e] : g.rank[up.back()];
      if (lo_rank + hi_rank != top_rank) continue;  // symmetric span j..r-j
      Chain chain;
      chain.members.assign(down.rbegin(), down.rend());
      chain.members.push_back(e);
      chain.members.insert(chain.members.end(), up.begin(), up.end());
      for (auto x : chain.members) used[x] = true;
      used[e] = true;
      acc.push_back(chain);
      if (scd_search(p, g, top_rank, used, acc)) return true;
      acc.pop_back();
      for (auto x : chain.members) used[x] = false;
      used[e] = true;
    }
  }
  used[e] = false;
  return false;
}

}  // namespace

std::optional<std::vector<Chain>> symmetric_chain_decomposition(const FinitePoset& p) {
  if (p.empty()) return std::vector<Chain>{};
  auto gr = grading(p);
  if (!gr.grading) return std::nullopt;
  std::size_t top_rank = gr.grading->levels.size() - 1;
  std::vector<bool> used(p.size(), false);
  std::vector<Chain> acc;
  if (scd_search(p, *gr.grading, top_rank, used, acc)) return acc;
  return std::nullopt;
}

bool sdr_exists_hall(const SetFamily& f) {
  const std::size_t r = f.members.size();
  if (r > 24) throw std::length_error("sdr_exists_hall: family too large");
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
    std::set<std::size_t> uni;
    std::size_t count = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        ++count;
        uni.insert(f.members[i].begin(), f.members[i].end());
      }
    if (uni.size() < count) return false;
  }
  return true;
}

namespace {

bool sdr_augment(const SetFamily& f, std::size_t i, std::vector<bool>& visited,
                 std::vector<int>& owner) {
  for (auto x : f.members[i]) {
    if (visited[x]) continue;
    visited[x] = true;
    if (owner[x] < 0 || sdr_augment(f, std::size_t(owner[x]), visited, owner)) {
      owner[x] = int(i);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_sdr(const SetFamily& f) {
  std::vector<int> owner(f.ground_size, -1);
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    std::vector<bool> visited(f.ground_size, false);
    if (!sdr_augment(f, i, visited, owner)) return std::nullopt;
  }
  std::vector<std::size_t> rep(f.members.size());
  for (std::size_t x = 0; x < f.ground_size; ++x)
    if (owner[x] >= 0) rep[owner[x]] = x;
  return rep;
}

bool sdr_exists(const SetFamily& f) { return find_sdr(f).has_value(); }

}  // namespace roughdist
