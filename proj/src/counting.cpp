#include "roughdist/counting.hpp"

#include <algorithm>

namespace roughdist {

namespace {

void compositions_rec(const PartitionConstraint& c, std::size_t pos, Integer remaining,
                      std::vector<Integer>& parts,
                      const std::function<bool(const std::vector<Integer>&)>& emit,
                      bool& keep_going) {
  if (!keep_going) return;
  if (pos == c.g) {
    if (remaining == 0) keep_going = emit(parts);
    return;
  }
  const Integer slots_left(std::int64_t(c.g - pos - 1));
  for (Integer v = c.a; v <= c.b; ++v) {
    Integer rest = remaining - v;
    if (rest < slots_left * c.a || rest > slots_left * c.b) continue;
    parts[pos] = v;
    compositions_rec(c, pos + 1, rest, parts, emit, keep_going);
    if (!keep_going) return;
  }
}

void check_constraint(const PartitionConstraint& c) {
  if (c.a < 0 || c.b < c.a || c.r < 0)
    throw CountingError(CountingError::Kind::InvalidConstraint,
                        "need 0 <= a <= b and r >= 0");
}

Integer pow_int(const Integer& base, std::size_t exp) {
  Integer out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

void bounded_compositions(const PartitionConstraint& c,
                          const std::function<bool(const std::vector<Integer>&)>& emit) {
  check_constraint(c);
  std::vector<Integer> parts(c.g);
  bool keep_going = true;
  compositions_rec(c, 0, c.r, parts, emit, keep_going);
}

Integer bounded_composition_count(const PartitionConstraint& c) {
  check_constraint(c);
  if (c.g == 0) return c.r == 0 ? 1 : 0;  // the empty composition
  // Shift parts to [0, b-a]; count length-g sums of r' with cap m = b-a.
  const Integer g(std::int64_t(c.g));
  Integer rp = c.r - g * c.a;
  if (rp < 0) return 0;
  const Integer m = c.b - c.a;
  Integer total = 0;
  for (Integer j = 0; j <= g; ++j) {
    Integer shifted = rp - j * (m + 1);
    if (shifted < 0) break;
    Integer term = binomial(g, j) * binomial(shifted + g - 1, g - 1);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

CountReport bounded_model_count(const PartitionConstraint& c) {
  check_constraint(c);
  CountReport report;
  report.zero_parts_permitted = (c.a == 0);

  // Convolution over slots: count[s] compositions reaching sum s, weight[s]
  // the corresponding sum of part-products.
  const std::size_t r = c.r.convert_to<std::size_t>();
  std::vector<Integer> count(r + 1, 0), weight(r + 1, 0);
  count[0] = 1;
  weight[0] = 1;  // empty product
  const std::size_t lo = c.a.convert_to<std::size_t>();
  const std::size_t hi = std::min<std::size_t>(r, c.b.convert_to<std::size_t>());
  for (std::size_t slot = 0; slot < c.g; ++slot) {
    std::vector<Integer> ncount(r + 1, 0), nweight(r + 1, 0);
    for (std::size_t s = 0; s <= r; ++s) {
      if (count[s] == 0 && weight[s] == 0) continue;
      for (std::size_t v = lo; v <= hi && s + v <= r; ++v) {
        ncount[s + v] += count[s];
        nweight[s + v] += weight[s] * Integer(std::uint64_t(v));
      }
    }
    count.swap(ncount);
    weight.swap(nweight);
  }
  report.n_o = count[r];
  report.B = weight[r];
  report.lower = report.n_o * pow_int(c.a, c.g);
  report.upper = report.n_o * pow_int(c.b, c.g);
  return report;
}

Integer chain_distribution_count(const Integer& pi_count, const Integer& alpha_len) {
  if (alpha_len < 1) throw CountingError(CountingError::Kind::InvalidConstraint,
                                         "chain length must be positive");
  Integer s = alpha_len * alpha_len - alpha_len;
  if (s == 0) return pi_count == 0 ? 1 : 0;
  return binomial(pi_count + s - 1, pi_count);
}

Integer branched_chain_count(const Integer& pi_count, const Integer& alpha_len,
                             const Integer& alpha_o_len) {
  if (alpha_o_len < 1 || alpha_o_len > alpha_len)
    throw CountingError(CountingError::Kind::InvalidSegment,
                        "branch segment must satisfy 1 <= alpha_o <= alpha");
  return chain_distribution_count(pi_count, alpha_len) -
         chain_distribution_count(pi_count, alpha_o_len);
}

std::size_t comparable_pair_count(const FinitePoset& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.comparable(i, j)) ++n;
  return n;
}

CountReport chain_cover_model_count(const FinitePoset& c_star, const Integer& r,
                                    std::optional<std::pair<Integer, Integer>> bounds) {
  auto bottom = c_star.bottom();
  auto top = c_star.top();
  if (!bottom || !top)
    throw CountingError(CountingError::Kind::NoBounds, "poset lacks a bottom or top");
  if (r < 0)
    throw CountingError(CountingError::Kind::InvalidConstraint, "negative object count");

  ChainCover cover = disjoint_chain_cover(c_star);
  const std::size_t w = cover.chains.size();

  // Put the chain holding the bottom first; it owns the shared (0,1) slots.
  std::stable_sort(cover.chains.begin(), cover.chains.end(),
                   [&](const Chain& a, const Chain& b) {
                     auto holds0 = [&](const Chain& ch) {
                       return std::find(ch.members.begin(), ch.members.end(), *bottom) !=
                              ch.members.end();
                     };
                     return holds0(a) > holds0(b);
                   });

  std::vector<std::size_t> chain_of(c_star.size(), 0);
  for (std::size_t i = 0; i < w; ++i)
    for (auto x : cover.chains[i].members) chain_of[x] = i;

  // Per-chain exclusive slot counts on the extended chains C_i u {0, 1}.
  std::vector<std::size_t> slots(w, 0);
  for (std::size_t i = 0; i < w; ++i) {
    std::size_t len = cover.chains[i].members.size();
    bool has0 = chain_of[*bottom] == i;
    bool has1 = (*top == *bottom) ? has0 : chain_of[*top] == i;
    std::size_t ext = len + (has0 ? 0 : 1) + ((*top != *bottom && !has1) ? 1 : 0);
    slots[i] = ext * ext - ext;
    if (i > 0 && *top != *bottom) slots[i] -= 2;  // (0,1) pairs owned by chain 0
  }
  // Comparable pairs spanning two side chains, away from the bounds, are not
  // inside any extended chain; credit them to the first chain.
  std::size_t cross = 0;
  for (std::size_t x = 0; x < c_star.size(); ++x)
    for (std::size_t y = 0; y < c_star.size(); ++y) {
      if (x == y || !c_star.comparable(x, y)) continue;
      if (x == *bottom || x == *top || y == *bottom || y == *top) continue;
      if (chain_of[x] != chain_of[y]) ++cross;
    }
  slots[0] += cross;

  if (bounds) {
    // Loads bounded per slot: the composition model over all slots at once.
    PartitionConstraint pc{r, std::size_t(0), bounds->first, bounds->second};
    for (auto s : slots) pc.g += s;
    return bounded_model_count(pc);
  }

  // Split r into at most w ordered parts; per chain, multiset placements
  // into its exclusive slots; convolve.
  const std::size_t rr = r.convert_to<std::size_t>();
  std::vector<Integer> total(rr + 1, 0), splits(rr + 1, 0);
  total[0] = 1;
  splits[0] = 1;
  for (std::size_t i = 0; i < w; ++i) {
    std::vector<Integer> ntotal(rr + 1, 0), nsplits(rr + 1, 0);
    const Integer s(std::uint64_t(slots[i]));
    for (std::size_t have = 0; have <= rr; ++have) {
      if (total[have] == 0 && splits[have] == 0) continue;
      for (std::size_t take = 0; take + have <= rr; ++take) {
        Integer ways = (s == 0) ? Integer(take == 0 ? 1 : 0)
                                : binomial(Integer(std::uint64_t(take)) + s - 1,
                                           Integer(std::uint64_t(take)));
        if (ways == 0) continue;
        ntotal[have + take] += total[have] * ways;
        nsplits[have + take] += splits[have];
      }
    }
    total.swap(ntotal);
    splits.swap(nsplits);
  }
  CountReport report;
  report.B = total[rr];
  report.n_o = splits[rr];
  report.lower = 0;
  report.upper = report.B;
  return report;
}

Integer placement_oracle_count(const FinitePoset& c_star, std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < c_star.size(); ++i)
    for (std::size_t j = 0; j < c_star.size(); ++j)
      if (i != j && c_star.comparable(i, j)) pairs.emplace_back(i, j);
  // Count multisets of size r over the pair list by direct recursion.
  std::function<Integer(std::size_t, std::size_t)> rec =
      [&](std::size_t from, std::size_t left) -> Integer {
    if (left == 0) return 1;
    Integer total = 0;
    for (std::size_t p = from; p < pairs.size(); ++p) total += rec(p, left - 1);
    return total;
  };
  return rec(0, r);
}

}  // namespace roughdist
