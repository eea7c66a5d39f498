#pragma once

// Rank sequences, the G-invariant, catenary data, reduced cyclic chains and
// the related counting identities.
//
// Two independent routes to the G-invariant are provided:
//   * g_invariant_bruteforce sums the rank sequence of every permutation;
//   * g_from_catenary expands the flag-count vector against composition
//     weights (gamma_weights below).
// The weight of a rank sequence under a composition counts, for a fixed flag
// with that composition, the permutations that realize the flag with rank
// jumps at the given positions: a one at the i-th jump can be any of the a_i
// new elements, and a zero in plateau i must reuse one of the |X_i| elements
// of the current flat not placed yet.  The closure of each prefix is forced
// to equal X_i because nested flats of equal rank coincide, so this count
// depends only on the composition; the two routes are checked against each
// other wholesale in the tests.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcat/lattice.hpp"
#include "gcat/matroid.hpp"

namespace gcat {

using BigInt = boost::multiprecision::cpp_int;

// Rank sequence of a permutation, encoded with r_1 in the most significant
// of n bits so that integer order matches string order.
struct RankSequence {
  int n = 0;
  std::uint64_t bits = 0;

  int ones() const { return std::popcount(bits); }
  std::string to_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if ((bits >> (n - 1 - i)) & 1) s[i] = '1';
    return s;
  }
  friend bool operator==(RankSequence a, RankSequence b) = default;
};

struct GInvariant {
  int n = 0;
  int k = 0;
  std::map<std::uint64_t, BigInt> counts;  // encoded sequence -> multiplicity

  BigInt total() const {
    BigInt t = 0;
    for (auto& [seq, c] : counts) t += c;
    return t;
  }
  friend bool operator==(const GInvariant& a, const GInvariant& b) = default;
};

// (n,k)-composition (a_0, a_1, ..., a_k): a_0 >= 0, a_i > 0, sum = n.
using Composition = std::vector<int>;

struct CatenaryData {
  int n = 0;
  int k = 0;
  std::map<Composition, std::uint64_t> nu;  // flag counts per composition

  std::uint64_t flag_count() const {
    std::uint64_t t = 0;
    for (auto& [a, c] : nu) t += c;
    return t;
  }
  friend bool operator==(const CatenaryData& a, const CatenaryData& b) = default;
};

struct Flag {
  std::vector<ElemSet> flats;  // (X_0, ..., X_k), X_i a rank-i flat
};

// Chain in Z°(M), strictly increasing by inclusion; empty chain allowed.
using ZChain = std::vector<ElemSet>;

using CompositionMultiset = std::map<Composition, std::uint64_t>;

struct ChainReport {
  // Every chain of Z°(M) gets an entry (possibly with no flags), as does the
  // empty chain; the disjoint union of the multisets is the full composition
  // multiset of the catenary data.
  std::map<ZChain, CompositionMultiset> per_chain;
};

inline RankSequence rank_sequence(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.ground_size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("rank_sequence: not a permutation");
  ElemSet seen;
  RankSequence rs{n, 0};
  ElemSet prefix;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    int e = perm[i];
    if (e < 0 || e >= n || seen.contains(e))
      throw std::invalid_argument("rank_sequence: not a permutation");
    seen = seen.with(e);
    prefix = prefix.with(e);
    int cur = m.rank(prefix);
    if (cur == prev + 1) rs.bits |= 1ull << (n - 1 - i);
    prev = cur;
  }
  return rs;
}

// Exact G-invariant over all n! permutations.  Guarded: refuses large ground
// sets; use the catenary route there.
inline GInvariant g_invariant_bruteforce(const Matroid& m, int max_n = 10) {
  const int n = m.ground_size();
  if (n > max_n)
    throw std::invalid_argument(
        "g_invariant_bruteforce: ground set too large (use g_from_catenary)");
  GInvariant g{n, m.rank(), {}};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    g.counts[rank_sequence(m, perm).bits] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

namespace detail {

// Flat lattice levels with cover lists, the scaffolding for flag DFS.
struct FlatGraph {
  std::vector<std::vector<ElemSet>> levels;
  std::vector<std::vector<std::vector<int>>> covers;  // covers[i][j] -> indices in level i+1
};

inline FlatGraph flat_graph(const Matroid& m) {
  FlatGraph g;
  g.levels = m.flat_levels();
  g.covers.resize(g.levels.size() == 0 ? 0 : g.levels.size() - 1);
  for (std::size_t lv = 0; lv + 1 < g.levels.size(); ++lv) {
    std::map<ElemSet, int> index;
    for (int j = 0; j < static_cast<int>(g.levels[lv + 1].size()); ++j)
      index.emplace(g.levels[lv + 1][j], j);
    g.covers[lv].resize(g.levels[lv].size());
    for (int j = 0; j < static_cast<int>(g.levels[lv].size()); ++j) {
      ElemSet f = g.levels[lv][j];
      std::vector<int> ups;
      for (int e : m.ground() - f) ups.push_back(index.at(m.closure(f.with(e))));
      std::sort(ups.begin(), ups.end());
      ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
      g.covers[lv][j] = std::move(ups);
    }
  }
  return g;
}

// Runs fn(worker) on workers 0..threads-1 and merges results in worker order,
// so the outcome is independent of scheduling.
template <typename Result, typename Fn, typename Merge>
Result run_partitioned(int threads, Fn&& fn, Merge&& merge) {
  if (threads <= 1) return fn(0, 1);
  std::vector<Result> parts(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] { parts[w] = fn(w, threads); });
  for (auto& t : pool) t.join();
  Result out = std::move(parts[0]);
  for (int w = 1; w < threads; ++w) merge(out, parts[w]);
  return out;
}

// DFS over all flags.  The first-level branch (choice of rank-1 flat) is
// split across workers by index; visit(path, comp) sees every flag once.
template <typename Visit>
void visit_flags(const FlatGraph& g, int worker, int stride, Visit&& visit) {
  const int depth = static_cast<int>(g.levels.size());
  std::vector<int> path(depth, 0);
  Composition comp(depth);
  comp[0] = g.levels[0][0].size();
  if (depth == 1) {
    if (worker == 0) visit(path, comp);
    return;
  }
  auto descend = [&](auto&& self, int lv) -> void {
    if (lv == depth) {
      visit(path, comp);
      return;
    }
    const ElemSet below = g.levels[lv - 1][path[lv - 1]];
    for (int idx : g.covers[lv - 1][path[lv - 1]]) {
      if (lv == 1 && idx % stride != worker) continue;
      path[lv] = idx;
      comp[lv] = (g.levels[lv][idx] - below).size();
      self(self, lv + 1);
    }
  };
  descend(descend, 1);
}

}  // namespace detail

// Flag counts per composition, by DFS over the flat lattice.
inline CatenaryData catenary_data(const Matroid& m, int threads = 1) {
  detail::FlatGraph g = detail::flat_graph(m);
  auto worker = [&](int w, int stride) {
    CatenaryData cd{m.ground_size(), m.rank(), {}};
    detail::visit_flags(g, w, stride,
                        [&](const std::vector<int>&, const Composition& c) { cd.nu[c] += 1; });
    return cd;
  };
  return detail::run_partitioned<CatenaryData>(threads, worker, [](CatenaryData& a, const CatenaryData& b) {
    for (auto& [c, v] : b.nu) a.nu[c] += v;
  });
}

inline Composition flag_composition(const Flag& f) {
  Composition c;
  c.push_back(f.flats.empty() ? 0 : f.flats[0].size());
  for (std::size_t i = 1; i < f.flats.size(); ++i)
    c.push_back((f.flats[i] - f.flats[i - 1]).size());
  return c;
}

// Per-flat coloop removal, deduplication, and trimming of the empty set and
// E(M); the result is a chain in Z°(M).
inline ZChain reduced_cyclic_chain(const Matroid& m, const Flag& f) {
  if (m.has_loops() || m.has_coloops())
    throw std::invalid_argument("reduced_cyclic_chain: matroid must have no loops or coloops");
  if (static_cast<int>(f.flats.size()) != m.rank() + 1)
    throw std::invalid_argument("reduced_cyclic_chain: not a flag");
  for (int i = 0; i <= m.rank(); ++i) {
    if (m.rank(f.flats[i]) != i || m.closure(f.flats[i]) != f.flats[i])
      throw std::invalid_argument("reduced_cyclic_chain: entry is not a rank-" + std::to_string(i) + " flat");
    if (i > 0 && !f.flats[i - 1].subset_of(f.flats[i]))
      throw std::invalid_argument("reduced_cyclic_chain: flats not nested");
  }
  ZChain chain;
  for (int i = 1; i < m.rank(); ++i) {
    ElemSet core = m.cyclic_core(f.flats[i]);
    if (core.empty() || core == m.ground()) continue;
    if (chain.empty() || chain.back() != core) chain.push_back(core);
  }
  return chain;
}

// All nonempty chains of Z°(M), ascending by inclusion.
inline std::vector<ZChain> zfree_chains(const Matroid& m) {
  const auto& zf = m.cyclic_flats_stored();
  std::vector<ElemSet> open;
  for (const RankedFlat& z : zf)
    if (!z.set.empty() && z.set != m.ground()) open.push_back(z.set);
  std::sort(open.begin(), open.end());
  std::vector<ZChain> out;
  ZChain cur;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < open.size(); ++i) {
      if (!cur.empty() && !(cur.back().subset_of(open[i]) && cur.back() != open[i])) continue;
      cur.push_back(open[i]);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), [](const ZChain& a, const ZChain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Groups every flag's composition under its reduced cyclic chain.  Chains of
// Z°(M) without flags still get (empty) entries, as does the empty chain.
inline ChainReport chain_report(const Matroid& m, int threads = 1) {
  if (m.has_loops() || m.has_coloops())
    throw std::invalid_argument("chain_report: matroid must have no loops or coloops");
  detail::FlatGraph g = detail::flat_graph(m);
  // cyclic cores per flat, precomputed per level
  std::vector<std::vector<ElemSet>> cores(g.levels.size());
  for (std::size_t lv = 0; lv < g.levels.size(); ++lv)
    for (ElemSet f : g.levels[lv]) cores[lv].push_back(m.cyclic_core(f));

  auto worker = [&](int w, int stride) {
    ChainReport rep;
    detail::visit_flags(g, w, stride, [&](const std::vector<int>& path, const Composition& comp) {
      ZChain chain;
      for (int lv = 1; lv < static_cast<int>(path.size()) - 1; ++lv) {
        ElemSet core = cores[lv][path[lv]];
        if (core.empty() || core == m.ground()) continue;
        if (chain.empty() || chain.back() != core) chain.push_back(core);
      }
      rep.per_chain[chain][comp] += 1;
    });
    return rep;
  };
  ChainReport rep = detail::run_partitioned<ChainReport>(
      threads, worker, [](ChainReport& a, const ChainReport& b) {
        for (auto& [chain, ms] : b.per_chain)
          for (auto& [c, v] : ms) a.per_chain[chain][c] += v;
      });
  rep.per_chain[ZChain{}];  // ensure the empty chain is present
  for (const ZChain& c : zfree_chains(m)) rep.per_chain[c];
  return rep;
}

struct PartitionCheck {
  bool ok = true;
  std::string message;  // first mismatch when !ok
};

// Theorem-style partition verification: P and Q partition the chain sets of
// Z°(m1) and Z°(m2) (empty chain included), and matched blocks must
// contribute identical composition multisets.
inline PartitionCheck verify_chain_partition(const Matroid& m1, const Matroid& m2,
                                             const std::vector<std::vector<ZChain>>& p,
                                             const std::vector<std::vector<ZChain>>& q,
                                             int threads = 1) {
  auto is_partition = [](const std::vector<std::vector<ZChain>>& blocks,
                         const Matroid& m) -> bool {
    std::set<ZChain> seen;
    std::size_t count = 0;
    for (const auto& b : blocks)
      for (const ZChain& c : b) {
        if (!seen.insert(c).second) return false;
        ++count;
      }
    std::vector<ZChain> all = zfree_chains(m);
    if (count != all.size() + 1) return false;  // +1 for the empty chain
    if (!seen.count(ZChain{})) return false;
    for (const ZChain& c : all)
      if (!seen.count(c)) return false;
    return true;
  };
  if (p.size() != q.size()) throw std::invalid_argument("verify_chain_partition: block counts differ");
  if (!is_partition(p, m1) || !is_partition(q, m2))
    throw std::invalid_argument("verify_chain_partition: inputs are not partitions of the chain sets");

  ChainReport r1 = chain_report(m1, threads);
  ChainReport r2 = chain_report(m2, threads);
  auto block_multiset = [](const ChainReport& r, const std::vector<ZChain>& block) {
    CompositionMultiset ms;
    for (const ZChain& c : block) {
      auto it = r.per_chain.find(c);
      if (it == r.per_chain.end()) continue;
      for (auto& [comp, v] : it->second) ms[comp] += v;
    }
    return ms;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (block_multiset(r1, p[i]) != block_multiset(r2, q[i]))
      return {false, "block " + std::to_string(i) + " contributes different composition multisets"};
  }
  return {};
}

// g_M(F): the (r(M)-1)-subsets X of E with cl(X n F) = F, for F in Z°(M).
inline std::vector<ElemSet> g_sets(const Matroid& m, ElemSet f) {
  bool proper = false;
  for (const RankedFlat& z : m.cyclic_flats_stored())
    if (z.set == f) proper = !f.empty() && f != m.ground();
  if (!proper) throw std::invalid_argument("g_sets: F must be a nonempty proper cyclic flat");
  std::vector<ElemSet> out;
  for_each_subset_of_size(m.ground(), m.rank() - 1, [&](ElemSet x) {
    if (m.closure(x & f) == f) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct InclusionExclusionCheck {
  bool three_way_equal = false;   // |union| = subset sum = chain sum
  bool iota_consistent = false;   // C(n,r-1) - |union| equals the direct count
  bool containment_holds = false; // g(F1) n g(F2) is within g(F1 v F2)
  std::uint64_t union_size = 0;
  long long subset_signed_sum = 0;
  long long chain_signed_sum = 0;
  int iota_via_g = 0;
  int iota_direct = 0;

  bool ok() const { return three_way_equal && iota_consistent && containment_holds; }
};

// Checks the union/inclusion-exclusion/chain-sum equality for g_M, the
// containment property behind it, and the independent-hyperplane count
// derived from the union complement.
inline InclusionExclusionCheck inclusion_exclusion_check(const Matroid& m) {
  if (m.has_loops() || m.has_coloops())
    throw std::invalid_argument("inclusion_exclusion_check: matroid must have no loops or coloops");
  std::vector<ElemSet> open;
  for (const RankedFlat& z : m.cyclic_flats_stored())
    if (!z.set.empty() && z.set != m.ground()) open.push_back(z.set);
  std::sort(open.begin(), open.end());

  std::vector<std::vector<std::uint64_t>> gs;  // sorted mask lists
  for (ElemSet f : open) {
    std::vector<std::uint64_t> masks;
    for (ElemSet x : g_sets(m, f)) masks.push_back(x.bits());
    std::sort(masks.begin(), masks.end());
    gs.push_back(std::move(masks));
  }

  InclusionExclusionCheck out;
  std::set<std::uint64_t> uni;
  for (auto& v : gs) uni.insert(v.begin(), v.end());
  out.union_size = uni.size();

  auto intersect = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
  };

  // signed sum over all nonempty subsets, sharing intersection prefixes
  long long subset_sum = 0;
  auto dfs = [&](auto&& self, std::size_t i, const std::vector<std::uint64_t>& cur,
                 int picked) -> void {
    if (i == gs.size()) {
      if (picked > 0) subset_sum += (picked % 2 == 1 ? 1ll : -1ll) * static_cast<long long>(cur.size());
      return;
    }
    self(self, i + 1, cur, picked);
    if (picked == 0) {
      self(self, i + 1, gs[i], 1);
    } else {
      std::vector<std::uint64_t> next = intersect(cur, gs[i]);
      self(self, i + 1, next, picked + 1);
    }
  };
  dfs(dfs, 0, {}, 0);
  out.subset_signed_sum = subset_sum;

  // signed sum over nonempty chains only
  long long chain_sum = 0;
  for (const ZChain& chain : zfree_chains(m)) {
    std::vector<std::uint64_t> cur;
    bool first = true;
    for (ElemSet f : chain) {
      std::size_t idx = std::lower_bound(open.begin(), open.end(), f) - open.begin();
      cur = first ? gs[idx] : intersect(cur, gs[idx]);
      first = false;
    }
    chain_sum += (chain.size() % 2 == 1 ? 1ll : -1ll) * static_cast<long long>(cur.size());
  }
  out.chain_signed_sum = chain_sum;
  out.three_way_equal = (static_cast<long long>(out.union_size) == subset_sum) &&
                        (subset_sum == chain_sum);

  out.iota_via_g =
      static_cast<int>(binomial(m.ground_size(), m.rank() - 1) - out.union_size);
  out.iota_direct = m.independent_hyperplane_count();
  out.iota_consistent = out.iota_via_g == out.iota_direct;

  // containment: nonempty g(F1) n g(F2) lies inside g(F1 v F2), join taken
  // in Z(M)
  out.containment_holds = true;
  std::vector<RankedFlat> zf = m.cyclic_flats_stored();
  for (std::size_t i = 0; i < open.size() && out.containment_holds; ++i)
    for (std::size_t j = i + 1; j < open.size() && out.containment_holds; ++j) {
      std::vector<std::uint64_t> inter = intersect(gs[i], gs[j]);
      if (inter.empty()) continue;
      ElemSet join = m.closure(open[i] | open[j]);  // join in Z(M)
      if (join == m.ground()) {
        out.containment_holds = false;
        break;
      }
      std::size_t idx = std::lower_bound(open.begin(), open.end(), join) - open.begin();
      if (idx >= open.size() || open[idx] != join) {
        out.containment_holds = false;
        break;
      }
      for (std::uint64_t x : inter)
        if (!std::binary_search(gs[idx].begin(), gs[idx].end(), x)) {
          out.containment_holds = false;
          break;
        }
    }
  return out;
}

// |intersection of g(F) over F in C| by the choice procedure: split r(M)-1
// picks into spanning sets of the interval minors plus a free remainder
// outside the last flat.
inline std::uint64_t chain_intersection_via_spanning_sets(const Matroid& m, const ZChain& chain) {
  if (chain.empty()) throw std::invalid_argument("chain must be nonempty");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    bool stored = false;
    for (const RankedFlat& z : m.cyclic_flats_stored()) stored |= z.set == chain[i];
    if (!stored || chain[i].empty() || chain[i] == m.ground() ||
        (i > 0 && !(chain[i - 1].subset_of(chain[i]) && chain[i - 1] != chain[i])))
      throw std::invalid_argument("chain_intersection_via_spanning_sets: not a chain in Z°(M)");
  }
  const int t = static_cast<int>(chain.size());
  const int r = m.rank();

  // spanning-set counts per part, by size
  auto spanning_counts = [&](ElemSet upper, ElemSet lower) {
    std::vector<std::uint64_t> by_size(m.ground_size() + 1, 0);
    int goal = m.rank(upper) - m.rank(lower);
    for_each_subset(upper - lower, [&](ElemSet w) {
      if (m.rank(w | lower) - m.rank(lower) == goal) ++by_size[w.size()];
    });
    return by_size;
  };
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<int> min_size;
  for (int i = 0; i < t; ++i) {
    ElemSet lower = i == 0 ? ElemSet() : chain[i - 1];
    counts.push_back(spanning_counts(chain[i], lower));
    min_size.push_back(m.rank(chain[i]) - m.rank(lower));
  }
  const int outside = (m.ground() - chain.back()).size();

  std::uint64_t total = 0;
  auto choose = [&](auto&& self, int i, int used, std::uint64_t prod) -> void {
    if (prod == 0) return;
    if (i == t) {
      int rest = r - 1 - used;
      if (rest >= 0) total += prod * binomial(outside, rest);
      return;
    }
    int cap = (chain[i] - (i == 0 ? ElemSet() : chain[i - 1])).size();
    for (int a = min_size[i]; a <= cap && used + a <= r - 1; ++a)
      self(self, i + 1, used + a, prod * counts[i][a]);
  };
  choose(choose, 0, 0, 1);
  return total;
}

// Composition weights: weight[a][sequence] is the number of permutations
// realizing any fixed flag of composition a with rank jumps at the sequence's
// one positions.
inline std::map<Composition, std::map<std::uint64_t, BigInt>> gamma_weights(
    int n, int k, const std::set<Composition>& support) {
  std::map<Composition, std::map<std::uint64_t, BigInt>> out;
  for (const Composition& a : support) {
    if (static_cast<int>(a.size()) != k + 1)
      throw std::invalid_argument("gamma_weights: composition length mismatch");
    std::vector<int> cum(k + 1);  // |X_i| = a_0 + ... + a_i
    cum[0] = a[0];
    for (int i = 1; i <= k; ++i) cum[i] = cum[i - 1] + a[i];
    if (cum[k] != n) throw std::invalid_argument("gamma_weights: composition does not sum to n");

    auto& weights = out[a];
    std::vector<int> ones(k);
    for (int i = 0; i < k; ++i) ones[i] = i;
    // iterate all placements of k ones among n positions
    while (true) {
      BigInt w = 1;
      int plateau = 0, next_one = 0;
      for (int j = 0; j < n && w != 0; ++j) {
        if (next_one < k && ones[next_one] == j) {
          w *= a[plateau + 1];
          ++plateau;
          ++next_one;
        } else {
          w *= cum[plateau] - j;  // j elements already placed
        }
      }
      if (w != 0) {
        std::uint64_t bits = 0;
        for (int i = 0; i < k; ++i) bits |= 1ull << (n - 1 - ones[i]);
        weights[bits] += w;
      }
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && ones[i] == n - k + i) --i;
      if (i < 0) break;
      ++ones[i];
      for (int j = i + 1; j < k; ++j) ones[j] = ones[j - 1] + 1;
    }
  }
  return out;
}

// G(M) = sum over compositions of nu(M;a) * gamma(a).
inline GInvariant g_from_catenary(const CatenaryData& cd) {
  std::set<Composition> support;
  for (auto& [a, c] : cd.nu) support.insert(a);
  auto gamma = gamma_weights(cd.n, cd.k, support);
  GInvariant g{cd.n, cd.k, {}};
  for (auto& [a, c] : cd.nu)
    for (auto& [seq, w] : gamma[a]) g.counts[seq] += BigInt(c) * w;
  return g;
}

// Duality rule on the G-invariant: reverse each rank sequence, then switch
// zeros and ones.
inline GInvariant dual_transform(const GInvariant& g) {
  GInvariant d{g.n, g.n - g.k, {}};
  for (auto& [seq, c] : g.counts) {
    std::uint64_t rev = 0;
    for (int i = 0; i < g.n; ++i)
      if ((seq >> i) & 1) rev |= 1ull << (g.n - 1 - i);
    std::uint64_t flipped = ~rev & ((g.n == 64 ? ~0ull : (1ull << g.n) - 1));
    d.counts[flipped] += c;
  }
  return d;
}

// Route selection used by the CLI: exact brute force when small, catenary
// expansion otherwise.
inline GInvariant g_invariant_auto(const Matroid& m, int threads = 1, int bruteforce_limit = 10) {
  if (m.ground_size() <= bruteforce_limit) return g_invariant_bruteforce(m, bruteforce_limit);
  return g_from_catenary(catenary_data(m, threads));
}

}  // namespace gcat
