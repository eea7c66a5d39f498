#pragma once

// Independent oracles used by the tests: brute-force axiom checks, a
// deletion-contraction Tutte computation, chain counting by a direct
// recursion, and the ordering count behind the flag-list bijection.  These
// deliberately avoid the library's primary code paths so that agreement is
// meaningful.

#include <functional>
#include <map>
#include <vector>

#include "gcat/ginvariant.hpp"
#include "gcat/matroid.hpp"
#include "gcat/tutte.hpp"

namespace oracles {

using gcat::ElemSet;
using gcat::Matroid;

// Exhaustive matroid rank axioms over every subset pair; n <= 12 keeps this
// around 16M pairs.
inline bool rank_axioms_hold(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 12) throw std::invalid_argument("rank_axioms_hold: too large");
  const std::uint64_t full = ElemSet::full(n).bits();
  std::vector<int> rank(1ull << n);
  for (std::uint64_t a = 0; a <= full; ++a) {
    rank[a] = m.rank(ElemSet(a));
    if (rank[a] < 0 || rank[a] > std::popcount(a)) return false;
  }
  for (std::uint64_t a = 0; a <= full; ++a) {
    for (std::uint64_t b = a;;) {  // b runs over supersets of a
      if (rank[a] > rank[b]) return false;
      if (b == full) break;
      b = (b + 1) | a;
    }
  }
  for (std::uint64_t a = 0; a <= full; ++a)
    for (std::uint64_t b = 0; b <= a; ++b)
      if (rank[a | b] + rank[a & b] > rank[a] + rank[b]) return false;
  return true;
}

// Cyclic flats found by scanning every subset, no flat-lattice climbing.
inline std::vector<gcat::RankedFlat> cyclic_flats_subset_scan(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 16) throw std::invalid_argument("cyclic_flats_subset_scan: too large");
  std::vector<gcat::RankedFlat> out;
  const std::uint64_t full = ElemSet::full(n).bits();
  for (std::uint64_t a = 0; a <= full; ++a) {
    ElemSet s(a);
    int r = m.rank(s);
    bool flat = true;
    for (int e : m.ground() - s)
      if (m.rank(s.with(e)) == r) flat = false;
    if (!flat) continue;
    bool cyclic = true;
    for (int e : s)
      if (m.rank(s.without(e)) == r - 1) cyclic = false;
    if (cyclic) out.push_back({s, r});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Deletion-contraction Tutte on a plain rank function.
struct RankFn {
  int n = 0;
  std::function<int(ElemSet)> rank;
};

inline gcat::TuttePolynomial tutte_dc(const RankFn& m) {
  using Poly = gcat::TuttePolynomial;
  auto shift = [](const Poly& p, int dx, int dy) {
    Poly out;
    for (auto& [deg, c] : p.coeff) out.coeff[{deg.first + dx, deg.second + dy}] = c;
    return out;
  };
  auto add = [](Poly a, const Poly& b) {
    for (auto& [deg, c] : b.coeff) a.coeff[deg] += c;
    return a;
  };
  std::function<Poly(const RankFn&)> rec = [&](const RankFn& cur) -> Poly {
    if (cur.n == 0) {
      Poly one;
      one.coeff[{0, 0}] = 1;
      return one;
    }
    const int e = cur.n - 1;
    auto without_last = [cur](ElemSet a) { return a; };  // ids 0..n-2 unchanged
    RankFn del{cur.n - 1, [cur, without_last](ElemSet a) { return cur.rank(without_last(a)); }};
    RankFn con{cur.n - 1, [cur, e](ElemSet a) {
                 return cur.rank(a.with(e)) - cur.rank(ElemSet::single(e));
               }};
    bool loop = cur.rank(ElemSet::single(e)) == 0;
    bool coloop =
        cur.rank(ElemSet::full(cur.n)) - cur.rank(ElemSet::full(cur.n).without(e)) == 1;
    if (loop) return shift(rec(del), 0, 1);
    if (coloop) return shift(rec(con), 1, 0);
    return add(rec(del), rec(con));
  };
  return rec(m);
}

inline gcat::TuttePolynomial tutte_dc(const Matroid& m) {
  return tutte_dc(RankFn{m.ground_size(), [&m](ElemSet a) { return m.rank(a); }});
}

// Nonempty chain count of a poset by the recursion f(x) = 1 + sum of f over
// the strict down-set of x.
inline long long chain_count_dp(int n, const std::function<bool(int, int)>& less) {
  std::vector<long long> f(n, -1);
  std::function<long long(int)> ending_at = [&](int x) -> long long {
    if (f[x] >= 0) return f[x];
    long long total = 1;
    for (int y = 0; y < n; ++y)
      if (less(y, x)) total += ending_at(y);
    return f[x] = total;
  };
  long long total = 0;
  for (int x = 0; x < n; ++x) total += ending_at(x);
  return total;
}

// Number of valid token orders in the flag-list description of a chain:
// classes 1..t+1 contribute `singles[j]` distinguishable singletons that must
// all appear before the j-th marker, and markers appear in order.
inline long long list_orderings(const std::vector<int>& singles) {
  const int t1 = static_cast<int>(singles.size());
  std::map<std::pair<std::vector<int>, int>, long long> memo;
  std::function<long long(std::vector<int>, int)> rec = [&](std::vector<int> rem,
                                                            int placed) -> long long {
    if (placed == t1) return 1;
    auto key = std::make_pair(rem, placed);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    if (rem[placed] == 0) total += rec(rem, placed + 1);
    for (int j = placed; j < t1; ++j)
      if (rem[j] > 0) {
        std::vector<int> next = rem;
        --next[j];
        total += rem[j] * rec(next, placed);
      }
    return memo[key] = total;
  };
  return rec(singles, 0);
}

// Re-derives a reported axiom violation from scratch, independent of the
// validator's internals.
inline bool witness_confirmed(const gcat::RankedFamily& f, const gcat::ZViolation& v) {
  using gcat::RankedFlat;
  using gcat::ZViolation;
  auto find = [&](ElemSet s) -> const RankedFlat* {
    for (const RankedFlat& z : f.entries)
      if (z.set == s) return &z;
    return nullptr;
  };
  switch (v.kind) {
    case ZViolation::Kind::Input:
      return true;  // malformed input, nothing numeric to confirm
    case ZViolation::Kind::Z0: {
      if (f.entries.empty()) return true;
      const RankedFlat* x = find(v.x);
      const RankedFlat* y = find(v.y);
      if (!x || !y) return false;
      auto unique_bound = [&](bool lower) {
        std::vector<ElemSet> bounds;
        for (const RankedFlat& z : f.entries) {
          bool is_bound = lower ? (z.set.subset_of(v.x) && z.set.subset_of(v.y))
                                : (v.x.subset_of(z.set) && v.y.subset_of(z.set));
          if (is_bound) bounds.push_back(z.set);
        }
        for (ElemSet b : bounds) {
          bool extreme = true;
          for (ElemSet c : bounds)
            if (lower ? !c.subset_of(b) : !b.subset_of(c)) extreme = false;
          if (extreme) return true;
        }
        return false;
      };
      return !unique_bound(true) || !unique_bound(false);
    }
    case ZViolation::Kind::Z1: {
      const RankedFlat* x = find(v.x);
      if (!x || x->rank == 0) return false;
      for (const RankedFlat& z : f.entries)
        if (!x->set.subset_of(z.set)) return false;
      return true;
    }
    case ZViolation::Kind::Z2: {
      const RankedFlat* x = find(v.x);
      const RankedFlat* y = find(v.y);
      if (!x || !y || !(x->set.subset_of(y->set) && x->set != y->set)) return false;
      int dr = y->rank - x->rank;
      return dr <= 0 || dr >= (y->set - x->set).size();
    }
    case ZViolation::Kind::Z3: {
      const RankedFlat* x = find(v.x);
      const RankedFlat* y = find(v.y);
      const RankedFlat* mt = find(v.meet);
      const RankedFlat* jn = find(v.join);
      if (!x || !y || !mt || !jn) return false;
      if (!mt->set.subset_of(x->set) || !mt->set.subset_of(y->set)) return false;
      if (!x->set.subset_of(jn->set) || !y->set.subset_of(jn->set)) return false;
      int lhs = jn->rank + mt->rank + ((x->set & y->set) - mt->set).size();
      return lhs > x->rank + y->rank;
    }
  }
  return false;
}

}  // namespace oracles
