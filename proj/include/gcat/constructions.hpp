#pragma once

// Constructions that produce matroid pairs with equal G-invariants but
// different configurations: parallel extensions, the two-assignment lattice
// extension with its block realization, the rank-4 line/plane family, and
// the paving-matroid pair with hypothesis verification.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcat/configuration.hpp"
#include "gcat/lattice.hpp"
#include "gcat/matroid.hpp"

namespace gcat {

// Extension of M adding, for each element e, a set of t new elements
// parallel to e.  All flats of the result are cyclic, so its lattice of
// cyclic flats is the whole lattice of flats of M, sizes scaled by t+1.
inline Matroid parallel_extension(const Matroid& m, int t) {
  if (t < 1) throw std::invalid_argument("parallel_extension: t must be positive");
  if (m.has_loops()) throw std::invalid_argument("parallel_extension: matroid has loops");
  const int n = m.ground_size();
  if (n * (t + 1) > kMaxElements)
    throw std::invalid_argument("parallel_extension: resulting ground set too large");
  auto blow_up = [&](ElemSet f) {
    ElemSet out = f;
    for (int e : f)
      for (int j = 0; j < t; ++j) out = out.with(n + e * t + j);
    return out;
  };
  RankedFamily fam;
  fam.n = n * (t + 1);
  auto levels = m.flat_levels();
  for (int k = 0; k < static_cast<int>(levels.size()); ++k)
    for (ElemSet f : levels[k]) fam.entries.push_back({blow_up(f), k});
  return Matroid::from_cyclic_flats(fam);
}

// ---------------------------------------------------------------------------
// Block realization: sets for lattice elements from prescribed size labels.
// Every element gets a private block of fresh ids (possibly empty), assigned
// in a linear-extension order so that |phi(v)| = sizes[v]; phi(v) is the
// union of the private blocks weakly below v.

class realization_error : public std::runtime_error {
 public:
  explicit realization_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<ElemSet> realize_sets_from_sizes(const FiniteLattice& l,
                                                    const std::vector<int>& sizes) {
  const int n = l.size();
  if (static_cast<int>(sizes.size()) != n)
    throw std::invalid_argument("realize_sets_from_sizes: one size per lattice element");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (l.height(a) != l.height(b)) return l.height(a) < l.height(b);
    return a < b;
  });
  std::vector<ElemSet> phi(n);
  int next_id = 0;
  for (int v : order) {
    ElemSet below;
    for (int u = 0; u < n; ++u)
      if (u != v && l.leq(u, v)) below = below | phi[u];
    int private_size = sizes[v] - below.size();
    if (private_size < 0)
      throw realization_error("size label " + std::to_string(sizes[v]) + " of element " +
                              std::to_string(v) + " is below the " +
                              std::to_string(below.size()) + " elements forced from below");
    if (next_id + private_size > kMaxElements)
      throw realization_error("realization exceeds the supported ground-set size");
    ElemSet mine = below;
    for (int j = 0; j < private_size; ++j) mine = mine.with(next_id++);
    phi[v] = mine;
  }
  // the family must mirror the lattice order exactly
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (phi[u].subset_of(phi[v]) != l.leq(u, v))
        throw realization_error("size labels collapse the order at elements " +
                                std::to_string(u) + ", " + std::to_string(v));
  return phi;
}

inline Matroid realize_labeled_lattice(const FiniteLattice& l, const std::vector<int>& sizes,
                                       const std::vector<int>& ranks) {
  std::vector<ElemSet> phi = realize_sets_from_sizes(l, sizes);
  RankedFamily fam;
  fam.n = sizes[l.top()];
  for (int v = 0; v < l.size(); ++v) fam.entries.push_back({phi[v], ranks[v]});
  return Matroid::from_cyclic_flats(fam);
}

// ---------------------------------------------------------------------------
// Lattice extension: atoms a_1..a_m of a base lattice, pairwise meeting in b,
// with interval isomorphisms tau onto [0,a_i]; inserts L_1..L_n are glued
// over the atoms chosen by two assignments s and t.

struct LatticeExtensionSpec {
  FiniteLattice base;
  std::vector<int> atoms;                 // a_1..a_m (base indices)
  int b = 0;                              // common meet of distinct atoms
  std::vector<std::map<int, int>> taus;   // taus[i] : [0,a_m] -> [0,a_(i+1)], i in 0..m-2
  std::vector<FiniteLattice> inserts;     // L_1..L_n
  std::vector<int> assign_s, assign_t;    // values in 0..m-1
};

inline void validate_extension_spec(const LatticeExtensionSpec& spec) {
  const FiniteLattice& l = spec.base;
  const int m = static_cast<int>(spec.atoms.size());
  if (m < 1) throw std::invalid_argument("extension spec: need at least one distinguished element");
  for (int a : spec.atoms)
    if (a < 0 || a >= l.size()) throw std::invalid_argument("extension spec: atom out of range");
  if (spec.b < 0 || spec.b >= l.size()) throw std::invalid_argument("extension spec: b out of range");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (spec.atoms[i] == spec.atoms[j])
        throw std::invalid_argument("extension spec: distinguished elements must be distinct");
      if (l.meet(spec.atoms[i], spec.atoms[j]) != spec.b)
        throw std::invalid_argument("extension spec: elements " + std::to_string(spec.atoms[i]) +
                                    " and " + std::to_string(spec.atoms[j]) +
                                    " do not meet in b");
    }
  if (static_cast<int>(spec.taus.size()) != std::max(0, m - 1))
    throw std::invalid_argument("extension spec: need one tau per element besides a_m");
  const int am = spec.atoms[m - 1];
  auto interval = [&](int top) {
    std::vector<int> iv;
    for (int v = 0; v < l.size(); ++v)
      if (l.leq(v, top)) iv.push_back(v);
    return iv;
  };
  std::vector<int> dom = interval(am);
  for (int i = 0; i + 1 < m; ++i) {
    const std::map<int, int>& tau = spec.taus[i];
    std::vector<int> ran = interval(spec.atoms[i]);
    if (tau.size() != dom.size() || ran.size() != dom.size())
      throw std::invalid_argument("extension spec: tau_" + std::to_string(i + 1) +
                                  " is not a bijection between the intervals");
    std::set<int> image;
    for (int v : dom) {
      auto it = tau.find(v);
      if (it == tau.end() || !l.leq(it->second, spec.atoms[i]))
        throw std::invalid_argument("extension spec: tau_" + std::to_string(i + 1) +
                                    " does not map the interval onto [0,a_" + std::to_string(i + 1) + "]");
      image.insert(it->second);
      if (l.leq(v, spec.b) && it->second != v)
        throw std::invalid_argument("extension spec: tau must fix [0,b] pointwise");
    }
    if (static_cast<int>(image.size()) != static_cast<int>(dom.size()))
      throw std::invalid_argument("extension spec: tau is not injective");
    for (int u : dom)
      for (int v : dom)
        if (l.leq(u, v) != l.leq(tau.at(u), tau.at(v)))
          throw std::invalid_argument("extension spec: tau is not a lattice isomorphism");
  }
  if (spec.assign_s.size() != spec.inserts.size() || spec.assign_t.size() != spec.inserts.size())
    throw std::invalid_argument("extension spec: one assignment value per insert");
  for (int v : spec.assign_s)
    if (v < 0 || v >= m) throw std::invalid_argument("extension spec: assignment out of range");
  for (int v : spec.assign_t)
    if (v < 0 || v >= m) throw std::invalid_argument("extension spec: assignment out of range");
}

struct ExtensionLattices {
  FiniteLattice ls, lt;
  // new indices of each insert's interior; identical layout on both sides
  std::vector<std::vector<int>> interiors;
};

inline ExtensionLattices build_lattice_extension(const LatticeExtensionSpec& spec) {
  validate_extension_spec(spec);
  std::vector<LatticeInsert> ins_s, ins_t;
  for (std::size_t i = 0; i < spec.inserts.size(); ++i) {
    ins_s.push_back({spec.inserts[i], spec.atoms[spec.assign_s[i]], spec.base.top()});
    ins_t.push_back({spec.inserts[i], spec.atoms[spec.assign_t[i]], spec.base.top()});
  }
  ExtensionLattices out;
  std::vector<std::vector<int>> ids_s, ids_t;
  out.ls = glue_transitive_closure(spec.base, ins_s, &ids_s);
  out.lt = glue_transitive_closure(spec.base, ins_t, &ids_t);
  if (ids_s != ids_t) throw std::logic_error("glue produced mismatched element layouts");
  out.interiors = std::move(ids_s);
  return out;
}

// Labels on the common element universe of L_s and L_t.
struct ExtensionLabels {
  std::vector<int> sizes, ranks;
};

// Realizes both glued lattices as matroids via the block recipe.  The label
// map is shared between the two sides; it must in addition be invariant under
// the interval isomorphisms tau.
inline std::pair<Matroid, Matroid> realize_extension_pair(const LatticeExtensionSpec& spec,
                                                          const ExtensionLabels& labels) {
  ExtensionLattices glued = build_lattice_extension(spec);
  if (labels.sizes.size() != static_cast<std::size_t>(glued.ls.size()) ||
      labels.ranks.size() != static_cast<std::size_t>(glued.ls.size()))
    throw std::invalid_argument("realize_extension_pair: one size and rank per element");
  const int m = static_cast<int>(spec.atoms.size());
  for (int i = 0; i + 1 < m; ++i)
    for (auto [y, ty] : spec.taus[i])
      if (labels.sizes[y] != labels.sizes[ty] || labels.ranks[y] != labels.ranks[ty])
        throw std::invalid_argument(
            "realize_extension_pair: labels are not invariant under tau at element " +
            std::to_string(y));
  Matroid ms = realize_labeled_lattice(glued.ls, labels.sizes, labels.ranks);
  Matroid mt = realize_labeled_lattice(glued.lt, labels.sizes, labels.ranks);
  return {ms, mt};
}

// Rank-4 matroid with m three-point lines, pairwise spanning, and one cyclic
// plane per entry of `assignment` (1-based line indices) of the requested
// sizes.  Different assignments with the same plane sizes give matroids with
// the same G-invariant.
inline Matroid example1_family(int m, const std::vector<int>& assignment,
                               const std::vector<int>& plane_sizes) {
  if (m < 1) throw std::invalid_argument("example1_family: need at least one line");
  if (assignment.size() != plane_sizes.size())
    throw std::invalid_argument("example1_family: one size per plane");
  for (std::size_t i = 0; i < plane_sizes.size(); ++i) {
    if (plane_sizes[i] < 5) throw std::invalid_argument("example1_family: plane sizes must be >= 5");
    for (std::size_t j = i + 1; j < plane_sizes.size(); ++j)
      if (plane_sizes[i] == plane_sizes[j])
        throw std::invalid_argument("example1_family: plane sizes must be distinct");
  }
  for (int a : assignment)
    if (a < 1 || a > m) throw std::invalid_argument("example1_family: assignment out of range");

  RankedFamily fam;
  std::vector<ElemSet> lines;
  int next_id = 0;
  for (int i = 0; i < m; ++i) {
    ElemSet line;
    for (int j = 0; j < 3; ++j) line = line.with(next_id++);
    lines.push_back(line);
  }
  std::vector<ElemSet> planes;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    ElemSet plane = lines[assignment[j] - 1];
    for (int f = 0; f < plane_sizes[j] - 3; ++f) plane = plane.with(next_id++);
    planes.push_back(plane);
  }
  fam.n = next_id;
  fam.entries.push_back({ElemSet(), 0});
  for (ElemSet l : lines) fam.entries.push_back({l, 2});
  for (ElemSet p : planes) fam.entries.push_back({p, 3});
  fam.entries.push_back({ElemSet::full(fam.n), 4});
  return Matroid::from_cyclic_flats(fam);
}

// ---------------------------------------------------------------------------
// Paving pairs.

struct PavingPairSpec {
  PavingSpec n1, n2;                          // on the same ground set
  std::vector<std::vector<ElemSet>> blocks_a; // partition of H1 - H2
  std::vector<std::vector<ElemSet>> blocks_b; // partition of H2 - H1
  std::vector<std::vector<int>> alphas;       // one permutation of E per block
  std::vector<int> block_sizes;               // per ground-set element
  std::map<ElemSet, int> rank_labels;         // by flat; empty entries mean natural rank
};

struct HypothesisCheck {
  bool ok = true;
  std::string witness;
};

namespace detail {

inline ElemSet apply_perm(const std::vector<int>& alpha, ElemSet s) {
  ElemSet out;
  for (int e : s) out = out.with(alpha[e]);
  return out;
}

inline int paving_label(const PavingPairSpec& spec, ElemSet flat, int natural_rank) {
  auto it = spec.rank_labels.find(flat);
  return it == spec.rank_labels.end() ? natural_rank : it->second;
}

inline int block_size_sum(const PavingPairSpec& spec, ElemSet flat) {
  int s = 0;
  for (int e : flat) s += spec.block_sizes[e];
  return s;
}

}  // namespace detail

// Checks the partition/bijection hypotheses and the size/rank label
// conditions for a paving pair.  Returns the first failure with a witness.
inline HypothesisCheck verify_paving_hypotheses(const PavingPairSpec& spec) {
  if (spec.n1.n != spec.n2.n || spec.n1.r != spec.n2.r)
    throw std::invalid_argument("paving pair: matroids must share ground set and rank");
  if (static_cast<int>(spec.block_sizes.size()) != spec.n1.n)
    throw std::invalid_argument("paving pair: one block size per element");
  const int r = spec.n1.r;
  Matroid m1 = Matroid::from_paving(spec.n1);
  Matroid m2 = Matroid::from_paving(spec.n2);

  auto hyperplanes = [&](const Matroid& m) {
    auto hs = m.flats_of_rank(r - 1);
    return std::set<ElemSet>(hs.begin(), hs.end());
  };
  std::set<ElemSet> h1 = hyperplanes(m1), h2 = hyperplanes(m2);
  std::set<ElemSet> only1, only2;
  for (ElemSet h : h1)
    if (!h2.count(h)) only1.insert(h);
  for (ElemSet h : h2)
    if (!h1.count(h)) only2.insert(h);

  const std::size_t p = spec.blocks_a.size();
  if (spec.blocks_b.size() != p || spec.alphas.size() != p)
    return {false, "need matching counts of A-blocks, B-blocks and bijections"};

  auto check_partition = [](const std::vector<std::vector<ElemSet>>& blocks,
                            const std::set<ElemSet>& whole, const std::string& which,
                            HypothesisCheck& out) {
    std::set<ElemSet> seen;
    for (const auto& b : blocks)
      for (ElemSet x : b) {
        if (!whole.count(x)) {
          out = {false, which + "-block contains " + x.to_string() +
                            ", not a hyperplane of the difference"};
          return;
        }
        if (!seen.insert(x).second) {
          out = {false, x.to_string() + " appears in two " + which + "-blocks"};
          return;
        }
      }
    if (seen.size() != whole.size()) {
      for (ElemSet x : whole)
        if (!seen.count(x)) {
          out = {false, x.to_string() + " is missing from the " + which + "-blocks"};
          return;
        }
    }
  };
  HypothesisCheck out;
  check_partition(spec.blocks_a, only1, "A", out);
  if (!out.ok) return out;
  check_partition(spec.blocks_b, only2, "B", out);
  if (!out.ok) return out;

  for (std::size_t j = 0; j < p; ++j) {
    const std::vector<int>& alpha = spec.alphas[j];
    if (static_cast<int>(alpha.size()) != spec.n1.n) return {false, "bijection must cover E"};
    std::set<ElemSet> bj(spec.blocks_b[j].begin(), spec.blocks_b[j].end());
    for (ElemSet x : only1) {
      bool in_a = false;
      for (ElemSet y : spec.blocks_a[j]) in_a |= y == x;
      ElemSet image = detail::apply_perm(alpha, x);
      if (in_a != (bj.count(image) > 0))
        return {false, "alpha_" + std::to_string(j + 1) + " maps " + x.to_string() + " to " +
                           image.to_string() + (in_a ? ", not in B_" : ", which is in B_") +
                           std::to_string(j + 1)};
    }
  }

  // size/rank label conditions of the pair construction
  for (std::size_t j = 0; j < p; ++j) {
    const std::vector<int>& alpha = spec.alphas[j];
    for (ElemSet y : spec.blocks_a[j]) {
      ElemSet y2 = detail::apply_perm(alpha, y);
      if (detail::block_size_sum(spec, y) != detail::block_size_sum(spec, y2))
        return {false, "sizes of " + y.to_string() + " and " + y2.to_string() + " differ"};
      if (detail::paving_label(spec, y, r - 1) != detail::paving_label(spec, y2, r - 1))
        return {false, "rank labels of " + y.to_string() + " and " + y2.to_string() + " differ"};
      // all subsets X of Y with |X| < r-1 (each is a flat of both matroids)
      bool sub_ok = true;
      ElemSet bad;
      for_each_subset(y, [&](ElemSet x) {
        if (!sub_ok || x.size() >= r - 1) return;
        ElemSet x2 = detail::apply_perm(alpha, x);
        if (detail::block_size_sum(spec, x) != detail::block_size_sum(spec, x2) ||
            detail::paving_label(spec, x, x.size()) != detail::paving_label(spec, x2, x2.size())) {
          sub_ok = false;
          bad = x;
        }
      });
      if (!sub_ok)
        return {false, "labels of " + bad.to_string() + " and its image under alpha_" +
                           std::to_string(j + 1) + " differ"};
    }
  }
  return out;
}

// Builds the pair: each element of E gets a disjoint block, each flat of N_i
// maps to the union of its blocks with the configured rank label, and both
// families are constructed through the axiom gate.
inline std::pair<Matroid, Matroid> realize_paving_pair(const PavingPairSpec& spec) {
  HypothesisCheck h = verify_paving_hypotheses(spec);
  if (!h.ok) throw std::invalid_argument("realize_paving_pair: hypotheses fail: " + h.witness);
  for (int b : spec.block_sizes)
    if (b < 1) throw std::invalid_argument("realize_paving_pair: block sizes must be positive");

  std::vector<int> start(spec.n1.n, 0);
  int total = 0;
  for (int e = 0; e < spec.n1.n; ++e) {
    start[e] = total;
    total += spec.block_sizes[e];
  }
  if (total > kMaxElements)
    throw std::invalid_argument("realize_paving_pair: ground set too large");
  auto blow_up = [&](ElemSet f) {
    ElemSet out;
    for (int e : f)
      for (int j = 0; j < spec.block_sizes[e]; ++j) out = out.with(start[e] + j);
    return out;
  };
  auto realize = [&](const PavingSpec& ps) {
    Matroid base = Matroid::from_paving(ps);
    RankedFamily fam;
    fam.n = total;
    auto levels = base.flat_levels();
    for (int k = 0; k < static_cast<int>(levels.size()); ++k)
      for (ElemSet f : levels[k])
        fam.entries.push_back({blow_up(f), detail::paving_label(spec, f, k)});
    return Matroid::from_cyclic_flats(fam);
  };
  return {realize(spec.n1), realize(spec.n2)};
}

inline std::pair<Matroid, Matroid> dualize_pair(const Matroid& m1, const Matroid& m2) {
  return {m1.dual(), m2.dual()};
}

// ---------------------------------------------------------------------------
// Bundled instances.

// The two rank-3 paving matroids on {a, b, x_1..x_m, y_1..y_n} whose
// dependent hyperplanes differ in whether the y-line passes through a or b;
// single-block partitions and the transposition (a b).
inline PavingPairSpec example3_spec(int m, int n, int block_size) {
  if (m < 2 || n < 2) throw std::invalid_argument("example3_spec: need m, n >= 2");
  const int total = 2 + m + n;
  ElemSet xs, ys;
  for (int i = 0; i < m; ++i) xs = xs.with(2 + i);
  for (int i = 0; i < n; ++i) ys = ys.with(2 + m + i);
  PavingPairSpec spec;
  spec.n1 = {total, 3, {xs.with(0), ys.with(1)}};
  spec.n2 = {total, 3, {xs.with(0), ys.with(0)}};
  Matroid m1 = Matroid::from_paving(spec.n1);
  Matroid m2 = Matroid::from_paving(spec.n2);
  auto hyps = [&](const Matroid& mm) {
    auto hs = mm.flats_of_rank(2);
    return std::set<ElemSet>(hs.begin(), hs.end());
  };
  std::set<ElemSet> h1 = hyps(m1), h2 = hyps(m2);
  std::vector<ElemSet> a_block, b_block;
  for (ElemSet h : h1)
    if (!h2.count(h)) a_block.push_back(h);
  for (ElemSet h : h2)
    if (!h1.count(h)) b_block.push_back(h);
  spec.blocks_a = {a_block};
  spec.blocks_b = {b_block};
  std::vector<int> alpha(total);
  std::iota(alpha.begin(), alpha.end(), 0);
  std::swap(alpha[0], alpha[1]);
  spec.alphas = {alpha};
  spec.block_sizes.assign(total, block_size);
  return spec;
}

// The two rank-4 paving matroids on 12 elements with three dependent planes
// each, together with the three-block partitions and the pairing bijections
// (e p)(f q), (a r)(b s), (c t)(d u).
inline PavingPairSpec example4_spec(int block_size) {
  // ids: a b c d e f p q r s t u -> 0..11
  PavingPairSpec spec;
  spec.n1 = {12, 4, {ElemSet::of({0, 1, 2, 3}), ElemSet::of({0, 1, 4, 5}), ElemSet::of({2, 3, 4, 5})}};
  spec.n2 = {12, 4, {ElemSet::of({0, 1, 6, 7}), ElemSet::of({2, 3, 8, 9}), ElemSet::of({4, 5, 10, 11})}};
  spec.blocks_a = {
      {ElemSet::of({0, 1, 4, 5}), ElemSet::of({0, 1, 6}), ElemSet::of({0, 1, 7}),
       ElemSet::of({0, 6, 7}), ElemSet::of({1, 6, 7})},
      {ElemSet::of({0, 1, 2, 3}), ElemSet::of({2, 3, 8}), ElemSet::of({2, 3, 9}),
       ElemSet::of({2, 8, 9}), ElemSet::of({3, 8, 9})},
      {ElemSet::of({2, 3, 4, 5}), ElemSet::of({4, 5, 10}), ElemSet::of({4, 5, 11}),
       ElemSet::of({4, 10, 11}), ElemSet::of({5, 10, 11})},
  };
  spec.blocks_b = {
      {ElemSet::of({0, 1, 6, 7}), ElemSet::of({0, 1, 4}), ElemSet::of({0, 1, 5}),
       ElemSet::of({0, 4, 5}), ElemSet::of({1, 4, 5})},
      {ElemSet::of({2, 3, 8, 9}), ElemSet::of({0, 2, 3}), ElemSet::of({1, 2, 3}),
       ElemSet::of({0, 1, 2}), ElemSet::of({0, 1, 3})},
      {ElemSet::of({4, 5, 10, 11}), ElemSet::of({2, 4, 5}), ElemSet::of({3, 4, 5}),
       ElemSet::of({2, 3, 4}), ElemSet::of({2, 3, 5})},
  };
  auto cycles = [&](std::initializer_list<std::pair<int, int>> swaps) {
    std::vector<int> alpha(12);
    std::iota(alpha.begin(), alpha.end(), 0);
    for (auto [x, y] : swaps) std::swap(alpha[x], alpha[y]);
    return alpha;
  };
  spec.alphas = {cycles({{4, 6}, {5, 7}}), cycles({{0, 8}, {1, 9}}), cycles({{2, 10}, {3, 11}})};
  spec.block_sizes.assign(12, block_size);
  return spec;
}

}  // namespace gcat
