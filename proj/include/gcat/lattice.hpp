#pragma once

// Finite lattices stored by their full order relation over dense indices.
// Covers, meets and joins are derived tables; instances stay small (a few
// hundred elements), so the quadratic/cubic precomputation is fine.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcat/sets.hpp"

namespace gcat {

class lattice_error : public std::runtime_error {
 public:
  explicit lattice_error(const std::string& what) : std::runtime_error(what) {}
};

using Chain = std::vector<int>;  // strictly increasing in the lattice order

class FiniteLattice {
 public:
  // Builds from a full reflexive order relation; verifies poset axioms and
  // that every pair has a unique meet and join.
  static FiniteLattice from_leq(std::vector<std::vector<bool>> leq) {
    FiniteLattice l;
    l.size_ = static_cast<int>(leq.size());
    l.leq_ = std::move(leq);
    l.validate_and_finish();
    return l;
  }

  // Builds from cover pairs (a, b) meaning a < b; the order is the
  // reflexive-transitive closure.
  static FiniteLattice from_covers(int size, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i) leq[i][i] = true;
    for (auto [a, b] : covers) {
      if (a < 0 || a >= size || b < 0 || b >= size)
        throw lattice_error("from_covers: index out of range");
      leq[a][b] = true;
    }
    transitive_close(leq);
    return from_leq(std::move(leq));
  }

  static FiniteLattice chain_lattice(int length) {
    std::vector<std::vector<bool>> leq(length, std::vector<bool>(length, false));
    for (int i = 0; i < length; ++i)
      for (int j = i; j < length; ++j) leq[i][j] = true;
    return from_leq(std::move(leq));
  }

  // Lattice of a set family ordered by inclusion (for lattices of flats or
  // of cyclic flats).  The family must already be closed under meet/join.
  static FiniteLattice from_inclusion_family(const std::vector<ElemSet>& sets) {
    int k = static_cast<int>(sets.size());
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) leq[i][j] = sets[i].subset_of(sets[j]);
    return from_leq(std::move(leq));
  }

  int size() const { return size_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }

  const std::vector<int>& up_covers(int v) const { return up_covers_[v]; }
  const std::vector<int>& down_covers(int v) const { return down_covers_[v]; }

  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size_; ++v)
      for (int w : up_covers_[v]) out.push_back({v, w});
    std::sort(out.begin(), out.end());
    return out;
  }

  // Longest-chain height from the bottom.
  int height(int v) const { return height_[v]; }

  FiniteLattice order_dual() const {
    std::vector<std::vector<bool>> leq(size_, std::vector<bool>(size_, false));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) leq[i][j] = leq_[j][i];
    return from_leq(std::move(leq));
  }

  // All nonempty chains, of the open interval (bottom, top) when open_only.
  // Chains are listed sorted by length, then lexicographically.
  std::vector<Chain> chains(bool open_only) const {
    std::vector<int> verts;
    for (int v = 0; v < size_; ++v)
      if (!open_only || (v != bottom_ && v != top_)) verts.push_back(v);
    // order comparable pairs consistently by height, then index
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
      if (height_[a] != height_[b]) return height_[a] < height_[b];
      return a < b;
    });
    std::vector<Chain> out;
    Chain cur;
    auto extend = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t i = from; i < verts.size(); ++i) {
        if (!cur.empty() && !less(cur.back(), verts[i])) continue;
        cur.push_back(verts[i]);
        out.push_back(cur);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.leq_ == b.leq_;
  }

 private:
  static void transitive_close(std::vector<std::vector<bool>>& leq) {
    int n = static_cast<int>(leq.size());
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (leq[i][k])
          for (int j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
  }

  void validate_and_finish() {
    if (size_ == 0) throw lattice_error("lattice must be non-empty");
    for (int i = 0; i < size_; ++i) {
      if (!leq_[i][i]) throw lattice_error("order not reflexive");
      for (int j = 0; j < size_; ++j) {
        if (i != j && leq_[i][j] && leq_[j][i]) throw lattice_error("order not antisymmetric");
        for (int k = 0; k < size_; ++k)
          if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) throw lattice_error("order not transitive");
      }
    }
    meet_.assign(size_, std::vector<int>(size_, -1));
    join_.assign(size_, std::vector<int>(size_, -1));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) {
        meet_[i][j] = unique_bound(i, j, /*lower=*/true);
        join_[i][j] = unique_bound(i, j, /*lower=*/false);
        if (meet_[i][j] < 0 || join_[i][j] < 0)
          throw lattice_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") lacks a unique " + (meet_[i][j] < 0 ? "meet" : "join"));
      }
    bottom_ = 0;
    top_ = 0;
    for (int i = 0; i < size_; ++i) {
      bottom_ = meet_[bottom_][i];
      top_ = join_[top_][i];
    }
    up_covers_.assign(size_, {});
    down_covers_.assign(size_, {});
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b) {
        if (!less(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < size_ && cover; ++c)
          if (less(a, c) && less(c, b)) cover = false;
        if (cover) {
          up_covers_[a].push_back(b);
          down_covers_[b].push_back(a);
        }
      }
    height_.assign(size_, 0);
    // heights via repeated relaxation over covers (sizes are tiny)
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < size_; ++a)
        for (int b : up_covers_[a])
          if (height_[b] < height_[a] + 1) {
            height_[b] = height_[a] + 1;
            changed = true;
          }
    }
  }

  int unique_bound(int i, int j, bool lower) const {
    int best = -1;
    for (int k = 0; k < size_; ++k) {
      bool is_bound = lower ? (leq_[k][i] && leq_[k][j]) : (leq_[i][k] && leq_[j][k]);
      if (!is_bound) continue;
      if (best == -1 || (lower ? leq_[best][k] : leq_[k][best])) best = k;
    }
    if (best == -1) return -1;
    for (int k = 0; k < size_; ++k) {
      bool is_bound = lower ? (leq_[k][i] && leq_[k][j]) : (leq_[i][k] && leq_[j][k]);
      if (is_bound && !(lower ? leq_[k][best] : leq_[best][k])) return -1;
    }
    return best;
  }

  int size_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;
  std::vector<std::vector<int>> up_covers_, down_covers_;
  std::vector<int> height_;
};

// A lattice whose elements carry a size and a rank label; this is the
// configuration datum of a matroid once the underlying sets are forgotten.
struct LabeledLattice {
  FiniteLattice lattice;
  std::vector<int> size_label;
  std::vector<int> rank_label;
};

namespace detail {

// Iterated invariant refinement: color by (labels, degrees), then fold in
// sorted neighbor colors until stable.  Isomorphic inputs get identical
// color multisets, and the classes prune the backtracking search.
inline std::vector<int> refine_colors(const LabeledLattice& c) {
  const FiniteLattice& l = c.lattice;
  int n = l.size();
  std::vector<std::vector<long long>> key(n);
  for (int v = 0; v < n; ++v)
    key[v] = {c.size_label[v], c.rank_label[v], l.height(v),
              static_cast<long long>(l.up_covers(v).size()),
              static_cast<long long>(l.down_covers(v).size())};
  std::vector<int> color(n, 0);
  int rounds = 0;
  while (rounds++ < n + 2) {
    std::map<std::vector<long long>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      auto it = ids.find(key[v]);
      if (it == ids.end()) it = ids.emplace(key[v], static_cast<int>(ids.size())).first;
      next[v] = it->second;
    }
    if (next == color && rounds > 1) break;
    color = next;
    for (int v = 0; v < n; ++v) {
      std::vector<long long> k = {color[v]};
      std::vector<long long> up, down;
      for (int w : l.up_covers(v)) up.push_back(color[w]);
      for (int w : l.down_covers(v)) down.push_back(color[w]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      k.push_back(-1);
      k.insert(k.end(), up.begin(), up.end());
      k.push_back(-2);
      k.insert(k.end(), down.begin(), down.end());
      key[v] = std::move(k);
    }
  }
  return color;
}

}  // namespace detail

// True iff a lattice isomorphism exists preserving both labels.  Backtracking
// over color classes from the refinement above.
inline bool labeled_isomorphic(const LabeledLattice& c1, const LabeledLattice& c2) {
  const FiniteLattice& l1 = c1.lattice;
  const FiniteLattice& l2 = c2.lattice;
  int n = l1.size();
  if (n != l2.size()) return false;

  std::vector<int> col1 = detail::refine_colors(c1);
  std::vector<int> col2 = detail::refine_colors(c2);

  // The color ids are built from identical key streams, but may be numbered
  // differently; compare by class signature (the refinement keys are not
  // retained, so re-identify classes by matching label/degree statistics and
  // sizes via a canonical renumbering of each side).
  auto signature = [](const LabeledLattice& c, const std::vector<int>& col) {
    int n = c.lattice.size();
    int classes = *std::max_element(col.begin(), col.end()) + 1;
    // canonical per-class key: sorted member invariants plus neighborhood
    // color-class multisets, iterated once more for stability
    std::vector<std::vector<long long>> keys(classes);
    for (int v = 0; v < n; ++v) {
      auto& k = keys[col[v]];
      if (k.empty())
        k = {c.size_label[v], c.rank_label[v], c.lattice.height(v),
             static_cast<long long>(c.lattice.up_covers(v).size()),
             static_cast<long long>(c.lattice.down_covers(v).size()), 0};
      ++k.back();
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  if (signature(c1, col1) != signature(c2, col2)) return false;

  // Map color ids of side 1 to candidate vertex lists of side 2 by matching
  // the full invariant of one representative; since refinement is
  // deterministic on (labels, height, degrees, neighbor colors), classes with
  // the same statistics line up or the search below fails.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v) ++class_size[col1[v]];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[col1[a]] != class_size[col1[b]])
      return class_size[col1[a]] < class_size[col1[b]];
    return a < b;
  });

  std::vector<int> image(n, -1), used(n, 0);
  auto compatible = [&](int v, int w) {
    if (c1.size_label[v] != c2.size_label[w] || c1.rank_label[v] != c2.rank_label[w]) return false;
    if (l1.height(v) != l2.height(w)) return false;
    if (l1.up_covers(v).size() != l2.up_covers(w).size()) return false;
    if (l1.down_covers(v).size() != l2.down_covers(w).size()) return false;
    for (int u = 0; u < n; ++u) {
      if (image[u] == -1) continue;
      if (l1.leq(u, v) != l2.leq(image[u], w)) return false;
      if (l1.leq(v, u) != l2.leq(w, image[u])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    for (int w = 0; w < n; ++w) {
      if (used[w] || !compatible(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return search(search, 0);
}

// Glue target for one inserted lattice: its bottom is identified with
// bottom_target and its top with top_target in the base.
struct LatticeInsert {
  FiniteLattice inner;
  int bottom_target = 0;
  int top_target = 0;
};

// Transitive-closure gluing: each insert's open interior is added as new
// elements sitting strictly between its two targets.  Element indices 0..
// base.size()-1 keep their meaning; interiors follow in insert order (their
// new indices are reported through interior_ids when non-null).  The result
// is verified to be a lattice.
inline FiniteLattice glue_transitive_closure(const FiniteLattice& base,
                                             const std::vector<LatticeInsert>& inserts,
                                             std::vector<std::vector<int>>* interior_ids = nullptr) {
  int total = base.size();
  std::vector<std::vector<int>> interiors;
  for (const LatticeInsert& ins : inserts) {
    if (ins.bottom_target < 0 || ins.bottom_target >= base.size() || ins.top_target < 0 ||
        ins.top_target >= base.size())
      throw lattice_error("glue: target outside base lattice");
    std::vector<int> ids;
    for (int v = 0; v < ins.inner.size(); ++v)
      if (v != ins.inner.bottom() && v != ins.inner.top()) ids.push_back(total++);
    interiors.push_back(std::move(ids));
  }

  std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
  for (int i = 0; i < total; ++i) leq[i][i] = true;
  for (int i = 0; i < base.size(); ++i)
    for (int j = 0; j < base.size(); ++j)
      if (base.leq(i, j)) leq[i][j] = true;

  for (std::size_t k = 0; k < inserts.size(); ++k) {
    const FiniteLattice& inner = inserts[k].inner;
    // map inner indices to glued indices
    std::vector<int> glued(inner.size(), -1);
    int next = 0;
    for (int v = 0; v < inner.size(); ++v) {
      if (v == inner.bottom())
        glued[v] = inserts[k].bottom_target;
      else if (v == inner.top())
        glued[v] = inserts[k].top_target;
      else
        glued[v] = interiors[k][next++];
    }
    for (int a = 0; a < inner.size(); ++a)
      for (int b = 0; b < inner.size(); ++b)
        if (inner.leq(a, b)) leq[glued[a]][glued[b]] = true;
  }

  for (int k = 0; k < total; ++k)
    for (int i = 0; i < total; ++i)
      if (leq[i][k])
        for (int j = 0; j < total; ++j)
          if (leq[k][j]) leq[i][j] = true;

  if (interior_ids) *interior_ids = interiors;
  return FiniteLattice::from_leq(std::move(leq));  // throws if not a lattice
}

}  // namespace gcat
