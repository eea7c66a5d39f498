#pragma once

// Matroids represented by their ranked family of cyclic flats.  The rank of
// any subset follows from the family,
//   r(A) = min(|A|, min over cyclic flats Z of (r(Z) + |A - Z|)),
// and every constructed instance is gated through the (Z0)-(Z3) validator, so
// the oracle is only ever evaluated on families that admit a matroid.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcat/sets.hpp"
#include "gcat/zaxioms.hpp"

namespace gcat {

struct PavingSpec {
  int n = 0;
  int r = 2;
  std::vector<ElemSet> dependent_hyperplanes;
};

class Matroid;

// Minor on a cyclic-flat interval, relabeled to a dense ground set.
// elements[i] is the original identifier of the minor's element i.
struct MatroidMinor;

class Matroid {
 public:
  // Builds a matroid from a ranked family, which must pass (Z0)-(Z3).
  // Throws z_validation_error carrying the report otherwise.
  static Matroid from_cyclic_flats(const RankedFamily& f) {
    ZReport rep = validate_z_axioms(f);
    if (!rep.ok) throw z_validation_error(rep);
    Matroid m;
    m.n_ = f.n;
    m.zflats_ = f.entries;
    std::sort(m.zflats_.begin(), m.zflats_.end());
    m.rank_ = rank_from_family(f, ElemSet::full(f.n));
    return m;
  }

  static Matroid uniform(int k, int n) {
    RankedFamily f;
    f.n = n;
    if (k == 0) {
      f.entries = {{ElemSet::full(n), 0}};
    } else if (k >= n) {
      f.entries = {{ElemSet(), 0}};
    } else {
      f.entries = {{ElemSet(), 0}, {ElemSet::full(n), k}};
    }
    return from_cyclic_flats(f);
  }

  // Paving matroid given by its dependent hyperplanes: cyclic flats are the
  // empty set, each dependent hyperplane at rank r-1, and E at rank r.
  static Matroid from_paving(const PavingSpec& spec) {
    if (spec.r < 2) throw std::invalid_argument("from_paving: rank must be >= 2");
    ElemSet ground = ElemSet::full(spec.n);
    RankedFamily f;
    f.n = spec.n;
    f.entries.push_back({ElemSet(), 0});
    for (ElemSet h : spec.dependent_hyperplanes) {
      if (!h.subset_of(ground)) throw std::invalid_argument("from_paving: hyperplane outside ground set");
      f.entries.push_back({h, spec.r - 1});
    }
    f.entries.push_back({ground, spec.r});
    try {
      return from_cyclic_flats(f);
    } catch (const z_validation_error& e) {
      throw std::invalid_argument("from_paving: invalid dependent hyperplanes: " +
                                  std::string(e.what()));
    }
  }

  int ground_size() const { return n_; }
  ElemSet ground() const { return ElemSet::full(n_); }
  int rank() const { return rank_; }
  const std::vector<RankedFlat>& cyclic_flats_stored() const { return zflats_; }

  int rank(ElemSet a) const {
    require_subset(a);
    int best = a.size();
    for (const RankedFlat& z : zflats_) {
      int v = z.rank + (a - z.set).size();
      if (v < best) best = v;
    }
    return best;
  }

  // The unique minimal flat containing a.
  ElemSet closure(ElemSet a) const {
    require_subset(a);
    int ra = rank(a);
    ElemSet cl = a;
    for (int e : ground() - a)
      if (rank(a.with(e)) == ra) cl = cl.with(e);
    return cl;
  }

  bool is_flat(ElemSet a) const { return closure(a) == a; }

  // All flats of rank exactly k, canonical order, computed incrementally as
  // closures of F + e over the rank-(k-1) flats F.
  std::vector<ElemSet> flats_of_rank(int k) const {
    if (k < 0 || k > rank_) throw std::invalid_argument("flats_of_rank: rank out of range");
    std::vector<ElemSet> level = {closure(ElemSet())};
    for (int i = 1; i <= k; ++i) level = next_flat_level(level);
    return level;
  }

  // Flats of every rank 0..r(M), one level per rank.
  std::vector<std::vector<ElemSet>> flat_levels() const {
    std::vector<std::vector<ElemSet>> levels;
    levels.push_back({closure(ElemSet())});
    for (int i = 1; i <= rank_; ++i) levels.push_back(next_flat_level(levels.back()));
    return levels;
  }

  // Elements of a whose removal drops the rank, i.e. the coloops of M|a.
  ElemSet restriction_coloops(ElemSet a) const {
    require_subset(a);
    int ra = rank(a);
    ElemSet out;
    for (int e : a)
      if (rank(a.without(e)) == ra - 1) out = out.with(e);
    return out;
  }

  bool is_cyclic(ElemSet a) const { return restriction_coloops(a).empty(); }

  // a minus the coloops of M|a; for a flat this is the largest cyclic flat
  // inside it.
  ElemSet cyclic_core(ElemSet a) const { return a - restriction_coloops(a); }

  // Recomputes the cyclic flats from the rank oracle (must reproduce the
  // stored family; that consistency is exercised in tests).
  std::vector<RankedFlat> cyclic_flats() const {
    std::vector<RankedFlat> out;
    auto levels = flat_levels();
    for (int k = 0; k <= rank_; ++k)
      for (ElemSet f : levels[k])
        if (is_cyclic(f)) out.push_back({f, k});
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_loops() const { return !closure(ElemSet()).empty(); }
  bool has_coloops() const { return !is_cyclic(ground()); }

  MatroidMinor minor_on_cyclic_interval(ElemSet x, ElemSet y) const;

  // Dual matroid: cyclic flats are the complements of this matroid's, with
  // rank |E-X| + r(X) - r(M).
  Matroid dual() const {
    RankedFamily f;
    f.n = n_;
    for (const RankedFlat& z : zflats_) {
      ElemSet c = ground() - z.set;
      f.entries.push_back({c, c.size() + z.rank - rank_});
    }
    return from_cyclic_flats(f);
  }

  // Number of independent hyperplanes: rank-(r-1) flats of size r-1.
  int independent_hyperplane_count() const {
    if (rank_ == 0) return 0;
    int count = 0;
    for (ElemSet h : flats_of_rank(rank_ - 1))
      if (h.size() == rank_ - 1) ++count;
    return count;
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.zflats_ == b.zflats_;
  }

 private:
  Matroid() = default;

  void require_subset(ElemSet a) const {
    if (!a.subset_of(ground()))
      throw std::invalid_argument("element out of ground set: " + a.to_string());
  }

  std::vector<ElemSet> next_flat_level(const std::vector<ElemSet>& prev) const {
    std::vector<ElemSet> next;
    for (ElemSet f : prev)
      for (int e : ground() - f) {
        ElemSet g = closure(f.with(e));
        next.push_back(g);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  }

  int n_ = 0;
  int rank_ = 0;
  std::vector<RankedFlat> zflats_;
};

struct MatroidMinor {
  Matroid matroid;
  std::vector<int> elements;
};

inline MatroidMinor Matroid::minor_on_cyclic_interval(ElemSet x, ElemSet y) const {
  auto is_zflat = [&](ElemSet s) {
    for (const RankedFlat& z : zflats_)
      if (z.set == s) return true;
    return false;
  };
  if (!is_zflat(x) || !is_zflat(y) || !y.subset_of(x))
    throw std::invalid_argument("minor_on_cyclic_interval: x, y must be nested cyclic flats");

  std::vector<int> elems = (x - y).elements();
  std::map<int, int> to_new;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) to_new[elems[i]] = i;
  int ry = rank(y);

  RankedFamily f;
  f.n = static_cast<int>(elems.size());
  for (const RankedFlat& z : zflats_) {
    if (!y.subset_of(z.set) || !z.set.subset_of(x)) continue;
    ElemSet image;
    for (int e : z.set - y) image = image.with(to_new.at(e));
    f.entries.push_back({image, z.rank - ry});
  }
  return MatroidMinor{from_cyclic_flats(f), std::move(elems)};
}

}  // namespace gcat
