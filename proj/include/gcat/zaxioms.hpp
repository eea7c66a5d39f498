#pragma once

// Ranked set families and the (Z0)-(Z3) axioms a family must satisfy to be
// the collection of cyclic flats of a matroid:
//   (Z0) the family ordered by inclusion is a lattice,
//   (Z1) the least set has rank 0,
//   (Z2) 0 < r(Y) - r(X) < |Y - X| for nested pairs X < Y,
//   (Z3) r(X v Y) + r(X ^ Y) + |(X n Y) - (X ^ Y)| <= r(X) + r(Y).
// Violations are reported with witnesses rather than thrown, so callers can
// show which axiom fails and on which sets.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcat/sets.hpp"

namespace gcat {

struct RankedFlat {
  ElemSet set;
  int rank = 0;

  friend bool operator==(const RankedFlat& a, const RankedFlat& b) {
    return a.set == b.set && a.rank == b.rank;
  }
  friend bool operator<(const RankedFlat& a, const RankedFlat& b) {
    if (a.set != b.set) return a.set < b.set;
    return a.rank < b.rank;
  }
};

struct RankedFamily {
  int n = 0;
  std::vector<RankedFlat> entries;
};

struct ZViolation {
  enum class Kind { Input, Z0, Z1, Z2, Z3 };
  Kind kind = Kind::Input;
  std::string message;
  // Witness sets/ranks; which fields are meaningful depends on the kind.
  ElemSet x, y, meet, join;
  int rx = -1, ry = -1, rmeet = -1, rjoin = -1;

  std::string axiom_name() const {
    switch (kind) {
      case Kind::Input: return "input";
      case Kind::Z0: return "Z0";
      case Kind::Z1: return "Z1";
      case Kind::Z2: return "Z2";
      case Kind::Z3: return "Z3";
    }
    return "?";
  }
};

struct ZReport {
  bool ok = true;
  std::optional<ZViolation> violation;

  explicit operator bool() const { return ok; }
  std::string to_string() const {
    if (ok) return "pass";
    return violation->axiom_name() + " violation: " + violation->message;
  }
};

class z_validation_error : public std::runtime_error {
 public:
  explicit z_validation_error(const ZReport& report)
      : std::runtime_error(report.to_string()), report_(report) {}
  const ZReport& report() const { return report_; }

 private:
  ZReport report_;
};

namespace detail {

inline ZReport fail(ZViolation v) { return ZReport{false, std::move(v)}; }

}  // namespace detail

// Rank induced on an arbitrary subset by a ranked family:
//   r(A) = min(|A|, min over entries (rank + |A - set|)).
inline int rank_from_family(const RankedFamily& f, ElemSet a) {
  int best = a.size();
  for (const RankedFlat& z : f.entries) {
    int v = z.rank + (a - z.set).size();
    if (v < best) best = v;
  }
  return best;
}

// Meet/join structure of a family under inclusion, as index tables.
// meet[i][j] / join[i][j] are entry indices, or -1 when no unique bound
// exists (which is exactly a Z0 failure for that pair).
struct FamilyLattice {
  std::vector<std::vector<int>> meet, join;
  int bottom = -1, top = -1;
};

inline FamilyLattice family_lattice(const std::vector<RankedFlat>& entries) {
  const int m = static_cast<int>(entries.size());
  FamilyLattice fl;
  fl.meet.assign(m, std::vector<int>(m, -1));
  fl.join.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int glb = -1;
      int lub = -1;
      for (int k = 0; k < m; ++k) {
        if (entries[k].set.subset_of(entries[i].set) && entries[k].set.subset_of(entries[j].set)) {
          if (glb == -1 || entries[glb].set.subset_of(entries[k].set)) glb = k;
        }
        if (entries[i].set.subset_of(entries[k].set) && entries[j].set.subset_of(entries[k].set)) {
          if (lub == -1 || entries[k].set.subset_of(entries[lub].set)) lub = k;
        }
      }
      // verify glb/lub really bound every candidate
      if (glb != -1) {
        for (int k = 0; k < m; ++k) {
          if (entries[k].set.subset_of(entries[i].set) &&
              entries[k].set.subset_of(entries[j].set) &&
              !entries[k].set.subset_of(entries[glb].set)) {
            glb = -1;
            break;
          }
        }
      }
      if (lub != -1) {
        for (int k = 0; k < m; ++k) {
          if (entries[i].set.subset_of(entries[k].set) &&
              entries[j].set.subset_of(entries[k].set) &&
              !entries[lub].set.subset_of(entries[k].set)) {
            lub = -1;
            break;
          }
        }
      }
      fl.meet[i][j] = glb;
      fl.join[i][j] = lub;
    }
  }
  for (int i = 0; i < m; ++i) {
    bool least = true, greatest = true;
    for (int j = 0; j < m; ++j) {
      least &= entries[i].set.subset_of(entries[j].set);
      greatest &= entries[j].set.subset_of(entries[i].set);
    }
    if (least) fl.bottom = i;
    if (greatest) fl.top = i;
  }
  return fl;
}

// Checks (Z0)-(Z3) plus basic input sanity (elements in range, distinct sets,
// nonnegative ranks).  Returns pass or the first violated axiom with
// witnesses; never throws on axiom failure.
inline ZReport validate_z_axioms(const RankedFamily& f) {
  using Kind = ZViolation::Kind;
  if (f.n < 0 || f.n > kMaxElements)
    return detail::fail({Kind::Input, "ground-set size out of range", {}, {}, {}, {}});
  const ElemSet ground = ElemSet::full(f.n);
  for (const RankedFlat& z : f.entries) {
    if (!z.set.subset_of(ground)) {
      ZViolation v{Kind::Input, "set " + z.set.to_string() + " not within ground set of size " +
                                    std::to_string(f.n)};
      v.x = z.set;
      return detail::fail(v);
    }
    if (z.rank < 0) {
      ZViolation v{Kind::Input, "negative rank on " + z.set.to_string()};
      v.x = z.set;
      v.rx = z.rank;
      return detail::fail(v);
    }
  }
  const int m = static_cast<int>(f.entries.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (f.entries[i].set == f.entries[j].set) {
        ZViolation v{Kind::Input, "duplicate set " + f.entries[i].set.to_string()};
        v.x = f.entries[i].set;
        return detail::fail(v);
      }
  if (m == 0) return detail::fail({Kind::Z0, "empty family is not a lattice"});

  FamilyLattice fl = family_lattice(f.entries);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (fl.meet[i][j] == -1 || fl.join[i][j] == -1) {
        ZViolation v{Kind::Z0, std::string("pair has no unique ") +
                                   (fl.meet[i][j] == -1 ? "meet" : "join") + ": " +
                                   f.entries[i].set.to_string() + ", " +
                                   f.entries[j].set.to_string()};
        v.x = f.entries[i].set;
        v.y = f.entries[j].set;
        return detail::fail(v);
      }
    }

  if (f.entries[fl.bottom].rank != 0) {
    ZViolation v{Kind::Z1, "least set " + f.entries[fl.bottom].set.to_string() + " has rank " +
                               std::to_string(f.entries[fl.bottom].rank)};
    v.x = f.entries[fl.bottom].set;
    v.rx = f.entries[fl.bottom].rank;
    return detail::fail(v);
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const RankedFlat& x = f.entries[i];
      const RankedFlat& y = f.entries[j];
      if (x.set == y.set || !x.set.subset_of(y.set)) continue;
      int dr = y.rank - x.rank;
      int ds = (y.set - x.set).size();
      if (dr <= 0 || dr >= ds) {
        ZViolation v{Kind::Z2, "need 0 < r(Y)-r(X) < |Y-X| but got r(Y)-r(X)=" +
                                   std::to_string(dr) + ", |Y-X|=" + std::to_string(ds) +
                                   " for X=" + x.set.to_string() + ", Y=" + y.set.to_string()};
        v.x = x.set;
        v.y = y.set;
        v.rx = x.rank;
        v.ry = y.rank;
        return detail::fail(v);
      }
    }

  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const RankedFlat& x = f.entries[i];
      const RankedFlat& y = f.entries[j];
      const RankedFlat& mt = f.entries[fl.meet[i][j]];
      const RankedFlat& jn = f.entries[fl.join[i][j]];
      int lhs = jn.rank + mt.rank + ((x.set & y.set) - mt.set).size();
      if (lhs > x.rank + y.rank) {
        ZViolation v{Kind::Z3, "r(XvY)+r(X^Y)+|(XnY)-(X^Y)| = " + std::to_string(lhs) +
                                   " > r(X)+r(Y) = " + std::to_string(x.rank + y.rank) +
                                   " for X=" + x.set.to_string() + ", Y=" + y.set.to_string()};
        v.x = x.set;
        v.y = y.set;
        v.meet = mt.set;
        v.join = jn.set;
        v.rx = x.rank;
        v.ry = y.rank;
        v.rmeet = mt.rank;
        v.rjoin = jn.rank;
        return detail::fail(v);
      }
    }

  return ZReport{};
}

}  // namespace gcat
