#pragma once

// The configuration of a matroid: the abstract lattice of its cyclic flats
// with each element labeled by the size and rank of the flat, the underlying
// sets forgotten.

#include <stdexcept>

#include "gcat/lattice.hpp"
#include "gcat/matroid.hpp"

namespace gcat {

using Configuration = LabeledLattice;

inline FiniteLattice cyclic_flat_lattice(const Matroid& m) {
  std::vector<ElemSet> sets;
  for (const RankedFlat& z : m.cyclic_flats_stored()) sets.push_back(z.set);
  return FiniteLattice::from_inclusion_family(sets);
}

inline Configuration configuration_of(const Matroid& m) {
  if (m.has_loops() || m.has_coloops())
    throw std::invalid_argument("configuration_of: matroid must have no loops or coloops");
  Configuration c;
  c.lattice = cyclic_flat_lattice(m);
  for (const RankedFlat& z : m.cyclic_flats_stored()) {
    c.size_label.push_back(z.set.size());
    c.rank_label.push_back(z.rank);
  }
  return c;
}

}  // namespace gcat
