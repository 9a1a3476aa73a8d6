#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fixfactor/ordinal.hpp"
#include "fixfactor/partition.hpp"
#include "fixfactor/topology.hpp"

namespace fixfactor {

// Forward orbit of s: the least phi-invariant superset.
PointSet forward_orbit(const FiniteSystem& sys, const PointSet& s);

// Least closed phi-invariant neighborhood of x: cl(orbit(U_x)).
PointSet aorb0(const FiniteSystem& sys, std::size_t x);

// Equivalence generated by the overlaps of cover[x], where x must lie in cover[x].
// Throws E_COVER otherwise.
Partition generated_partition(std::size_t universe, std::span<const PointSet> cover);

Partition sorb0_partition(const FiniteSystem& sys);

// Least open P-saturated set containing seed.
PointSet min_saturated_open_nbhd(const FiniteSystem& sys, const Partition& p, const PointSet& seed);
PointSet min_saturated_open_nbhd(const FiniteSystem& sys, const Partition& p, std::size_t x);

// Least closed P-saturated superset of u.
PointSet sorb_closure(const FiniteSystem& sys, const Partition& p, const PointSet& u);

// Successor-degree approximating orbit relative to the previous partition p.
PointSet aorb_succ(const FiniteSystem& sys, const Partition& p, std::size_t x);

enum class ReferenceMode { base, succ };

// Definition-direct intersection by enumerating all subsets. succ mode needs p.
// Throws E_SIZE when the space exceeds bound.
PointSet reference_intersection(const FiniteSystem& sys, ReferenceMode mode, std::size_t x,
                                const Partition* p = nullptr, std::size_t bound = 12);

Partition degree_step(const FiniteSystem& sys, const Partition& p);

struct TraceEntry {
  OrdinalCNF degree;
  Partition partition;
};

// Superorbit partitions by degree. The final two entries are equal; the
// earlier of them sits at the stabilization degree.
struct DegreeTrace {
  std::vector<TraceEntry> entries;
  OrdinalCNF stabilization_degree;

  const Partition& stationary() const { return entries.back().partition; }
  // Partition of degree d; constant from the stabilization degree on.
  const Partition& at(const OrdinalCNF& d) const;
};

DegreeTrace stabilize(const FiniteSystem& sys);

struct QuotientResult {
  FiniteSystem quotient;
  std::vector<std::size_t> projection;
};

// Throws E_INVARIANCE when some class is not phi-invariant.
QuotientResult quotient(const FiniteSystem& sys, const Partition& p);

// Equivalence generated by comparability and x ~ phi(x): the maximal level
// sets of the Koopman fixed space.
Partition oracle_partition(const FiniteSystem& sys);
std::size_t fixed_space_dimension(const FiniteSystem& sys);
bool is_topologically_ergodic(const FiniteSystem& sys);

PointSet prolongation_d1(const FiniteSystem& sys, std::size_t x);
PointSet prolongation_d2(const FiniteSystem& sys, std::size_t x);

}  // namespace fixfactor
