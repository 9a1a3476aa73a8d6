#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fixfactor/decomposition.hpp"

namespace fixfactor {

// Intersection of the phi-invariant neighborhoods of m.
PointSet invariant_core(const FiniteSystem& sys, const PointSet& m);

// m equals the intersection of its invariant neighborhoods.
bool is_lyapunov_stable(const FiniteSystem& sys, const PointSet& m);

// m equals the sorb-closure, for the degree-d partition, of its least open
// saturated neighborhood. Degrees past the stabilization degree reuse the
// stationary partition.
bool is_stable_degree(const FiniteSystem& sys, const PointSet& m, const OrdinalCNF& d,
                      const DegreeTrace& trace);

bool is_absolutely_stable(const FiniteSystem& sys, const PointSet& m, const DegreeTrace& trace);
bool is_absolutely_stable(const FiniteSystem& sys, const PointSet& m);

struct StabilityReport {
  PointSet set;
  bool stable_plain = false;
  std::vector<std::pair<OrdinalCNF, bool>> stable_by_degree;
  bool absolutely_stable = false;
};

StabilityReport stability_report(const FiniteSystem& sys, const PointSet& m);

// Every partition of the points all of whose classes satisfy pred, in
// restricted-growth order. Throws E_SIZE beyond bound.
template <class Pred>
std::vector<Partition> enumerate_partitions_where(std::size_t n, Pred&& pred, std::size_t bound);

// Every partition whose classes are all absolutely stable.
std::vector<Partition> abs_stable_partitions(const FiniteSystem& sys, std::size_t bound = 6);

// Finest partition into absolutely stable sets (the valid partition with the
// most classes). Throws E_SIZE beyond bound.
Partition finest_abs_stable_partition(const FiniteSystem& sys, std::size_t bound = 6);

// A partition into plain-stable sets strictly finer than the oracle
// partition, if any exists.
std::optional<Partition> finer_plain_stable_witness(const FiniteSystem& sys, std::size_t bound = 6);

}  // namespace fixfactor

#include "fixfactor/detail/partition_search.hpp"
