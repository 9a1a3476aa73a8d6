#pragma once

#include <vector>

#include "fixfactor/ladder/sym_partition.hpp"

namespace fixfactor::ladder {

// Smallest closed invariant neighbourhood of x. Throws E_LOCATOR when x is
// not a point of the space.
RegionSet ladder_aorb0(const LadderSpace& space, const Point& x);

SymPartition degree_zero(const LadderSpace& space);
// sorb-closure of the least open P-saturated neighbourhood of x.
RegionSet ladder_aorb_succ(const LadderSpace& space, const SymPartition& previous, const Point& x);
SymPartition successor_step(const LadderSpace& space, const SymPartition& previous);
// Union of earlier classes at a limit degree.
SymPartition limit_step(const LadderSpace& space, const std::vector<SymPartition>& earlier);

struct LadderTraceEntry {
  OrdinalCNF degree;
  SymPartition partition;
};

struct LadderTrace {
  std::vector<LadderTraceEntry> entries;
  OrdinalCNF stabilization_degree;

  // Partition at degree d; past the stabilization degree this is the
  // stationary partition.
  const SymPartition& at(const OrdinalCNF& d) const;
};

struct TraceOptions {
  OrdinalCNF max_degree = OrdinalCNF::omega_power(1, 2);
  // Successor steps taken before jumping to the next limit degree.
  unsigned horizon = 64;
};

// Throws E_DEGREE_CAP when not stationary by max_degree.
LadderTrace ladder_trace(const LadderSpace& space, const TraceOptions& options = {});

}  // namespace fixfactor::ladder
