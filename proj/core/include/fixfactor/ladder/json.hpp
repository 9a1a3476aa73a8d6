#pragma once

#include <nlohmann/json.hpp>

#include "fixfactor/ladder/audit.hpp"

namespace fixfactor::ladder {

using nlohmann::json;

json space_to_json(const LadderSpace& space);
json region_set_to_json(const LadderSpace& space, const RegionSet& r);
json sym_partition_to_json(const LadderSpace& space, const SymPartition& p);
json trace_to_json(const LadderSpace& space, const LadderTrace& trace);
json audit_to_json(const AuditReport& report);
// Window metadata with the finite system (discrete topology, truncated
// map) under "system".
json window_to_json(const Window& w);

}  // namespace fixfactor::ladder
