#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixfactor/ladder/engine.hpp"
#include "fixfactor/ladder/window.hpp"

namespace fixfactor::ladder {

struct Violation {
  std::string check;
  std::string point;
  std::string detail;
};

struct AuditReport {
  std::string subject;
  unsigned family_cut = 0;
  unsigned strand_cut = 0;
  std::size_t checked_points = 0;
  std::size_t violation_count = 0;
  // The first max_recorded_violations violations.
  std::vector<Violation> violations;

  bool ok() const noexcept { return violation_count == 0; }
  void add(Violation v);
};

inline constexpr std::size_t max_recorded_violations = 32;

struct WindowCut {
  unsigned family_cut;
  unsigned strand_cut;
};

inline const std::vector<WindowCut> standard_cuts{{3, 3}, {5, 6}, {8, 8}};
// Value substituted for the generic index m in audits.
inline constexpr std::uint64_t default_audit_m = 2;

// Closure and invariance of a concrete region set on non-frontier points;
// with a source point, also agreement with the window's own aorb0.
AuditReport audit_region_set(const Window& w, const RegionSet& claimed, const std::optional<Point>& source,
                             std::string subject);
AuditReport audit_aorb0(const Window& w, const Point& x, std::uint64_t m_value = default_audit_m);

// Claimed labels for one degree. previous is empty for degree 0, whose
// approximating orbits are aorb0; otherwise aorb_succ over previous.
// Checks invariance, containment of approximating orbits in classes,
// coarsening of previous, and at degree 0 equality with the generated
// partition.
AuditReport audit_labels(const Window& w, const std::vector<std::size_t>& previous,
                         const std::vector<std::size_t>& claimed, std::string subject);
// Every successor degree of the trace plus symbolic monotonicity.
AuditReport audit_trace(const Window& w, const LadderTrace& trace);
// Window-direct aorb0 and degree-0 classes on points interior to
// consecutive windows must not depend on the window.
AuditReport audit_window_stability(const LadderSpace& space, const std::vector<WindowCut>& cuts);

// Degree-n labels claimed for the ramp: [0, w^(n+1)) merged, {top}, and the
// degree-0 classes elsewhere.
std::vector<std::size_t> ramp_claim_labels(const Window& w, unsigned n);

}  // namespace fixfactor::ladder
