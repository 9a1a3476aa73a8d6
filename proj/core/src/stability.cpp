#include "fixfactor/stability.hpp"

namespace fixfactor {

PointSet invariant_core(const FiniteSystem& sys, const PointSet& m) {
  return forward_orbit(sys, sys.space.open_hull(m));
}

bool is_lyapunov_stable(const FiniteSystem& sys, const PointSet& m) { return invariant_core(sys, m) == m; }

bool is_stable_degree(const FiniteSystem& sys, const PointSet& m, const OrdinalCNF& d,
                      const DegreeTrace& trace) {
  const Partition& p = trace.at(d);
  return sorb_closure(sys, p, min_saturated_open_nbhd(sys, p, m)) == m;
}

bool is_absolutely_stable(const FiniteSystem& sys, const PointSet& m, const DegreeTrace& trace) {
  if (!is_lyapunov_stable(sys, m)) return false;
  for (const auto& e : trace.entries) {
    if (!is_stable_degree(sys, m, e.degree, trace)) return false;
  }
  return true;
}

bool is_absolutely_stable(const FiniteSystem& sys, const PointSet& m) {
  return is_absolutely_stable(sys, m, stabilize(sys));
}

StabilityReport stability_report(const FiniteSystem& sys, const PointSet& m) {
  const DegreeTrace trace = stabilize(sys);
  StabilityReport report;
  report.set = m;
  report.stable_plain = is_lyapunov_stable(sys, m);
  bool all = report.stable_plain;
  for (const auto& e : trace.entries) {
    if (e.degree > trace.stabilization_degree) break;
    const bool s = is_stable_degree(sys, m, e.degree, trace);
    report.stable_by_degree.emplace_back(e.degree, s);
    all = all && s;
  }
  report.absolutely_stable = all;
  return report;
}

namespace {

// Valid partition with the most classes.
Partition finest_of(const std::vector<Partition>& candidates, std::size_t n) {
  if (candidates.empty()) return Partition::single(n);
  const Partition* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.class_count() > best->class_count()) best = &c;
  }
  return *best;
}

}  // namespace

std::vector<Partition> abs_stable_partitions(const FiniteSystem& sys, std::size_t bound) {
  const DegreeTrace trace = stabilize(sys);
  return enumerate_partitions_where(
      sys.size(), [&](const PointSet& block) { return is_absolutely_stable(sys, block, trace); }, bound);
}

Partition finest_abs_stable_partition(const FiniteSystem& sys, std::size_t bound) {
  return finest_of(abs_stable_partitions(sys, bound), sys.size());
}

std::optional<Partition> finer_plain_stable_witness(const FiniteSystem& sys, std::size_t bound) {
  const Partition oracle = oracle_partition(sys);
  auto all = enumerate_partitions_where(
      sys.size(), [&](const PointSet& block) { return is_lyapunov_stable(sys, block); }, bound);
  for (auto& p : all) {
    if (p.refines(oracle) && p.class_count() > oracle.class_count()) return std::move(p);
  }
  return std::nullopt;
}

}  // namespace fixfactor
