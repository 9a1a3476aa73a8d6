#include "fixfactor/ladder/json.hpp"

#include "fixfactor/io.hpp"

namespace fixfactor::ladder {

json space_to_json(const LadderSpace& space) {
  json regions = json::array();
  for (const auto& r : space.regions()) {
    regions.push_back({{"name", r.name}, {"kind", r.kind}, {"arity", r.arity}, {"description", r.description}});
  }
  return {{"term", space.term().format()}, {"top", space.top().format()}, {"regions", std::move(regions)}};
}

json region_set_to_json(const LadderSpace& space, const RegionSet& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces()) {
    switch (p.kind) {
      case Piece::Kind::cells:
        pieces.push_back({{"kind", "cells"}, {"from", p.from.format()}, {"to", p.to.format()}});
        break;
      case Piece::Kind::point:
        pieces.push_back({{"kind", "point"}, {"at", p.from.format()},
                          {"region", space.describe(Point::fixed_at(p.from))}});
        break;
      case Piece::Kind::strand:
        pieces.push_back({{"kind", "strand"}, {"at", p.from.format()}});
        break;
      case Piece::Kind::tail:
        pieces.push_back({{"kind", "forward-tail"}, {"at", p.from.format()}, {"from_index", p.index}});
        break;
    }
  }
  return {{"text", r.format()}, {"pieces", std::move(pieces)}};
}

json sym_partition_to_json(const LadderSpace& space, const SymPartition& p) {
  json out;
  out["class_exponent"] = p.exponent() ? json(p.exponent()->format()) : json(nullptr);
  const auto count = p.class_count();
  out["class_count"] = count ? json(*count) : json("infinite");
  out["description"] = p.describe();
  json classes = json::array();
  std::vector<Point> reps{Point::fixed_at(Position{})};
  if (p.exponent() && !count) reps.push_back(Point::fixed_at(Position::omega_power(*p.exponent(), Coefficient::m())));
  if (p.exponent()) reps.push_back(Point::fixed_at(space.top()));
  for (const auto& x : reps) classes.push_back(region_set_to_json(space, p.class_region(x)));
  out["classes"] = std::move(classes);
  return out;
}

json trace_to_json(const LadderSpace& space, const LadderTrace& trace) {
  json degrees = json::array();
  for (const auto& e : trace.entries) {
    degrees.push_back({{"degree", e.degree.format()}, {"partition", sym_partition_to_json(space, e.partition)}});
  }
  return {{"term", space.term().format()},
          {"top", space.top().format()},
          {"stabilization_degree", trace.stabilization_degree.format()},
          {"degrees", std::move(degrees)}};
}

json audit_to_json(const AuditReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"check", v.check}, {"point", v.point}, {"detail", v.detail}});
  }
  return {{"subject", report.subject},
          {"family_cut", report.family_cut},
          {"strand_cut", report.strand_cut},
          {"checked_points", report.checked_points},
          {"ok", report.ok()},
          {"violation_count", report.violation_count},
          {"violations", std::move(violations)}};
}

json window_to_json(const Window& w) {
  json frontier = json::array();
  w.frontier().for_each([&](std::size_t i) { frontier.push_back(w.point(i).key()); });
  return {{"term", w.space().term().format()},
          {"family_cut", w.family_cut()},
          {"strand_cut", w.strand_cut()},
          {"point_count", w.size()},
          {"frontier", std::move(frontier)},
          {"system", io::system_to_json(w.to_system())}};
}

}  // namespace fixfactor::ladder
