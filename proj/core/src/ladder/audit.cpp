#include "fixfactor/ladder/audit.hpp"

#include <map>
#include <set>

namespace fixfactor::ladder {

void AuditReport::add(Violation v) {
  if (++violation_count <= max_recorded_violations) violations.push_back(std::move(v));
}

namespace {

void violate(AuditReport& r, std::string check, const Point& p, std::string detail) {
  r.add({std::move(check), p.key(), std::move(detail)});
}

std::set<std::string> keys(const Window& w, const PointSet& s) {
  std::set<std::string> out;
  s.for_each([&](std::size_t i) { out.insert(w.point(i).key()); });
  return out;
}

AuditReport start(const Window& w, std::string subject) {
  AuditReport r;
  r.subject = std::move(subject);
  r.family_cut = w.family_cut();
  r.strand_cut = w.strand_cut();
  return r;
}

}  // namespace

AuditReport audit_region_set(const Window& w, const RegionSet& claimed, const std::optional<Point>& source,
                             std::string subject) {
  AuditReport r = start(w, std::move(subject));
  const PointSet members = w.region_members(claimed);
  const PointSet interior = w.interior();
  std::optional<PointSet> direct;
  if (source) {
    if (auto i = w.index_of(*source); i && !w.is_frontier(*i)) direct = w.aorb0(*i);
  }
  interior.for_each([&](std::size_t i) {
    ++r.checked_points;
    const Point& p = w.point(i);
    const bool in = members.contains(i);
    if (p.is_fixed() && !in) {
      for (std::size_t s : w.closure_witnesses(i)) {
        if (members.contains(s)) {
          violate(r, "closure", p, "missing although " + w.point(s).key() + " is present");
          break;
        }
      }
    }
    if (in) {
      if (auto img = w.image(i); img && !members.contains(*img)) {
        violate(r, "invariance", p, "image " + w.point(*img).key() + " is missing");
      }
    }
    if (direct && direct->contains(i) != in) {
      violate(r, "aorb0-agreement", p, in ? "not in the window aorb0" : "in the window aorb0 only");
    }
  });
  return r;
}

AuditReport audit_aorb0(const Window& w, const Point& x, std::uint64_t m_value) {
  const Point bound = x.bind(m_value);
  const RegionSet claimed = ladder_aorb0(w.space(), x).bind(m_value);
  return audit_region_set(w, claimed, bound, "aorb0(" + w.space().describe(x) + ")");
}

AuditReport audit_labels(const Window& w, const std::vector<std::size_t>& previous,
                         const std::vector<std::size_t>& claimed, std::string subject) {
  AuditReport r = start(w, std::move(subject));
  const PointSet interior = w.interior();
  std::vector<PointSet> generators;
  interior.for_each([&](std::size_t i) {
    ++r.checked_points;
    const Point& p = w.point(i);
    if (auto img = w.image(i); img && claimed[*img] != claimed[i]) {
      violate(r, "invariance", p, "image " + w.point(*img).key() + " lies in another class");
    }
    PointSet g = (previous.empty() ? w.aorb0(i) : w.aorb_succ(previous, i)) & interior;
    g.for_each([&](std::size_t y) {
      if (claimed[y] != claimed[i]) {
        violate(r, "containment", p, "approximating orbit reaches " + w.point(y).key() + " in another class");
      }
    });
    generators.push_back(std::move(g));
  });
  // Degree-0 classes are chains of successor links, all visible on
  // interior points, so the generated partition must match exactly. Higher
  // degrees link classes through limit points whose approach zones the
  // window may cut off; there only containment is a sound check.
  if (previous.empty()) {
    const auto generated = generated_labels(w.size(), generators);
    std::map<std::size_t, std::size_t> gen_to_claim;
    std::map<std::size_t, std::size_t> claim_to_gen;
    interior.for_each([&](std::size_t i) {
      auto [a, fresh_a] = gen_to_claim.emplace(generated[i], claimed[i]);
      auto [b, fresh_b] = claim_to_gen.emplace(claimed[i], generated[i]);
      if (a->second != claimed[i]) violate(r, "generated-partition", w.point(i), "generated class spans two claimed classes");
      if (b->second != generated[i]) violate(r, "generated-partition", w.point(i), "claimed class splits into generated classes");
    });
  }
  if (!previous.empty()) {
    std::map<std::size_t, std::size_t> prev_to_claim;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto [it, fresh] = prev_to_claim.emplace(previous[i], claimed[i]);
      if (it->second != claimed[i]) violate(r, "monotonicity", w.point(i), "previous class is split");
    }
  }
  return r;
}

AuditReport audit_trace(const Window& w, const LadderTrace& trace) {
  AuditReport r = start(w, "trace(" + w.space().term().format() + ")");
  std::vector<std::size_t> previous;
  for (std::size_t d = 0; d < trace.entries.size(); ++d) {
    const auto& e = trace.entries[d];
    const auto labels = w.labels(e.partition);
    if (d > 0 && !trace.entries[d - 1].partition.refines(e.partition)) {
      r.add({"monotonicity", "degree " + e.degree.format(), "symbolic partition is finer"});
    }
    // Limit degrees are unions of earlier classes; only successor degrees
    // and degree 0 have a window-direct recomputation.
    if (d == 0 || e.degree.is_successor()) {
      auto sub = audit_labels(w, d == 0 ? std::vector<std::size_t>{} : previous, labels,
                              "degree " + e.degree.format());
      r.checked_points += sub.checked_points;
      for (auto& v : sub.violations) {
        v.detail = "degree " + e.degree.format() + ": " + v.detail;
        r.add(std::move(v));
      }
      r.violation_count += sub.violation_count - sub.violations.size();
    }
    previous = labels;
  }
  return r;
}

AuditReport audit_window_stability(const LadderSpace& space, const std::vector<WindowCut>& cuts) {
  AuditReport r;
  r.subject = "window stability(" + space.term().format() + ")";
  std::vector<Window> windows;
  for (const auto& c : cuts) windows.push_back(Window::build(space, c.family_cut, c.strand_cut));
  const auto degree_zero_classes = [](const Window& w) {
    const PointSet interior = w.interior();
    std::vector<PointSet> sets;
    interior.for_each([&](std::size_t i) { sets.push_back(w.aorb0(i) & interior); });
    return generated_labels(w.size(), sets);
  };
  for (std::size_t k = 0; k + 1 < windows.size(); ++k) {
    const Window& a = windows[k];
    const Window& b = windows[k + 1];
    r.family_cut = b.family_cut();
    r.strand_cut = b.strand_cut();
    std::set<std::string> common;
    const PointSet a_in = a.interior();
    a_in.for_each([&](std::size_t i) {
      if (auto j = b.index_of(a.point(i)); j && !b.is_frontier(*j)) common.insert(a.point(i).key());
    });
    const auto restrict = [&](const std::set<std::string>& s) {
      std::set<std::string> out;
      for (const auto& key : s) {
        if (common.count(key) != 0) out.insert(key);
      }
      return out;
    };
    const auto ga = degree_zero_classes(a);
    const auto gb = degree_zero_classes(b);
    std::map<std::size_t, std::size_t> a_to_b;
    std::map<std::size_t, std::size_t> b_to_a;
    a_in.for_each([&](std::size_t i) {
      const Point& p = a.point(i);
      if (common.count(p.key()) == 0) return;
      ++r.checked_points;
      const std::size_t j = *b.index_of(p);
      if (restrict(keys(a, a.aorb0(i))) != restrict(keys(b, b.aorb0(j)))) {
        violate(r, "window-stability", p, "aorb0 differs between windows");
      }
      const auto [x, fresh_x] = a_to_b.emplace(ga[i], gb[j]);
      const auto [y, fresh_y] = b_to_a.emplace(gb[j], ga[i]);
      if (x->second != gb[j] || y->second != ga[i]) {
        violate(r, "window-stability", p, "degree-0 classes differ between windows");
      }
    });
  }
  return r;
}

std::vector<std::size_t> ramp_claim_labels(const Window& w, unsigned n) {
  const Position bound = Position::omega_power(OrdinalCNF::finite(n + 1));
  const SymPartition base = SymPartition::blocks(w.space(), OrdinalCNF::finite(1));
  std::map<Position, std::size_t> ids{{Position{}, 0}};
  std::vector<std::size_t> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Position& b = w.point(i).position;
    const Position key = b < bound ? Position{} : base.class_start(b);
    out[i] = ids.emplace(key, ids.size()).first->second;
  }
  return out;
}

}  // namespace fixfactor::ladder
