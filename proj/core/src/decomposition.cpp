#include "fixfactor/decomposition.hpp"

#include <algorithm>
#include <string>

#include "fixfactor/errors.hpp"

namespace fixfactor {

PointSet forward_orbit(const FiniteSystem& sys, const PointSet& s) {
  PointSet out = s;
  std::vector<std::size_t> stack = s.members();
  while (!stack.empty()) {
    const std::size_t y = sys.map(stack.back());
    stack.pop_back();
    if (!out.contains(y)) {
      out.insert(y);
      stack.push_back(y);
    }
  }
  return out;
}

PointSet aorb0(const FiniteSystem& sys, std::size_t x) {
  return sys.space.closure(forward_orbit(sys, sys.space.minimal_open(x)));
}

Partition generated_partition(std::size_t universe, std::span<const PointSet> cover) {
  if (cover.size() != universe) throw Error(ErrorCode::cover, "cover must have one set per point");
  UnionFind uf(universe);
  for (std::size_t x = 0; x < universe; ++x) {
    if (!cover[x].contains(x)) {
      throw Error(ErrorCode::cover, "point " + std::to_string(x) + " is not in its own cover set");
    }
    cover[x].for_each([&](std::size_t y) { uf.unite(x, y); });
  }
  return Partition::from_union_find(universe, uf);
}

Partition sorb0_partition(const FiniteSystem& sys) {
  std::vector<PointSet> cover;
  cover.reserve(sys.size());
  for (std::size_t x = 0; x < sys.size(); ++x) cover.push_back(aorb0(sys, x));
  return generated_partition(sys.size(), cover);
}

PointSet min_saturated_open_nbhd(const FiniteSystem& sys, const Partition& p, const PointSet& seed) {
  PointSet s = seed;
  while (true) {
    PointSet next = p.saturate(sys.space.open_hull(s));
    if (next == s) return s;
    s = std::move(next);
  }
}

PointSet min_saturated_open_nbhd(const FiniteSystem& sys, const Partition& p, std::size_t x) {
  return min_saturated_open_nbhd(sys, p, sys.space.singleton(x));
}

PointSet sorb_closure(const FiniteSystem& sys, const Partition& p, const PointSet& u) {
  PointSet s = u;
  while (true) {
    PointSet next = p.saturate(sys.space.closure(s));
    if (next == s) return s;
    s = std::move(next);
  }
}

PointSet aorb_succ(const FiniteSystem& sys, const Partition& p, std::size_t x) {
  return sorb_closure(sys, p, min_saturated_open_nbhd(sys, p, x));
}

PointSet reference_intersection(const FiniteSystem& sys, ReferenceMode mode, std::size_t x,
                                const Partition* p, std::size_t bound) {
  const std::size_t n = sys.size();
  if (n > bound || n > 20) {
    throw Error(ErrorCode::size, std::to_string(n) + " points exceed the enumeration bound " +
                                     std::to_string(std::min<std::size_t>(bound, 20)));
  }
  if (mode == ReferenceMode::succ && p == nullptr) {
    throw Error(ErrorCode::usage, "succ mode needs a partition");
  }
  const auto& space = sys.space;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  auto as_set = [&](std::uint64_t mask) { return PointSet::from_mask(n, mask); };
  // Membership tests spelled out from the definitions, independent of the
  // closure/hull helpers used by the optimized path.
  auto is_down_set = [&](std::uint64_t m) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (((m >> b) & 1U) && !((m >> a) & 1U) && space.specializes(a, b)) return false;
    return true;
  };
  auto is_up_set = [&](std::uint64_t m) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (((m >> a) & 1U) && !((m >> b) & 1U) && space.specializes(a, b)) return false;
    return true;
  };
  auto is_invariant = [&](std::uint64_t m) {
    for (std::size_t a = 0; a < n; ++a)
      if (((m >> a) & 1U) && !((m >> sys.map(a)) & 1U)) return false;
    return true;
  };
  auto is_saturated = [&](std::uint64_t m) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (((m >> a) & 1U) && !((m >> b) & 1U) && p->class_of(a) == p->class_of(b)) return false;
    return true;
  };
  // A neighborhood of x contains an open set containing x.
  auto is_neighborhood = [&](std::uint64_t m) {
    for (std::uint64_t open = 0; open < subsets; ++open)
      if ((open & ~m) == 0 && ((open >> x) & 1U) && is_up_set(open)) return true;
    return false;
  };

  std::uint64_t result = subsets - 1;
  if (mode == ReferenceMode::base) {
    for (std::uint64_t m = 0; m < subsets; ++m) {
      if (is_down_set(m) && is_invariant(m) && is_neighborhood(m)) result &= m;
    }
    return as_set(result);
  }

  std::vector<std::uint64_t> closed_saturated;
  for (std::uint64_t m = 0; m < subsets; ++m) {
    if (is_down_set(m) && is_saturated(m)) closed_saturated.push_back(m);
  }
  for (std::uint64_t u = 0; u < subsets; ++u) {
    if (!((u >> x) & 1U) || !is_up_set(u) || !is_saturated(u)) continue;
    std::uint64_t hull = subsets - 1;
    for (auto f : closed_saturated) {
      if ((u & ~f) == 0) hull &= f;
    }
    result &= hull;
  }
  return as_set(result);
}

Partition degree_step(const FiniteSystem& sys, const Partition& p) {
  std::vector<PointSet> cover;
  cover.reserve(sys.size());
  for (std::size_t x = 0; x < sys.size(); ++x) cover.push_back(aorb_succ(sys, p, x));
  return generated_partition(sys.size(), cover);
}

const Partition& DegreeTrace::at(const OrdinalCNF& d) const {
  for (const auto& e : entries) {
    if (e.degree == d) return e.partition;
  }
  return stationary();
}

DegreeTrace stabilize(const FiniteSystem& sys) {
  DegreeTrace trace;
  OrdinalCNF degree;
  trace.entries.push_back({degree, sorb0_partition(sys)});
  while (true) {
    Partition next = degree_step(sys, trace.entries.back().partition);
    const bool stationary = next == trace.entries.back().partition;
    trace.entries.push_back({degree.successor(), std::move(next)});
    if (stationary) {
      trace.stabilization_degree = degree;
      return trace;
    }
    degree = degree.successor();
  }
}

QuotientResult quotient(const FiniteSystem& sys, const Partition& p) {
  const std::size_t n = sys.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (p.class_of(sys.map(x)) != p.class_of(x)) {
      throw Error(ErrorCode::invariance,
                  "class of '" + sys.space.name(x) + "' is not mapped into itself");
    }
  }
  const std::size_t k = p.class_count();
  std::vector<std::string> names;
  names.reserve(k);
  for (const auto& cls : p.classes()) {
    std::string name = "[";
    bool first = true;
    cls.for_each([&](std::size_t x) {
      if (!first) name += ',';
      name += sys.space.name(x);
      first = false;
    });
    names.push_back(name + "]");
  }
  std::vector<FiniteSpace::NamePair> pairs;
  for (auto [x, y] : sys.space.relation_pairs()) {
    if (p.class_of(x) != p.class_of(y)) pairs.emplace_back(names[p.class_of(x)], names[p.class_of(y)]);
  }
  FiniteSpace space = FiniteSpace::build(names, pairs);
  std::vector<std::size_t> images(k);
  for (std::size_t c = 0; c < k; ++c) images[c] = p.class_of(sys.map(p.members(c).first()));
  std::vector<std::size_t> projection(n);
  for (std::size_t x = 0; x < n; ++x) projection[x] = p.class_of(x);
  return {make_system(std::move(space), std::move(images)), std::move(projection)};
}

Partition oracle_partition(const FiniteSystem& sys) {
  UnionFind uf(sys.size());
  for (auto [x, y] : sys.space.relation_pairs()) uf.unite(x, y);
  for (std::size_t x = 0; x < sys.size(); ++x) uf.unite(x, sys.map(x));
  return Partition::from_union_find(sys.size(), uf);
}

std::size_t fixed_space_dimension(const FiniteSystem& sys) { return oracle_partition(sys).class_count(); }

bool is_topologically_ergodic(const FiniteSystem& sys) {
  return stabilize(sys).stationary().class_count() == 1;
}

PointSet prolongation_d1(const FiniteSystem& sys, std::size_t x) {
  return sys.space.closure(forward_orbit(sys, sys.space.minimal_open(x)));
}

PointSet prolongation_d2(const FiniteSystem& sys, std::size_t x) {
  // U_x is the least neighborhood and the construction is monotone in U.
  // On a set S the first prolongation acts as cl(orbit(S)).
  PointSet acc = sys.space.minimal_open(x);
  PointSet layer = acc;
  while (true) {
    layer = sys.space.closure(forward_orbit(sys, layer));
    PointSet next = acc | layer;
    if (next == acc) break;
    acc = std::move(next);
  }
  return sys.space.closure(acc);
}

}  // namespace fixfactor
