#include "fixfactor/ladder/window.hpp"

#include <algorithm>

#include "fixfactor/partition.hpp"

namespace fixfactor::ladder {

std::vector<Position> window_positions(const LadderSpace& space, unsigned max_weight) {
  const auto exponents = ordinals_below(space.top_exponent(), max_weight);
  std::vector<Position> out;
  std::vector<Position::Term> terms;
  auto recurse = [&](auto&& self, std::uint64_t budget, std::size_t exponent_cap) -> void {
    out.push_back(Position::from_terms(terms));
    for (std::size_t e = 0; e < exponent_cap; ++e) {
      const std::uint64_t ew = ordinal_weight(exponents[e]);
      for (std::uint64_t c = 1; c + ew <= budget; ++c) {
        terms.push_back({exponents[e], Coefficient::concrete(static_cast<std::int64_t>(c))});
        self(self, budget - c - ew, e);
        terms.pop_back();
      }
    }
  };
  recurse(recurse, max_weight, exponents.size());
  out.push_back(space.top());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Window Window::build(const LadderSpace& space, unsigned family_cut, unsigned strand_cut) {
  Window w;
  w.space_ = space;
  w.family_cut_ = family_cut;
  w.strand_cut_ = strand_cut;
  const auto J = static_cast<std::int64_t>(strand_cut);
  const auto positions = window_positions(space, family_cut);
  for (const auto& b : positions) {
    w.fixed_index_.emplace(b, w.points_.size());
    w.points_.push_back(Point::fixed_at(b));
    if (b == space.top()) continue;
    for (std::int64_t j = -J; j <= J; ++j) w.points_.push_back(Point::strand_at(b, j));
  }
  const std::size_t n = w.points_.size();
  w.frontier_ = PointSet(n);
  w.neighbourhoods_.assign(n, PointSet(n));
  w.witnesses_.assign(n, {});
  w.witnessed_by_.assign(n, {});

  const auto strand = [&](const Position& b, std::int64_t j) { return w.fixed_index_.at(b) + 1 + (j + J); };
  const auto cell_members = [&](const Position& b, auto&& f) {
    const std::size_t first = w.fixed_index_.at(b);
    f(first);
    if (b != space.top()) {
      for (std::size_t k = 0; k < 2 * strand_cut + 1; ++k) f(first + 1 + k);
    }
  };

  for (const auto& b : positions) {
    if (b == space.top()) continue;
    w.frontier_.insert(strand(b, -J));
    w.frontier_.insert(strand(b, J));
    if (w.fixed_index_.count(b.successor()) == 0) cell_members(b, [&](std::size_t i) { w.frontier_.insert(i); });
  }

  for (std::size_t i = 0; i < n; ++i) {
    w.neighbourhoods_[i].insert(i);
    const Point& p = w.points_[i];
    if (!p.is_fixed()) continue;
    const Position& g = p.position;
    std::vector<std::size_t>& wit = w.witnesses_[i];
    if (g != space.top()) {
      wit.push_back(strand(g, J));
    }
    if (g.is_successor()) {
      const Position pred = *g.predecessor();
      if (w.fixed_index_.count(pred) != 0) wit.push_back(strand(pred, -J));
    }
    if (g.is_limit()) {
      // Approach zone: cells from the last fundamental-sequence element
      // inside the window up to g.
      std::optional<Position> start;
      for (std::uint64_t k = 1; k <= family_cut + 1; ++k) {
        const Position f = g.fundamental(k);
        if (w.fixed_index_.count(f) != 0) start = f;
      }
      if (start) {
        for (auto it = w.fixed_index_.find(*start); it != w.fixed_index_.end() && it->first < g; ++it) {
          cell_members(it->first, [&](std::size_t m) {
            w.neighbourhoods_[i].insert(m);
            w.frontier_.insert(m);
            if (!w.points_[m].is_fixed()) wit.push_back(m);
          });
        }
      }
    }
    for (std::size_t s : wit) {
      w.neighbourhoods_[i].insert(s);
      w.witnessed_by_[s].push_back(i);
    }
  }
  return w;
}

std::optional<std::size_t> Window::index_of(const Point& p) const {
  auto it = fixed_index_.find(p.position);
  if (it == fixed_index_.end()) return std::nullopt;
  if (p.is_fixed()) return it->second;
  const auto J = static_cast<std::int64_t>(strand_cut_);
  if (p.position == space_.top() || p.index < -J || p.index > J) return std::nullopt;
  return it->second + 1 + static_cast<std::size_t>(p.index + J);
}

std::optional<std::size_t> Window::image(std::size_t i) const {
  const Point& p = points_[i];
  if (p.is_fixed()) return i;
  if (p.index == static_cast<std::int64_t>(strand_cut_)) return std::nullopt;
  return i + 1;
}

std::size_t Window::truncated_image(std::size_t i) const {
  if (auto j = image(i)) return *j;
  return fixed_index_.at(points_[i].position);
}

PointSet Window::closure(const PointSet& s) const {
  PointSet out = s;
  s.for_each([&](std::size_t y) {
    for (std::size_t p : witnessed_by_[y]) out.insert(p);
  });
  return out;
}

PointSet Window::open_hull(const PointSet& s) const {
  PointSet out = s;
  std::vector<std::size_t> stack = s.members();
  while (!stack.empty()) {
    const std::size_t y = stack.back();
    stack.pop_back();
    neighbourhoods_[y].for_each([&](std::size_t z) {
      if (!out.contains(z)) {
        out.insert(z);
        stack.push_back(z);
      }
    });
  }
  return out;
}

PointSet Window::forward_orbit(const PointSet& s) const {
  PointSet out = s;
  s.for_each([&](std::size_t y) {
    std::size_t cur = y;
    while (true) {
      const std::size_t next = truncated_image(cur);
      if (next == cur || out.contains(next)) break;
      out.insert(next);
      cur = next;
    }
  });
  return out;
}

PointSet Window::saturate(const PointSet& s, const std::vector<std::size_t>& labels) const {
  std::vector<char> hit(points_.size(), 0);
  s.for_each([&](std::size_t y) { hit[labels[y]] = 1; });
  PointSet out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (hit[labels[i]]) out.insert(i);
  }
  return out;
}

PointSet Window::aorb0(std::size_t i) const { return closure(forward_orbit(neighbourhoods_[i])); }

PointSet Window::aorb_succ(const std::vector<std::size_t>& labels, std::size_t i) const {
  PointSet u = neighbourhoods_[i];
  while (true) {
    PointSet next = saturate(open_hull(u), labels);
    if (next == u) break;
    u = std::move(next);
  }
  while (true) {
    PointSet next = saturate(closure(u), labels);
    if (next == u) break;
    u = std::move(next);
  }
  return u;
}

std::vector<std::size_t> Window::labels(const SymPartition& p) const {
  std::map<Position, std::size_t> ids;
  std::vector<std::size_t> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto [it, fresh] = ids.emplace(p.class_start(points_[i]), ids.size());
    out[i] = it->second;
  }
  return out;
}

PointSet Window::region_members(const RegionSet& r) const {
  PointSet out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (r.contains(points_[i])) out.insert(i);
  }
  return out;
}

FiniteSystem Window::to_system() const {
  std::vector<std::string> names;
  names.reserve(points_.size());
  for (const auto& p : points_) names.push_back(p.key());
  std::vector<std::size_t> images(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) images[i] = truncated_image(i);
  return make_system(FiniteSpace::build(std::move(names), {}), std::move(images));
}

std::vector<std::size_t> generated_labels(std::size_t n, const std::vector<PointSet>& sets) {
  UnionFind uf(n);
  for (const auto& s : sets) {
    if (s.empty()) continue;
    const std::size_t root = s.first();
    s.for_each([&](std::size_t y) { uf.unite(root, y); });
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = uf.find(i);
  return out;
}

}  // namespace fixfactor::ladder
