#include "fixfactor/topology.hpp"

#include <algorithm>

#include "fixfactor/errors.hpp"

namespace fixfactor {

namespace {

std::vector<PointSet> transpose(const std::vector<PointSet>& rel) {
  const std::size_t n = rel.size();
  std::vector<PointSet> out(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) rel[x].for_each([&](std::size_t y) { out[y].insert(x); });
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> names, std::vector<PointSet> up)
    : names_(std::move(names)), up_(std::move(up)), down_(transpose(up_)) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

FiniteSpace FiniteSpace::build(std::vector<std::string> points, const std::vector<NamePair>& pairs) {
  if (points.empty()) throw Error(ErrorCode::name, "a space needs at least one point");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw Error(ErrorCode::name, "duplicate point '" + points[i] + "'");
    }
  }
  const std::size_t n = points.size();
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].insert(x);
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::name, "unknown point '" + a + "'");
    if (ib == index.end()) throw Error(ErrorCode::name, "unknown point '" + b + "'");
    up[ia->second].insert(ib->second);
  }
  // Warshall: if k is above x then everything above k is above x.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (up[x].contains(k)) up[x] |= up[k];
    }
  }
  return FiniteSpace(std::move(points), std::move(up));
}

FiniteSpace FiniteSpace::from_up_sets(std::vector<std::string> points, std::vector<PointSet> up) {
  if (points.empty()) throw Error(ErrorCode::name, "a space needs at least one point");
  return FiniteSpace(std::move(points), std::move(up));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteSpace::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::name, "unknown point '" + name + "'");
  return *i;
}

PointSet FiniteSpace::closure(const PointSet& s) const {
  PointSet out(size());
  s.for_each([&](std::size_t y) { out |= down_[y]; });
  return out;
}

PointSet FiniteSpace::open_hull(const PointSet& s) const {
  PointSet out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

PointSet FiniteSpace::interior(const PointSet& s) const {
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_[x].is_subset_of(s)) out.insert(x);
  }
  return out;
}

bool FiniteSpace::is_discrete() const {
  for (const auto& u : up_) {
    if (u.count() != 1) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::relation_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    up_[x].for_each([&](std::size_t y) {
      if (y != x) out.emplace_back(x, y);
    });
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::covering_pairs() const {
  const std::size_t n = size();
  // Each equivalence class is represented by its least member.
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) rep[x] = (up_[x] & down_[x]).first();

  // Equivalence classes become cycles through their members in index order.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> last(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) out.emplace_back(last[rep[x]], x);
    last[rep[x]] = x;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] == x && last[x] != x) out.emplace_back(last[x], x);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] != a) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (rep[b] != b || b == a || !up_[a].contains(b)) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c) {
        if (rep[c] != c || c == a || c == b) continue;
        if (up_[a].contains(c) && up_[c].contains(b)) covering = false;
      }
      if (covering) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet SelfMap::image(const PointSet& s) const {
  PointSet out(s.universe());
  s.for_each([&](std::size_t x) { out.insert(image_[x]); });
  return out;
}

SelfMap validate_map(const FiniteSpace& space, std::vector<std::size_t> images) {
  if (images.size() != space.size()) {
    throw Error(ErrorCode::name, "map must assign every point exactly once");
  }
  for (std::size_t img : images) {
    if (img >= space.size()) throw Error(ErrorCode::name, "map image out of range");
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (space.specializes(x, y) && !space.specializes(images[x], images[y])) {
        throw ContinuityError(space.name(x), space.name(y));
      }
    }
  }
  return SelfMap(std::move(images));
}

SelfMap validate_map(const FiniteSpace& space, const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> images(space.size(), space.size());
  for (const auto& [from, to] : assignment) {
    images[space.require(from)] = space.require(to);
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (images[x] == space.size()) {
      throw Error(ErrorCode::name, "map has no image for '" + space.name(x) + "'");
    }
  }
  return validate_map(space, std::move(images));
}

FiniteSystem make_system(FiniteSpace space, std::vector<std::size_t> images) {
  SelfMap map = validate_map(space, std::move(images));
  return FiniteSystem{std::move(space), std::move(map)};
}

Partition comparability_partition(const FiniteSpace& space) {
  UnionFind uf(space.size());
  for (auto [x, y] : space.relation_pairs()) uf.unite(x, y);
  return Partition::from_union_find(space.size(), uf);
}

}  // namespace fixfactor
