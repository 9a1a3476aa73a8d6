#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fixfactor/partition.hpp"
#include "fixfactor/point_set.hpp"

namespace fixfactor {

// Finite topological space stored as its specialization preorder.
// specializes(x, y) holds iff x lies in the closure of {y}; closed sets are
// down-sets and open sets are up-sets.
class FiniteSpace {
 public:
  using NamePair = std::pair<std::string, std::string>;

  // Closes the given pairs reflexively and transitively.
  // Throws E_NAME on duplicate or unknown names and on an empty point list.
  static FiniteSpace build(std::vector<std::string> points, const std::vector<NamePair>& pairs);
  // up[x] lists every y with specializes(x, y); must already be a preorder.
  static FiniteSpace from_up_sets(std::vector<std::string> points, std::vector<PointSet> up);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  // Like index_of but throws E_NAME.
  std::size_t require(const std::string& name) const;

  bool specializes(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  // U_x, the least open set containing x.
  const PointSet& minimal_open(std::size_t x) const { return up_[x]; }
  // cl({y}).
  const PointSet& point_closure(std::size_t y) const { return down_[y]; }

  PointSet closure(const PointSet& s) const;
  PointSet interior(const PointSet& s) const;
  // Least open superset.
  PointSet open_hull(const PointSet& s) const;
  bool is_closed(const PointSet& s) const { return closure(s) == s; }
  bool is_open(const PointSet& s) const { return open_hull(s) == s; }
  bool is_discrete() const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet whole() const { return PointSet::full(size()); }
  PointSet singleton(std::size_t x) const { return PointSet::singleton(size(), x); }

  // Pairs (x, y), x != y, specializes(x, y), with nothing strictly between.
  // Mutually specializing points are reported once, as (lower index, higher).
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;
  // Every (x, y) with x != y and specializes(x, y).
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  FiniteSpace(std::vector<std::string> names, std::vector<PointSet> up);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

// Continuous (monotone) self-map. Only validate_map creates one.
class SelfMap {
 public:
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return image_; }
  PointSet image(const PointSet& s) const;

  friend bool operator==(const SelfMap&, const SelfMap&) = default;

 private:
  explicit SelfMap(std::vector<std::size_t> image) : image_(std::move(image)) {}
  friend SelfMap validate_map(const FiniteSpace&, std::vector<std::size_t>);

  std::vector<std::size_t> image_;
};

// Throws ContinuityError for the first violating pair (x, y) in index order,
// E_NAME for out-of-range images or size mismatch.
SelfMap validate_map(const FiniteSpace& space, std::vector<std::size_t> images);
// Name-based overload; the assignment must be total.
SelfMap validate_map(const FiniteSpace& space, const std::map<std::string, std::string>& assignment);

struct FiniteSystem {
  FiniteSpace space;
  SelfMap map;

  std::size_t size() const noexcept { return space.size(); }
  friend bool operator==(const FiniteSystem&, const FiniteSystem&) = default;
};

FiniteSystem make_system(FiniteSpace space, std::vector<std::size_t> images);

// Connected components of the comparability graph.
Partition comparability_partition(const FiniteSpace& space);

}  // namespace fixfactor
