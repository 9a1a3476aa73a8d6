#pragma once

#include <cstddef>
#include <vector>

#include "fixfactor/point_set.hpp"

namespace fixfactor {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns true when two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Equivalence relation on point indices. Class ids are numbered in order of
// each class's least point.
class Partition {
 public:
  Partition() = default;

  // Any labelling works; equal labels mean same class.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  static Partition from_union_find(std::size_t n, UnionFind& uf);
  static Partition identity(std::size_t n);
  static Partition single(std::size_t n);

  std::size_t universe() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t x) const { return class_of_[x]; }
  const PointSet& members(std::size_t class_id) const { return classes_[class_id]; }
  const PointSet& class_containing(std::size_t x) const { return classes_[class_of_[x]]; }
  const std::vector<PointSet>& classes() const noexcept { return classes_; }

  // Union of the classes meeting s.
  PointSet saturate(const PointSet& s) const;
  bool is_saturated(const PointSet& s) const { return saturate(s) == s; }
  // Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<PointSet> classes_;
};

}  // namespace fixfactor
