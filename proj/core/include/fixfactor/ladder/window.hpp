#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixfactor/ladder/sym_partition.hpp"
#include "fixfactor/point_set.hpp"
#include "fixfactor/topology.hpp"

namespace fixfactor::ladder {

// Finite truncation of a ladder space: positions of index weight at most
// family_cut (plus the top) and strand indices in [-strand_cut, strand_cut].
// Frontier points are those whose neighbourhoods or orbits the truncation
// cuts off; audits only judge non-frontier points.
class Window {
 public:
  static Window build(const LadderSpace& space, unsigned family_cut, unsigned strand_cut);

  const LadderSpace& space() const noexcept { return space_; }
  unsigned family_cut() const noexcept { return family_cut_; }
  unsigned strand_cut() const noexcept { return strand_cut_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(const Point& p) const;
  bool is_frontier(std::size_t i) const { return frontier_.contains(i); }
  const PointSet& frontier() const noexcept { return frontier_; }
  PointSet interior() const { return frontier_.complement(); }
  PointSet empty_set() const { return PointSet(points_.size()); }

  // Map image, or nullopt when it leaves the window.
  std::optional<std::size_t> image(std::size_t i) const;
  // Truncated map: z(b, J) goes to p(b).
  std::size_t truncated_image(std::size_t i) const;

  // Basic neighbourhood: z alone; p(g) with z(g, J), z(g-1, -J) for
  // successor g, and the cells of the approach zone for limit g.
  const PointSet& neighbourhood(std::size_t i) const { return neighbourhoods_[i]; }
  // Strand points witnessing p(g) in the closure of a set that holds them.
  const std::vector<std::size_t>& closure_witnesses(std::size_t fixed) const { return witnesses_[fixed]; }

  PointSet closure(const PointSet& s) const;
  PointSet open_hull(const PointSet& s) const;
  PointSet forward_orbit(const PointSet& s) const;
  PointSet saturate(const PointSet& s, const std::vector<std::size_t>& labels) const;

  PointSet aorb0(std::size_t i) const;
  PointSet aorb_succ(const std::vector<std::size_t>& labels, std::size_t i) const;

  // Class label per window point.
  std::vector<std::size_t> labels(const SymPartition& p) const;
  PointSet region_members(const RegionSet& r) const;

  // Discrete space with the truncated map, for export.
  FiniteSystem to_system() const;

 private:
  LadderSpace space_;
  unsigned family_cut_ = 0;
  unsigned strand_cut_ = 0;
  std::vector<Point> points_;
  std::map<Position, std::size_t> fixed_index_;
  PointSet frontier_;
  std::vector<PointSet> neighbourhoods_;
  std::vector<std::vector<std::size_t>> witnesses_;
  std::vector<std::vector<std::size_t>> witnessed_by_;  // per strand point: fixed points it witnesses
};

// Positions of weight at most max_weight up to and including the top.
std::vector<Position> window_positions(const LadderSpace& space, unsigned max_weight);

// Labels of the partition generated by overlapping sets; equal labels mean
// the same class.
std::vector<std::size_t> generated_labels(std::size_t n, const std::vector<PointSet>& sets);

}  // namespace fixfactor::ladder
