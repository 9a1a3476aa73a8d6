#pragma once

#include <optional>
#include <string>

#include "fixfactor/ladder/region_set.hpp"

namespace fixfactor::ladder {

// Partition of a ladder space into intervals of positions. With class
// exponent e, the class boundaries are 0 and every position whose lowest
// exponent is at least e: classes are [s, s + w^e) for multiples s of w^e
// below the top, plus {top}. Without an exponent there is one class.
class SymPartition {
 public:
  static SymPartition single(const LadderSpace& space);
  // Normalizes to a single class when w^e exceeds the top.
  static SymPartition blocks(const LadderSpace& space, const OrdinalCNF& e);

  const std::optional<OrdinalCNF>& exponent() const noexcept { return exponent_; }
  bool is_single() const noexcept { return !exponent_.has_value(); }

  Position class_start(const Position& at) const;
  Position class_start(const Point& p) const { return class_start(p.position); }
  RegionSet class_region(const Point& p) const;
  bool same_class(const Point& a, const Point& b) const { return class_start(a) == class_start(b); }
  // nullopt when there are infinitely many classes.
  std::optional<std::uint64_t> class_count() const;
  // Every class of *this lies inside a class of coarser.
  bool refines(const SymPartition& coarser) const;
  std::string describe() const;

  friend bool operator==(const SymPartition&, const SymPartition&) = default;

 private:
  Position top_;
  OrdinalCNF top_exponent_;
  std::optional<OrdinalCNF> exponent_;
};

}  // namespace fixfactor::ladder
