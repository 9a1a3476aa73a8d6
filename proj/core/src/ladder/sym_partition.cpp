#include "fixfactor/ladder/sym_partition.hpp"

namespace fixfactor::ladder {

SymPartition SymPartition::single(const LadderSpace& space) {
  SymPartition p;
  p.top_ = space.top();
  p.top_exponent_ = space.top_exponent();
  return p;
}

SymPartition SymPartition::blocks(const LadderSpace& space, const OrdinalCNF& e) {
  SymPartition p = single(space);
  if (e <= space.top_exponent()) p.exponent_ = e;
  return p;
}

Position SymPartition::class_start(const Position& at) const {
  return exponent_ ? at.floor_to(*exponent_) : Position{};
}

RegionSet SymPartition::class_region(const Point& p) const {
  if (!exponent_) return RegionSet({Piece::cells(Position{}, top_), Piece::point(top_)});
  const Position s = class_start(p);
  if (s == top_) return RegionSet({Piece::point(top_)});
  return RegionSet({Piece::cells(s, s + Position::omega_power(*exponent_))});
}

std::optional<std::uint64_t> SymPartition::class_count() const {
  if (!exponent_) return 1;
  if (*exponent_ == top_exponent_) return 2;
  return std::nullopt;
}

bool SymPartition::refines(const SymPartition& coarser) const {
  if (!coarser.exponent_) return true;
  return exponent_ && *exponent_ <= *coarser.exponent_;
}

std::string SymPartition::describe() const {
  if (!exponent_) return "one class";
  const Position unit = Position::omega_power(*exponent_);
  if (*exponent_ == top_exponent_) return "[0," + top_.format() + ") and {top}";
  return "[s,s+" + unit.format() + ") for multiples s of " + unit.format() + " below the top, and {top}";
}

}  // namespace fixfactor::ladder
