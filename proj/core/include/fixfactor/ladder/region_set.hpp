#pragma once

#include <string>
#include <vector>

#include "fixfactor/ladder/space.hpp"

namespace fixfactor::ladder {

// Shift-invariant building blocks of symbolic subsets.
struct Piece {
  enum class Kind {
    cells,   // every point of the cells in [from, to)
    point,   // p(from)
    strand,  // z(from, j) for all j
    tail,    // z(from, j) for j >= index
  };

  Kind kind = Kind::point;
  Position from;
  Position to;
  std::int64_t index = 0;

  static Piece cells(Position from, Position to) { return {Kind::cells, std::move(from), std::move(to), 0}; }
  static Piece point(Position at) { return {Kind::point, std::move(at), {}, 0}; }
  static Piece strand(Position at) { return {Kind::strand, std::move(at), {}, 0}; }
  static Piece tail(Position at, std::int64_t j) { return {Kind::tail, std::move(at), {}, j}; }

  bool contains(const Point& p) const;
  std::string format() const;
  friend bool operator==(const Piece&, const Piece&) = default;
};

// Finite union of pieces in canonical form: sorted, merged, no piece
// covered by another. Every region set is invariant under the map.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(std::vector<Piece> pieces);

  static RegionSet whole(const LadderSpace& space);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  // Positions and points must both be concrete or share the same binding.
  bool contains(const Point& p) const;
  bool has_generic() const;
  RegionSet bind(std::uint64_t m_value) const;
  // Least position touched; the set must be nonempty.
  const Position& lowest() const { return pieces_.front().from; }

  // Topological closure: adds p(b) for tails and strands at b, p(b+1) for
  // strands at b, and p(to) for cell runs ending at to.
  RegionSet closure() const;
  RegionSet without_point(const Position& at) const;

  std::string format() const;

  friend RegionSet operator|(const RegionSet& a, const RegionSet& b);
  friend bool operator==(const RegionSet&, const RegionSet&) = default;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace fixfactor::ladder
