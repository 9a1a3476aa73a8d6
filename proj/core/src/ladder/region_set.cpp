#include "fixfactor/ladder/region_set.hpp"

#include <algorithm>
#include <map>

namespace fixfactor::ladder {

bool Piece::contains(const Point& p) const {
  switch (kind) {
    case Kind::cells:
      return from <= p.position && p.position < to;
    case Kind::point:
      return p.is_fixed() && p.position == from;
    case Kind::strand:
      return !p.is_fixed() && p.position == from;
    case Kind::tail:
      return !p.is_fixed() && p.position == from && p.index >= index;
  }
  return false;
}

std::string Piece::format() const {
  switch (kind) {
    case Kind::cells:
      return "[" + from.format() + "," + to.format() + ")";
    case Kind::point:
      return "{" + from.format() + "}";
    case Kind::strand:
      return "S(" + from.format() + ")";
    case Kind::tail:
      return "S(" + from.format() + ")@>=" + std::to_string(index);
  }
  return {};
}

namespace {

bool covered_by_cells(const std::vector<Piece>& cells, const Position& at) {
  return std::any_of(cells.begin(), cells.end(),
                     [&](const Piece& c) { return c.from <= at && at < c.to; });
}

std::vector<Piece> normalize(std::vector<Piece> input) {
  while (true) {
    std::vector<Piece> cells;
    std::map<Position, bool> points;
    std::map<Position, bool> strands;
    std::map<Position, std::int64_t> tails;
    for (auto& p : input) {
      switch (p.kind) {
        case Piece::Kind::cells:
          if (p.from < p.to) cells.push_back(std::move(p));
          break;
        case Piece::Kind::point:
          points[p.from] = true;
          break;
        case Piece::Kind::strand:
          strands[p.from] = true;
          break;
        case Piece::Kind::tail: {
          auto [it, fresh] = tails.emplace(p.from, p.index);
          if (!fresh) it->second = std::min(it->second, p.index);
          break;
        }
      }
    }
    // A point together with its strand is a whole cell.
    bool grew = false;
    for (const auto& [at, unused] : strands) {
      if (points.count(at) != 0 && !covered_by_cells(cells, at)) {
        cells.push_back(Piece::cells(at, at.successor()));
        grew = true;
      }
    }
    std::sort(cells.begin(), cells.end(), [](const Piece& a, const Piece& b) { return a.from < b.from; });
    std::vector<Piece> merged;
    for (auto& c : cells) {
      if (!merged.empty() && c.from <= merged.back().to) {
        if (merged.back().to < c.to) merged.back().to = c.to;
      } else {
        merged.push_back(std::move(c));
      }
    }
    std::vector<Piece> out = merged;
    for (const auto& [at, unused] : points) {
      if (!covered_by_cells(merged, at)) out.push_back(Piece::point(at));
    }
    for (const auto& [at, unused] : strands) {
      if (!covered_by_cells(merged, at)) out.push_back(Piece::strand(at));
    }
    for (const auto& [at, j] : tails) {
      if (!covered_by_cells(merged, at) && strands.count(at) == 0) out.push_back(Piece::tail(at, j));
    }
    if (grew) {
      input = std::move(out);
      continue;
    }
    std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
      if (a.from != b.from) return a.from < b.from;
      return a.kind < b.kind;
    });
    return out;
  }
}

}  // namespace

RegionSet::RegionSet(std::vector<Piece> pieces) : pieces_(normalize(std::move(pieces))) {}

RegionSet RegionSet::whole(const LadderSpace& space) {
  return RegionSet({Piece::cells(Position{}, space.top()), Piece::point(space.top())});
}

bool RegionSet::contains(const Point& p) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& piece) { return piece.contains(p); });
}

bool RegionSet::has_generic() const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.from.has_generic() || p.to.has_generic(); });
}

RegionSet RegionSet::bind(std::uint64_t m_value) const {
  std::vector<Piece> out;
  for (const auto& p : pieces_) out.push_back({p.kind, p.from.bind(m_value), p.to.bind(m_value), p.index});
  return RegionSet(std::move(out));
}

RegionSet RegionSet::closure() const {
  std::vector<Piece> out = pieces_;
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case Piece::Kind::cells:
        out.push_back(Piece::point(p.to));
        break;
      case Piece::Kind::strand:
        out.push_back(Piece::point(p.from));
        out.push_back(Piece::point(p.from.successor()));
        break;
      case Piece::Kind::tail:
        out.push_back(Piece::point(p.from));
        break;
      case Piece::Kind::point:
        break;
    }
  }
  return RegionSet(std::move(out));
}

RegionSet RegionSet::without_point(const Position& at) const {
  std::vector<Piece> out;
  for (const auto& p : pieces_) {
    if (p.kind == Piece::Kind::point && p.from == at) continue;
    if (p.kind == Piece::Kind::cells && p.from <= at && at < p.to) {
      out.push_back(Piece::cells(p.from, at));
      out.push_back(Piece::strand(at));
      out.push_back(Piece::cells(at.successor(), p.to));
      continue;
    }
    out.push_back(p);
  }
  return RegionSet(std::move(out));
}

std::string RegionSet::format() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += " + ";
    out += p.format();
  }
  return out;
}

RegionSet operator|(const RegionSet& a, const RegionSet& b) {
  auto pieces = a.pieces_;
  pieces.insert(pieces.end(), b.pieces_.begin(), b.pieces_.end());
  return RegionSet(std::move(pieces));
}

}  // namespace fixfactor::ladder
