#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fixfactor/ladder/position.hpp"

namespace fixfactor::ladder {

enum class Base { strand, ramp };

// cat^depth(base).
struct LadderTerm {
  Base base = Base::strand;
  unsigned cat_depth = 0;

  std::string format() const;
  friend bool operator==(const LadderTerm&, const LadderTerm&) = default;
};

inline constexpr unsigned default_nesting_cap = 6;

// Grammar: strand | ramp | cat(T). Throws E_TERM on malformed input and
// E_DEPTH when cat nesting exceeds the cap.
LadderTerm parse_term(std::string_view text, unsigned nesting_cap = default_nesting_cap);

// Points of a ladder space: fixed points p(b) for positions b <= top, and
// strand points z(b, j) for b < top, j in Z. The strand S_b runs from p(b+1)
// (j -> -inf) to p(b) (j -> +inf); the map shifts j by one and fixes p.
// Cell b is p(b) together with S_b.
struct Point {
  enum class Kind { fixed, strand };

  Kind kind = Kind::fixed;
  Position position;
  std::int64_t index = 0;

  static Point fixed_at(Position p) { return {Kind::fixed, std::move(p), 0}; }
  static Point strand_at(Position p, std::int64_t j) { return {Kind::strand, std::move(p), j}; }

  bool is_fixed() const noexcept { return kind == Kind::fixed; }
  Point bind(std::uint64_t m_value) const { return {kind, position.bind(m_value), index}; }
  Point image() const { return is_fixed() ? *this : strand_at(position, index + 1); }
  // "p:<position>" or "z:<position>:<j>".
  std::string key() const;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Region {
  std::string name;
  std::string kind;
  std::size_t arity = 0;
  std::string description;
};

class LadderSpace {
 public:
  static LadderSpace build(const LadderTerm& term);

  const LadderTerm& term() const noexcept { return term_; }
  // The top position, w^top_exponent.
  const Position& top() const noexcept { return top_; }
  const OrdinalCNF& top_exponent() const noexcept { return top_exponent_; }
  bool contains(const Point& p) const;

  const std::vector<Region>& regions() const noexcept { return regions_; }

  // "top", "p:<pos>", "z:<pos>:<j>", or region form such as "c[m]",
  // "S[2]@-3", "c[1,m]", "B[2].S[1,4]@0". Throws E_LOCATOR.
  Point parse_locator(std::string_view text) const;
  // Region-form name of a point.
  std::string describe(const Point& p) const;

 private:
  // Exponent of the block size at cat level s (1 = outermost).
  OrdinalCNF level_exponent(unsigned s) const;
  Point resolve_region(std::string_view name, const std::vector<Coefficient>& idx, std::string_view rest,
                       std::string_view whole) const;

  LadderTerm term_;
  Position top_;
  OrdinalCNF top_exponent_;
  std::vector<Region> regions_;
};

}  // namespace fixfactor::ladder
