#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixfactor/ordinal.hpp"

namespace fixfactor::ladder {

// offset, or m + offset when generic. The symbol m stands for an index
// larger than every concrete number it is compared with.
struct Coefficient {
  std::int64_t offset = 0;
  bool generic = false;

  static Coefficient concrete(std::int64_t value) { return {value, false}; }
  static Coefficient m(std::int64_t offset = 0) { return {offset, true}; }

  bool positive() const noexcept { return generic || offset > 0; }
  Coefficient bind(std::uint64_t m_value) const {
    return {generic ? static_cast<std::int64_t>(m_value) + offset : offset, false};
  }
  // "3", "m", "(m+1)", "(m-2)".
  std::string format() const;
  // Accepts a natural number, "m", "m+k", "m-k", optionally parenthesized.
  static std::optional<Coefficient> parse(std::string_view text);

  std::strong_ordering operator<=>(const Coefficient& rhs) const {
    if (generic != rhs.generic) return generic <=> rhs.generic;
    return offset <=> rhs.offset;
  }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

Coefficient operator+(Coefficient a, Coefficient b);

// Sum of w-powers over ordinal exponents: positions in ladder spaces go up
// to w^(w+k), past the range of OrdinalCNF.
class Position {
 public:
  struct Term {
    OrdinalCNF exponent;
    Coefficient coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Position() = default;

  static Position finite(std::uint64_t n);
  static Position finite(Coefficient c);
  static Position omega_power(const OrdinalCNF& exponent, Coefficient c = Coefficient::concrete(1));
  static Position from_ordinal(const OrdinalCNF& o);
  // Terms must have decreasing exponents and positive coefficients.
  static Position from_terms(std::vector<Term> terms);

  // Ordinal grammar with "w^(<ordinal>)" exponents and coefficients that may
  // be m, (m+k), (m-k). Returns nullopt on malformed input.
  static std::optional<Position> parse(std::string_view text);
  std::string format() const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_successor() const noexcept { return !terms_.empty() && terms_.back().exponent.is_zero(); }
  bool is_limit() const noexcept { return !terms_.empty() && !terms_.back().exponent.is_zero(); }
  // Exponent of the last term; zero for zero.
  OrdinalCNF low_exponent() const { return terms_.empty() ? OrdinalCNF{} : terms_.back().exponent; }
  bool has_generic() const noexcept;
  Position bind(std::uint64_t m_value) const;

  Position successor() const;
  std::optional<Position> predecessor() const;
  Position operator+(const Position& rhs) const;
  // Largest multiple of w^e not above *this: terms below e dropped.
  Position floor_to(const OrdinalCNF& e) const;
  // Coefficient of the w^e term, zero if absent.
  Coefficient coefficient_at(const OrdinalCNF& e) const;
  // Sum over terms of coefficient + weight(exponent); concrete positions only.
  std::uint64_t weight() const;
  // k-th element (k >= 1) of the standard increasing sequence converging to
  // this limit position.
  Position fundamental(std::uint64_t k) const;

  std::strong_ordering operator<=>(const Position& rhs) const;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  explicit Position(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

// Sum over terms of coefficient + exponent.
std::uint64_t ordinal_weight(const OrdinalCNF& o);
// k-th element of the standard sequence converging to a limit ordinal.
OrdinalCNF ordinal_fundamental(const OrdinalCNF& limit, std::uint64_t k);
// All ordinals below bound with weight at most max_weight, ascending.
std::vector<OrdinalCNF> ordinals_below(const OrdinalCNF& bound, std::uint64_t max_weight);

}  // namespace fixfactor::ladder
