#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fixfactor {

// Ordinal below w^w in Cantor normal form.
class OrdinalCNF {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  OrdinalCNF() = default;

  static OrdinalCNF finite(std::uint64_t n);
  static OrdinalCNF omega_power(std::uint32_t exponent, std::uint64_t coefficient = 1);
  // Terms must have strictly decreasing exponents and positive coefficients.
  static OrdinalCNF from_terms(std::vector<Term> terms);

  // Grammar: terms "w^k*c", "w^k", "w*c", "w", "n" joined by '+', highest
  // exponent first, no redundant "^1", "*1" or zero terms. Throws E_ORDINAL.
  static OrdinalCNF parse(std::string_view text);
  std::string format() const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_successor() const noexcept { return !terms_.empty() && terms_.back().exponent == 0; }
  bool is_limit() const noexcept { return !terms_.empty() && terms_.back().exponent != 0; }
  bool is_finite() const noexcept { return terms_.empty() || terms_.front().exponent == 0; }
  std::optional<std::uint64_t> finite_value() const;
  // Exponent of the last term; 0 for zero.
  std::uint32_t low_exponent() const noexcept { return terms_.empty() ? 0 : terms_.back().exponent; }

  OrdinalCNF successor() const;
  std::optional<OrdinalCNF> predecessor() const;
  // Ordinal (non-commutative) addition.
  OrdinalCNF operator+(const OrdinalCNF& rhs) const;

  std::strong_ordering operator<=>(const OrdinalCNF& rhs) const;
  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;

 private:
  explicit OrdinalCNF(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

std::strong_ordering compare(const OrdinalCNF& a, const OrdinalCNF& b);

}  // namespace fixfactor
