#include "fixfactor/ordinal.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "fixfactor/errors.hpp"

namespace fixfactor {

namespace {

[[noreturn]] void reject(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ordinal, "'" + std::string(text) + "': " + why);
}

// Canonical decimal: no sign, no leading zeros.
std::uint64_t parse_natural(std::string_view whole, std::string_view digits) {
  if (digits.empty()) reject(whole, "expected a number");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) reject(whole, "unexpected character");
  }
  if (digits.size() > 1 && digits.front() == '0') reject(whole, "leading zero");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) reject(whole, "number out of range");
  return value;
}

OrdinalCNF::Term parse_term(std::string_view whole, std::string_view t) {
  if (t.empty()) reject(whole, "empty term");
  if (t.front() != 'w') {
    const auto n = parse_natural(whole, t);
    if (n == 0) reject(whole, "zero term in a sum");
    return {0, n};
  }
  std::string_view rest = t.substr(1);
  std::uint64_t exponent = 1;
  if (!rest.empty() && rest.front() == '^') {
    rest.remove_prefix(1);
    const auto star = rest.find('*');
    const auto exp_text = rest.substr(0, star);
    if (!exp_text.empty() && exp_text.front() == 'w') reject(whole, "exponent must be finite (cap w^w)");
    exponent = parse_natural(whole, exp_text);
    if (exponent < 2) reject(whole, "non-canonical exponent");
    if (exponent > std::numeric_limits<std::uint32_t>::max()) reject(whole, "exponent out of range");
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star);
  }
  std::uint64_t coefficient = 1;
  if (!rest.empty()) {
    if (rest.front() != '*') reject(whole, "unexpected character");
    coefficient = parse_natural(whole, rest.substr(1));
    if (coefficient < 2) reject(whole, "non-canonical coefficient");
  }
  return {static_cast<std::uint32_t>(exponent), coefficient};
}

}  // namespace

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) {
  if (n == 0) return {};
  return OrdinalCNF({{0, n}});
}

OrdinalCNF OrdinalCNF::omega_power(std::uint32_t exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return {};
  return OrdinalCNF({{exponent, coefficient}});
}

OrdinalCNF OrdinalCNF::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw Error(ErrorCode::ordinal, "zero coefficient");
    if (i > 0 && terms[i].exponent >= terms[i - 1].exponent) {
      throw Error(ErrorCode::ordinal, "exponents must strictly decrease");
    }
  }
  return OrdinalCNF(std::move(terms));
}

OrdinalCNF OrdinalCNF::parse(std::string_view text) {
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    const auto plus = text.find('+', pos);
    const auto piece = text.substr(pos, plus == std::string_view::npos ? text.npos : plus - pos);
    const Term term = parse_term(text, piece);
    if (!terms.empty() && term.exponent >= terms.back().exponent) {
      reject(text, "terms must have strictly decreasing exponents");
    }
    terms.push_back(term);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return OrdinalCNF(std::move(terms));
}

std::string OrdinalCNF::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    out += 'w';
    if (e > 1) out += '^' + std::to_string(e);
    if (c > 1) out += '*' + std::to_string(c);
  }
  return out;
}

std::optional<std::uint64_t> OrdinalCNF::finite_value() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) return std::nullopt;
  return terms_.front().coefficient;
}

OrdinalCNF OrdinalCNF::successor() const {
  auto terms = terms_;
  if (is_successor()) {
    ++terms.back().coefficient;
  } else {
    terms.push_back({0, 1});
  }
  return OrdinalCNF(std::move(terms));
}

std::optional<OrdinalCNF> OrdinalCNF::predecessor() const {
  if (!is_successor()) return std::nullopt;
  auto terms = terms_;
  if (--terms.back().coefficient == 0) terms.pop_back();
  return OrdinalCNF(std::move(terms));
}

OrdinalCNF OrdinalCNF::operator+(const OrdinalCNF& rhs) const {
  if (rhs.is_zero()) return *this;
  const std::uint32_t lead = rhs.terms_.front().exponent;
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponent > lead) terms.push_back(t);
    else if (t.exponent == lead) {
      auto merged = rhs.terms_;
      merged.front().coefficient += t.coefficient;
      terms.insert(terms.end(), merged.begin(), merged.end());
      return OrdinalCNF(std::move(terms));
    }
  }
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return OrdinalCNF(std::move(terms));
}

std::strong_ordering OrdinalCNF::operator<=>(const OrdinalCNF& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exponent <=> rhs.terms_[i].exponent; c != 0) return c;
    if (auto c = terms_[i].coefficient <=> rhs.terms_[i].coefficient; c != 0) return c;
  }
  return terms_.size() <=> rhs.terms_.size();
}

std::strong_ordering compare(const OrdinalCNF& a, const OrdinalCNF& b) { return a <=> b; }

}  // namespace fixfactor
