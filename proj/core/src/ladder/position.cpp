#include "fixfactor/ladder/position.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fixfactor/errors.hpp"

namespace fixfactor::ladder {

std::string Coefficient::format() const {
  if (!generic) return std::to_string(offset);
  if (offset == 0) return "m";
  return "(m" + std::string(offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset) + ")";
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  if (s.size() > 1 && s.front() == '0') return std::nullopt;
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Splits on '+' outside parentheses.
std::optional<std::vector<std::string_view>> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) return std::nullopt;
    if (text[i] == '+' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) return std::nullopt;
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

std::optional<Coefficient> Coefficient::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty()) return std::nullopt;
  if (text.front() != 'm') {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Coefficient::concrete(*v);
  }
  if (text.size() == 1) return Coefficient::m();
  const char sign = text[1];
  if (sign != '+' && sign != '-') return std::nullopt;
  auto v = parse_int(text.substr(2));
  if (!v || *v == 0) return std::nullopt;
  return Coefficient::m(sign == '+' ? *v : -*v);
}

Coefficient operator+(Coefficient a, Coefficient b) {
  if (a.generic && b.generic) throw std::logic_error("sum of two generic coefficients");
  return {a.offset + b.offset, a.generic || b.generic};
}

std::uint64_t ordinal_weight(const OrdinalCNF& o) {
  std::uint64_t w = 0;
  for (const auto& t : o.terms()) w += t.coefficient + t.exponent;
  return w;
}

OrdinalCNF ordinal_fundamental(const OrdinalCNF& limit, std::uint64_t k) {
  if (!limit.is_limit()) throw std::logic_error("fundamental sequence of a non-limit ordinal");
  auto terms = limit.terms();
  auto last = terms.back();
  terms.pop_back();
  if (last.coefficient > 1) terms.push_back({last.exponent, last.coefficient - 1});
  terms.push_back({last.exponent - 1, k});
  return OrdinalCNF::from_terms(std::move(terms));
}

std::vector<OrdinalCNF> ordinals_below(const OrdinalCNF& bound, std::uint64_t max_weight) {
  std::vector<OrdinalCNF> out;
  std::vector<OrdinalCNF::Term> terms;
  auto recurse = [&](auto&& self, std::uint64_t budget, std::uint32_t exponent_cap) -> void {
    auto o = OrdinalCNF::from_terms(terms);
    if (o < bound) out.push_back(o);
    for (std::uint32_t e = 0; e < exponent_cap && e < budget; ++e) {
      for (std::uint64_t c = 1; c + e <= budget; ++c) {
        terms.push_back({e, c});
        self(self, budget - c - e, e);
        terms.pop_back();
      }
    }
  };
  recurse(recurse, max_weight, static_cast<std::uint32_t>(max_weight + 1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Position Position::finite(std::uint64_t n) { return finite(Coefficient::concrete(static_cast<std::int64_t>(n))); }

Position Position::finite(Coefficient c) {
  if (!c.positive()) return {};
  return Position({{OrdinalCNF{}, c}});
}

Position Position::omega_power(const OrdinalCNF& exponent, Coefficient c) {
  if (!c.positive()) return {};
  return Position({{exponent, c}});
}

Position Position::from_ordinal(const OrdinalCNF& o) {
  std::vector<Term> terms;
  for (const auto& t : o.terms()) {
    terms.push_back({OrdinalCNF::finite(t.exponent), Coefficient::concrete(static_cast<std::int64_t>(t.coefficient))});
  }
  return Position(std::move(terms));
}

Position Position::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].coefficient.positive()) throw std::logic_error("non-positive coefficient in a position");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::logic_error("position exponents must decrease");
    }
  }
  return Position(std::move(terms));
}

std::optional<Position> Position::parse(std::string_view text) {
  if (text == "0") return Position{};
  auto parts = split_top_level(text);
  if (!parts) return std::nullopt;
  std::vector<Term> terms;
  for (auto part : *parts) {
    if (part.empty()) return std::nullopt;
    Term term{OrdinalCNF{}, Coefficient::concrete(1)};
    if (part.front() != 'w') {
      auto c = Coefficient::parse(part);
      if (!c || !c->positive()) return std::nullopt;
      term.coefficient = *c;
    } else {
      std::string_view rest = part.substr(1);
      term.exponent = OrdinalCNF::finite(1);
      if (!rest.empty() && rest.front() == '^') {
        rest.remove_prefix(1);
        std::string_view exp_text;
        if (!rest.empty() && rest.front() == '(') {
          const auto close = rest.find(')');
          if (close == std::string_view::npos) return std::nullopt;
          exp_text = rest.substr(1, close - 1);
          rest.remove_prefix(close + 1);
        } else {
          const auto star = rest.find('*');
          exp_text = rest.substr(0, star);
          rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star);
        }
        try {
          term.exponent = OrdinalCNF::parse(exp_text);
        } catch (const Error&) {
          return std::nullopt;
        }
        if (term.exponent.is_zero()) return std::nullopt;
      }
      if (!rest.empty()) {
        if (rest.front() != '*') return std::nullopt;
        auto c = Coefficient::parse(rest.substr(1));
        if (!c || !c->positive()) return std::nullopt;
        term.coefficient = *c;
      }
    }
    if (!terms.empty() && !(term.exponent < terms.back().exponent)) return std::nullopt;
    terms.push_back(term);
  }
  return Position(std::move(terms));
}

std::string Position::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    if (e.is_zero()) {
      out += c.format();
      continue;
    }
    out += 'w';
    if (e != OrdinalCNF::finite(1)) {
      out += e.is_finite() ? "^" + e.format() : "^(" + e.format() + ")";
    }
    if (c != Coefficient::concrete(1)) out += "*" + c.format();
  }
  return out;
}

bool Position::has_generic() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient.generic; });
}

Position Position::bind(std::uint64_t m_value) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const Coefficient c = t.coefficient.bind(m_value);
    if (c.positive()) terms.push_back({t.exponent, c});
  }
  return Position(std::move(terms));
}

Position Position::successor() const {
  auto terms = terms_;
  if (is_successor()) {
    terms.back().coefficient = terms.back().coefficient + Coefficient::concrete(1);
  } else {
    terms.push_back({OrdinalCNF{}, Coefficient::concrete(1)});
  }
  return Position(std::move(terms));
}

std::optional<Position> Position::predecessor() const {
  if (!is_successor()) return std::nullopt;
  auto terms = terms_;
  terms.back().coefficient = terms.back().coefficient + Coefficient::concrete(-1);
  if (!terms.back().coefficient.positive()) terms.pop_back();
  return Position(std::move(terms));
}

Position Position::operator+(const Position& rhs) const {
  if (rhs.is_zero()) return *this;
  const OrdinalCNF& lead = rhs.terms_.front().exponent;
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (lead < t.exponent) {
      terms.push_back(t);
    } else if (t.exponent == lead) {
      auto merged = rhs.terms_;
      merged.front().coefficient = merged.front().coefficient + t.coefficient;
      terms.insert(terms.end(), merged.begin(), merged.end());
      return Position(std::move(terms));
    }
  }
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return Position(std::move(terms));
}

Position Position::floor_to(const OrdinalCNF& e) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponent >= e) terms.push_back(t);
  }
  return Position(std::move(terms));
}

Coefficient Position::coefficient_at(const OrdinalCNF& e) const {
  for (const auto& t : terms_) {
    if (t.exponent == e) return t.coefficient;
  }
  return Coefficient::concrete(0);
}

std::uint64_t Position::weight() const {
  std::uint64_t w = 0;
  for (const auto& t : terms_) {
    if (t.coefficient.generic) throw std::logic_error("weight of a generic position");
    w += static_cast<std::uint64_t>(t.coefficient.offset) + ordinal_weight(t.exponent);
  }
  return w;
}

Position Position::fundamental(std::uint64_t k) const {
  if (!is_limit()) throw std::logic_error("fundamental sequence of a non-limit position");
  auto terms = terms_;
  const Term last = terms.back();
  terms.pop_back();
  const Coefficient rest = last.coefficient + Coefficient::concrete(-1);
  if (rest.positive()) terms.push_back({last.exponent, rest});
  const auto kc = Coefficient::concrete(static_cast<std::int64_t>(k));
  if (last.exponent.is_successor()) {
    terms.push_back({*last.exponent.predecessor(), kc});
  } else {
    terms.push_back({ordinal_fundamental(last.exponent, k), Coefficient::concrete(1)});
  }
  return Position(std::move(terms));
}

std::strong_ordering Position::operator<=>(const Position& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exponent <=> rhs.terms_[i].exponent; c != 0) return c;
    if (auto c = terms_[i].coefficient <=> rhs.terms_[i].coefficient; c != 0) return c;
  }
  return terms_.size() <=> rhs.terms_.size();
}

}  // namespace fixfactor::ladder
