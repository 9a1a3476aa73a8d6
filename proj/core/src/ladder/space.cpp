#include <cctype>
#include <charconv>

#include "fixfactor/errors.hpp"
#include "fixfactor/ladder/space.hpp"

namespace fixfactor::ladder {

namespace {

Position omega_times(const OrdinalCNF& e, Coefficient c) { return Position::omega_power(e, c); }

// position - w^lead, where position starts with a w^lead term.
Position drop_leading_unit(const Position& p) {
  auto terms = p.terms();
  terms.front().coefficient = terms.front().coefficient + Coefficient::concrete(-1);
  if (!terms.front().coefficient.positive()) terms.erase(terms.begin());
  return Position::from_terms(std::move(terms));
}

// Drops the w^e term; the remaining terms must all be below e.
Position without_term(const Position& p, const OrdinalCNF& e) {
  std::vector<Position::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exponent < e) terms.push_back(t);
  }
  return Position::from_terms(std::move(terms));
}

std::optional<std::int64_t> parse_signed(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string join(const std::vector<Coefficient>& idx) {
  std::string out;
  for (const auto& c : idx) {
    if (!out.empty()) out += ',';
    out += c.format();
  }
  return out;
}

}  // namespace

std::string Point::key() const {
  if (is_fixed()) return "p:" + position.format();
  return "z:" + position.format() + ":" + std::to_string(index);
}

LadderSpace LadderSpace::build(const LadderTerm& term) {
  LadderSpace s;
  s.term_ = term;
  const unsigned k = term.cat_depth;
  s.top_exponent_ = term.base == Base::strand ? OrdinalCNF::finite(k)
                                              : OrdinalCNF::omega_power(1) + OrdinalCNF::finite(k);
  s.top_ = Position::omega_power(s.top_exponent_);
  if (k == 0 && term.base == Base::strand) {
    s.regions_ = {{"L", "point", 0, "attracting endpoint p(0)"},
                  {"S", "strand", 0, "the orbit from R to L"},
                  {"R", "point", 0, "repelling endpoint p(1)"}};
    return s;
  }
  for (unsigned r = 1; r <= k; ++r) {
    s.regions_.push_back({"c", "point family", r, "gluing points of cat level " + std::to_string(r)});
  }
  if (term.base == Base::strand) {
    s.regions_.push_back({"S", "strand family", k, "innermost strands"});
  } else {
    s.regions_.push_back({"r", "point family", k + 1, "ramp block boundaries"});
    s.regions_.push_back({"B", "block family", k + 1, "ramp block b, a copy of cat^(b+1)(strand)"});
  }
  s.regions_.push_back({"top", "point", 0, "point at infinity"});
  return s;
}

OrdinalCNF LadderSpace::level_exponent(unsigned s) const {
  const unsigned k = term_.cat_depth;
  if (term_.base == Base::strand) return OrdinalCNF::finite(k - s);
  const auto w = OrdinalCNF::omega_power(1);
  return k == s ? w : w + OrdinalCNF::finite(k - s);
}

bool LadderSpace::contains(const Point& p) const {
  return p.is_fixed() ? p.position <= top_ : p.position < top_;
}

Point LadderSpace::parse_locator(std::string_view text) const {
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::locator, "'" + std::string(text) + "': " + why);
  };
  Point p;
  if (text == "top") {
    p = Point::fixed_at(top_);
  } else if (text.substr(0, 2) == "p:") {
    auto pos = Position::parse(text.substr(2));
    if (!pos) throw fail("malformed position");
    p = Point::fixed_at(*pos);
  } else if (text.substr(0, 2) == "z:") {
    const auto colon = text.rfind(':');
    if (colon < 2) throw fail("expected z:<position>:<index>");
    auto pos = Position::parse(text.substr(2, colon - 2));
    auto j = parse_signed(text.substr(colon + 1));
    if (!pos || !j) throw fail("malformed strand point");
    p = Point::strand_at(*pos, *j);
  } else {
    std::size_t i = 0;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view name = text.substr(0, i);
    std::vector<Coefficient> idx;
    if (i < text.size() && text[i] == '[') {
      const auto close = text.find(']', i);
      if (close == std::string_view::npos) throw fail("unterminated index list");
      std::string_view list = text.substr(i + 1, close - i - 1);
      while (true) {
        const auto comma = list.find(',');
        auto c = Coefficient::parse(list.substr(0, comma));
        if (!c) throw fail("bad index '" + std::string(list.substr(0, comma)) + "'");
        idx.push_back(*c);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
      }
      i = close + 1;
    }
    p = resolve_region(name, idx, text.substr(i), text);
  }
  if (!contains(p)) throw fail("point lies outside " + term_.format());
  return p;
}

Point LadderSpace::resolve_region(std::string_view name, const std::vector<Coefficient>& idx,
                                  std::string_view rest, std::string_view whole) const {
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::locator, "'" + std::string(whole) + "': " + why);
  };
  const unsigned k = term_.cat_depth;
  const bool plain_strand = k == 0 && term_.base == Base::strand;
  const auto strand_index = [&](std::string_view r) {
    if (r.empty() || r.front() != '@') throw fail("strand locator needs @<index>");
    auto j = parse_signed(r.substr(1));
    if (!j) throw fail("bad strand index");
    return *j;
  };
  // Sum of w^(E_s) * (i_s - 1) over the first n indices.
  const auto prefix = [&](std::size_t n) {
    Position pos;
    for (std::size_t s = 0; s < n; ++s) {
      if (!idx[s].positive()) throw fail("family indices start at 1");
      pos = pos + omega_times(level_exponent(static_cast<unsigned>(s + 1)), idx[s] + Coefficient::concrete(-1));
    }
    return pos;
  };

  if (plain_strand && (name == "L" || name == "R")) {
    if (!idx.empty() || !rest.empty()) throw fail("endpoint takes no index");
    return Point::fixed_at(name == "L" ? Position{} : top_);
  }
  if (name == "c") {
    const std::size_t r = idx.size();
    if (r == 0 || r > k || !rest.empty()) throw fail("c takes 1.." + std::to_string(k) + " indices");
    if (r > 1 && !idx.back().positive()) throw fail("inner gluing indices start at 1");
    if (idx.back() < Coefficient::concrete(0)) throw fail("negative index");
    return Point::fixed_at(prefix(r - 1) + omega_times(level_exponent(static_cast<unsigned>(r)), idx.back()));
  }
  if (name == "S" && term_.base == Base::strand) {
    if (idx.size() != k) throw fail("S takes " + std::to_string(k) + " indices");
    return Point::strand_at(prefix(k), strand_index(rest));
  }
  if ((name == "r" || name == "B") && term_.base == Base::ramp) {
    if (idx.size() != k + 1) throw fail(std::string(name) + " takes " + std::to_string(k + 1) + " indices");
    const Coefficient b = idx.back();
    if (b.generic || b.offset < 0) throw fail("block index must be a natural number");
    const auto block = static_cast<std::uint32_t>(b.offset);
    const Position base = prefix(k);
    const Position start = block == 0 ? Position{} : Position::omega_power(OrdinalCNF::finite(block));
    if (name == "r") {
      if (!rest.empty()) throw fail("r takes no suffix");
      if (k > 0 && block == 0) throw fail("r[...,0] is a gluing point; use c");
      return Point::fixed_at(base + start);
    }
    if (rest.empty() || rest.front() != '.') throw fail("B needs .<locator> inside the block");
    const auto sub = build({Base::strand, block + 1});
    const Point local = sub.parse_locator(rest.substr(1));
    if (local.position == sub.top()) throw fail("block top is the next boundary; use r");
    return {local.kind, base + start + local.position, local.index};
  }
  if (name == "S" && plain_strand) return Point::strand_at(Position{}, strand_index(rest));
  throw fail("unknown region '" + std::string(name) + "' in " + term_.format());
}

std::string LadderSpace::describe(const Point& p) const {
  const bool plain_strand = term_.cat_depth == 0 && term_.base == Base::strand;
  if (p.is_fixed() && p.position == top_) return plain_strand ? "R" : "top";
  const auto at = [&](std::string s) { return p.is_fixed() ? s : s + "@" + std::to_string(p.index); };
  std::vector<Coefficient> path;
  Position rem = p.position;
  for (unsigned s = 1; s <= term_.cat_depth; ++s) {
    const OrdinalCNF e = level_exponent(s);
    const Coefficient q = rem.coefficient_at(e);
    rem = without_term(rem, e);
    if (p.is_fixed() && rem.is_zero()) {
      path.push_back(q);
      return "c[" + join(path) + "]";
    }
    path.push_back(q + Coefficient::concrete(1));
  }
  if (term_.base == Base::strand) {
    if (plain_strand) return p.is_fixed() ? "L" : at("S");
    return at("S[" + join(path) + "]");
  }
  const std::uint32_t block = rem.is_zero() ? 0 : *rem.terms().front().exponent.finite_value();
  path.push_back(Coefficient::concrete(block));
  if (p.is_fixed() && (rem.is_zero() || (block > 0 && rem == Position::omega_power(OrdinalCNF::finite(block))))) {
    return "r[" + join(path) + "]";
  }
  const Position local = block == 0 ? rem : drop_leading_unit(rem);
  const auto sub = build({Base::strand, block + 1});
  return "B[" + join(path) + "]." + sub.describe({p.kind, local, p.index});
}

}  // namespace fixfactor::ladder
