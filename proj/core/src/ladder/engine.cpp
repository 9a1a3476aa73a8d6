#include "fixfactor/ladder/engine.hpp"

#include <stdexcept>

#include "fixfactor/errors.hpp"

namespace fixfactor::ladder {

namespace {

// Neighbourhood pieces of p(g) that shrink as the neighbourhood does.
enum class Transient { forward_tail, backward_tail, approach };

}  // namespace

RegionSet ladder_aorb0(const LadderSpace& space, const Point& x) {
  if (!space.contains(x)) throw Error(ErrorCode::locator, x.key() + " is not a point of " + space.term().format());
  const Position& g = x.position;
  if (!x.is_fixed()) {
    // {z} is open; its orbit is the forward tail, whose closure adds p(g).
    return RegionSet({Piece::tail(g, x.index), Piece::point(g)});
  }
  std::vector<Transient> transient;
  if (g < space.top()) transient.push_back(Transient::forward_tail);
  if (g.is_successor()) transient.push_back(Transient::backward_tail);
  if (g.is_limit()) transient.push_back(Transient::approach);

  std::vector<Piece> fixed{Piece::point(g)};
  for (Transient t : transient) {
    // The orbit of a backward tail sweeps its whole strand, independently
    // of how short the tail is. Forward tails and approach cells are
    // invariant and shrink to nothing; their closures only add p(g).
    if (t == Transient::backward_tail) fixed.push_back(Piece::strand(*g.predecessor()));
  }
  return RegionSet(std::move(fixed)).closure();
}

SymPartition degree_zero(const LadderSpace& space) {
  const Position& top = space.top();
  if (ladder_aorb0(space, Point::fixed_at(top)).lowest() < top) return SymPartition::single(space);

  // A boundary at d survives when no approximating orbit of a point at or
  // just above d reaches below d. This only depends on the lowest exponent
  // of d, so one generic representative w^e * m per exponent suffices.
  const auto straddled = [&](const OrdinalCNF& e) {
    const Position d = Position::omega_power(e, Coefficient::m());
    for (const Point& p : {Point::fixed_at(d), Point::strand_at(d, 0), Point::fixed_at(d.successor())}) {
      if (space.contains(p) && ladder_aorb0(space, p).lowest() < d) return true;
    }
    return false;
  };
  std::optional<OrdinalCNF> threshold;
  for (const auto& e : ordinals_below(space.top_exponent(), 3)) {
    const bool s = straddled(e);
    if (!s && !threshold) threshold = e;
    if (s && threshold) throw std::logic_error("boundary pattern is not a threshold in the lowest exponent");
  }
  return SymPartition::blocks(space, threshold.value_or(space.top_exponent()));
}

RegionSet ladder_aorb_succ(const LadderSpace& space, const SymPartition& /*previous*/, const Point& x) {
  if (!space.contains(x)) throw Error(ErrorCode::locator, x.key() + " is not a point of " + space.term().format());
  // Least open saturated neighbourhood: every class starting at s > 0 has
  // p(s) in the closure of the cells just below s, so an open saturated set
  // holding the class also holds the class below. By well-foundedness the
  // descent ends at the class of 0, giving an initial segment [0, t).
  // sorb-closure of [0, t): the closure adds p(t), whose class ends above
  // t; ascending through class ends and their limits reaches the top.
  // Both arguments hold for every interval partition.
  return RegionSet::whole(space);
}

SymPartition successor_step(const LadderSpace& space, const SymPartition& previous) {
  if (previous.is_single()) return previous;
  const Position unit_m = Position::omega_power(*previous.exponent(), Coefficient::m());
  const RegionSet whole = RegionSet::whole(space);
  bool all_whole = true;
  bool all_own_class = true;
  for (const Point& x : {Point::fixed_at(Position{}), Point::strand_at(Position{}, 0), Point::fixed_at(unit_m),
                         Point::strand_at(unit_m, 0), Point::fixed_at(space.top())}) {
    if (!space.contains(x)) continue;
    const RegionSet a = ladder_aorb_succ(space, previous, x);
    all_whole = all_whole && a == whole;
    all_own_class = all_own_class && a == previous.class_region(x);
  }
  if (all_whole) return SymPartition::single(space);
  if (all_own_class) return previous;
  throw std::logic_error("successor step outside the interval pattern");
}

SymPartition limit_step(const LadderSpace& space, const std::vector<SymPartition>& earlier) {
  std::optional<OrdinalCNF> coarsest;
  for (const auto& p : earlier) {
    if (p.is_single()) return SymPartition::single(space);
    if (!coarsest || *coarsest < *p.exponent()) coarsest = *p.exponent();
  }
  return coarsest ? SymPartition::blocks(space, *coarsest) : SymPartition::single(space);
}

const SymPartition& LadderTrace::at(const OrdinalCNF& d) const {
  for (const auto& e : entries) {
    if (e.degree == d) return e.partition;
  }
  if (stabilization_degree <= d) {
    for (const auto& e : entries) {
      if (e.degree == stabilization_degree) return e.partition;
    }
  }
  throw Error(ErrorCode::degree_cap, "degree " + d.format() + " was not evaluated");
}

LadderTrace ladder_trace(const LadderSpace& space, const TraceOptions& options) {
  LadderTrace trace;
  trace.entries.push_back({OrdinalCNF{}, degree_zero(space)});
  std::vector<SymPartition> since_limit{trace.entries.back().partition};
  unsigned steps = 0;
  while (true) {
    const auto& last = trace.entries.back();
    if (options.max_degree < last.degree) {
      throw Error(ErrorCode::degree_cap, space.term().format() + " is not stationary by degree " +
                                             options.max_degree.format());
    }
    OrdinalCNF next = last.degree.successor();
    SymPartition p = successor_step(space, last.partition);
    if (p == last.partition) {
      trace.stabilization_degree = last.degree;
      trace.entries.push_back({next, std::move(p)});
      return trace;
    }
    if (++steps >= options.horizon) {
      // Jump to the next limit degree: the floor of next to a multiple of w, plus w.
      auto terms = next.terms();
      if (!terms.empty() && terms.back().exponent == 0) terms.pop_back();
      next = OrdinalCNF::from_terms(terms) + OrdinalCNF::omega_power(1);
      since_limit.push_back(p);
      p = limit_step(space, since_limit);
      since_limit.clear();
      steps = 0;
    }
    since_limit.push_back(p);
    trace.entries.push_back({next, std::move(p)});
  }
}

}  // namespace fixfactor::ladder
