#pragma once

// Brute-force reference implementations used by the tests. Everything here
// works straight from the definitions by enumerating subsets, relations and
// maps, and never calls the algorithms under test.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixfactor/partition.hpp"
#include "fixfactor/topology.hpp"

namespace fixfactor::oracle {

using Mask = std::uint64_t;

inline Mask bit(std::size_t x) { return Mask{1} << x; }
inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }
inline Mask mask_of(const PointSet& s) { return s.low_mask(); }
inline PointSet set_of(std::size_t n, Mask m) { return PointSet::from_mask(n, m); }

inline bool le(const FiniteSpace& s, std::size_t x, std::size_t y) { return s.specializes(x, y); }

// Up-closed: x in S and x <= y imply y in S.
inline bool is_open(const FiniteSpace& s, Mask m) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!(m & bit(x))) continue;
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (le(s, x, y) && !(m & bit(y))) return false;
    }
  }
  return true;
}

inline bool is_closed(const FiniteSpace& s, Mask m) { return is_open(s, full_mask(s.size()) & ~m); }

inline Mask image(const FiniteSystem& sys, Mask m) {
  Mask out = 0;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    if (m & bit(x)) out |= bit(sys.map(x));
  }
  return out;
}

inline bool is_invariant(const FiniteSystem& sys, Mask m) { return (image(sys, m) & ~m) == 0; }

// Contains an open set containing x; the smallest such set is everything
// above x.
inline bool is_neighbourhood(const FiniteSpace& s, Mask m, std::size_t x) {
  for (std::size_t y = 0; y < s.size(); ++y) {
    if (le(s, x, y) && !(m & bit(y))) return false;
  }
  return true;
}

inline bool is_saturated(const std::vector<std::size_t>& labels, Mask m) {
  for (std::size_t x = 0; x < labels.size(); ++x) {
    for (std::size_t y = 0; y < labels.size(); ++y) {
      if (labels[x] == labels[y] && (m & bit(x)) && !(m & bit(y))) return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> labels_of(const Partition& p) {
  std::vector<std::size_t> out(p.universe());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = p.class_of(x);
  return out;
}

// Intersection of every subset satisfying pred; the full set when none does.
inline Mask intersect_all(std::size_t n, const std::function<bool(Mask)>& pred) {
  Mask acc = full_mask(n);
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (pred(m)) acc &= m;
  }
  return acc;
}

inline Mask closure(const FiniteSpace& s, Mask m) {
  return intersect_all(s.size(), [&](Mask c) { return (m & ~c) == 0 && is_closed(s, c); });
}

inline Mask interior(const FiniteSpace& s, Mask m) {
  Mask acc = 0;
  for (Mask u = 0; u <= full_mask(s.size()); ++u) {
    if ((u & ~m) == 0 && is_open(s, u)) acc |= u;
  }
  return acc;
}

inline Mask aorb0(const FiniteSystem& sys, std::size_t x) {
  const auto& s = sys.space;
  return intersect_all(s.size(), [&](Mask c) {
    return is_closed(s, c) && is_invariant(sys, c) && is_neighbourhood(s, c, x);
  });
}

inline Mask sorb_closure(const FiniteSpace& s, const std::vector<std::size_t>& labels, Mask u) {
  return intersect_all(s.size(), [&](Mask c) {
    return (u & ~c) == 0 && is_closed(s, c) && is_saturated(labels, c);
  });
}

inline Mask aorb_succ(const FiniteSystem& sys, const std::vector<std::size_t>& labels, std::size_t x) {
  const auto& s = sys.space;
  Mask acc = full_mask(s.size());
  for (Mask u = 0; u <= full_mask(s.size()); ++u) {
    if ((u & bit(x)) && is_open(s, u) && is_saturated(labels, u)) acc &= sorb_closure(s, labels, u);
  }
  return acc;
}

// Transitive closure of "the cover members of x and y overlap".
inline std::vector<std::size_t> generated_labels(const std::vector<Mask>& cover) {
  const std::size_t n = cover.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) r[x][y] = (cover[x] & cover[y]) != 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) r[x][y] = r[x][y] || (r[x][k] && r[k][y]);
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (r[x][y]) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  return labels;
}

// Maximal level sets of the continuous invariant real functions. Continuous
// functions into a Hausdorff space are constant on comparable pairs, and
// indicator functions already separate, so two points share a level set
// iff no invariant clopen-for-comparability set holds one but not the other.
inline std::vector<std::size_t> level_set_labels(const FiniteSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<Mask> separators;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (le(sys.space, x, y) && (((m >> x) ^ (m >> y)) & 1)) ok = false;
      }
      if (((m >> x) ^ (m >> sys.map(x))) & 1) ok = false;
    }
    if (ok) separators.push_back(m);
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      bool same = true;
      for (Mask f : separators) same = same && (((f >> x) ^ (f >> y)) & 1) == 0;
      if (same) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  return labels;
}

inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if ((a[x] == a[y]) != (b[x] == b[y])) return false;
    }
  }
  return true;
}

inline std::size_t count_classes(const std::vector<std::size_t>& labels) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < labels.size(); ++x) c += labels[x] == x ? 1 : 0;
  return c;
}

// Intersection of the invariant neighbourhoods of m.
inline Mask invariant_core(const FiniteSystem& sys, Mask m) {
  const auto& s = sys.space;
  return intersect_all(s.size(), [&](Mask c) {
    if (!is_invariant(sys, c)) return false;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if ((m & bit(x)) && !is_neighbourhood(s, c, x)) return false;
    }
    return true;
  });
}

inline bool plain_stable(const FiniteSystem& sys, Mask m) { return invariant_core(sys, m) == m; }

// M equals the intersection, over open saturated U containing M, of the
// sorb-closures of U.
inline bool stable_for(const FiniteSystem& sys, const std::vector<std::size_t>& labels, Mask m) {
  const auto& s = sys.space;
  Mask acc = full_mask(s.size());
  for (Mask u = 0; u <= full_mask(s.size()); ++u) {
    if ((m & ~u) == 0 && is_open(s, u) && is_saturated(labels, u)) acc &= sorb_closure(s, labels, u);
  }
  return acc == m;
}

// Every reflexive transitive relation on n labeled points, as up-set masks.
inline std::vector<std::vector<Mask>> preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) offdiag.emplace_back(x, y);
    }
  }
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << offdiag.size()); ++r) {
    std::vector<Mask> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = bit(x);
    for (std::size_t k = 0; k < offdiag.size(); ++k) {
      if (r >> k & 1) up[offdiag[k].first] |= bit(offdiag[k].second);
    }
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x) {
      for (std::size_t y = 0; y < n && transitive; ++y) {
        if ((up[x] & bit(y)) && (up[y] & ~up[x])) transitive = false;
      }
    }
    if (transitive) out.push_back(std::move(up));
  }
  return out;
}

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

inline FiniteSpace space_of(const std::vector<Mask>& up) {
  std::vector<FiniteSpace::NamePair> pairs;
  const auto pts = names(up.size());
  for (std::size_t x = 0; x < up.size(); ++x) {
    for (std::size_t y = 0; y < up.size(); ++y) {
      if (x != y && (up[x] & bit(y))) pairs.emplace_back(pts[x], pts[y]);
    }
  }
  return FiniteSpace::build(pts, pairs);
}

// All n^n total maps that preserve the relation.
inline std::vector<std::vector<std::size_t>> monotone_maps(const FiniteSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (le(s, x, y) && !le(s, f[x], f[y])) ok = false;
      }
    }
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Every system on at most max_points points, enumerated without the census
// module.
inline void for_each_system(std::size_t max_points, const std::function<void(const FiniteSystem&)>& visit) {
  for (std::size_t n = 1; n <= max_points; ++n) {
    for (const auto& up : preorders(n)) {
      const FiniteSpace space = space_of(up);
      for (auto& f : monotone_maps(space)) visit(make_system(space, f));
    }
  }
}

inline std::vector<FiniteSystem> all_systems(std::size_t max_points) {
  std::vector<FiniteSystem> out;
  for_each_system(max_points, [&](const FiniteSystem& s) { out.push_back(s); });
  return out;
}

}  // namespace fixfactor::oracle
