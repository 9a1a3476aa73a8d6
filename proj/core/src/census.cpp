#include "fixfactor/census.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "fixfactor/errors.hpp"
#include "fixfactor/io.hpp"
#include "fixfactor/stability.hpp"

namespace fixfactor::census {

namespace {

constexpr std::size_t witness_cap = 16;

bool bit(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }

// Relation matrix as one integer, row x holding the up-set of x.
std::uint64_t relation_code(const std::vector<std::uint64_t>& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = up.size();
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t row = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (bit(up[x], y)) row |= std::uint64_t{1} << perm[y];
    }
    code |= row << (perm[x] * n);
  }
  return code;
}

// Minimum relation code over relabelings that sort points by
// (down-degree, up-degree); isomorphic preorders share it.
std::uint64_t canonical_code(const std::vector<std::uint64_t>& up) {
  const std::size_t n = up.size();
  std::vector<std::pair<int, int>> signature(n);
  for (std::size_t x = 0; x < n; ++x) {
    int down = 0;
    for (std::size_t y = 0; y < n; ++y) down += bit(up[y], x) ? 1 : 0;
    signature[x] = {down, std::popcount(up[x])};
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return signature[a] < signature[b]; });
  // Group boundaries of equal signatures in sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && signature[order[j]] == signature[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> perm(n);
  auto recurse = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
      best = std::min(best, relation_code(up, perm));
      return;
    }
    auto [lo, hi] = groups[g];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, g + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return names;
}

namespace {

void require_census_size(std::size_t n, bool up_to_iso) {
  const std::size_t limit = up_to_iso ? max_iso_points : max_labeled_points;
  if (n == 0 || n > limit) {
    throw Error(ErrorCode::size, "census supports 1.." + std::to_string(limit) + " points" +
                                     (up_to_iso ? "" : " (6 only up to isomorphism)"));
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate_preorders(std::size_t n, bool up_to_iso) {
  require_census_size(n, up_to_iso);
  // Extend each preorder on the first k points by point k, choosing its
  // down-set D and up-set U among the old points with D x U inside the order.
  std::vector<std::vector<std::uint64_t>> current = {{1}};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::vector<std::uint64_t>> next;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (const auto& up : current) {
      std::vector<std::uint64_t> down(k, 0);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          if (bit(up[x], y)) down[y] |= std::uint64_t{1} << x;
      auto is_down = [&](std::uint64_t d) {
        for (std::size_t y = 0; y < k; ++y)
          if (bit(d, y) && (down[y] & ~d) != 0) return false;
        return true;
      };
      auto is_up = [&](std::uint64_t u) {
        for (std::size_t x = 0; x < k; ++x)
          if (bit(u, x) && (up[x] & ~u) != 0) return false;
        return true;
      };
      for (std::uint64_t d = 0; d < subsets; ++d) {
        if (!is_down(d)) continue;
        for (std::uint64_t u = 0; u < subsets; ++u) {
          if (!is_up(u)) continue;
          bool consistent = true;
          for (std::size_t x = 0; x < k && consistent; ++x)
            if (bit(d, x) && (u & ~up[x]) != 0) consistent = false;
          if (!consistent) continue;
          std::vector<std::uint64_t> ext(up);
          for (std::size_t x = 0; x < k; ++x)
            if (bit(d, x)) ext[x] |= std::uint64_t{1} << k;
          ext.push_back(u | (std::uint64_t{1} << k));
          next.push_back(std::move(ext));
        }
      }
    }
    current = std::move(next);
  }
  if (!up_to_iso) return current;

  std::vector<std::vector<std::uint64_t>> unique;
  std::vector<std::uint64_t> seen;
  for (auto& up : current) {
    const std::uint64_t code = canonical_code(up);
    auto it = std::lower_bound(seen.begin(), seen.end(), code);
    if (it != seen.end() && *it == code) continue;
    seen.insert(it, code);
    unique.push_back(std::move(up));
  }
  return unique;
}

FiniteSpace space_from_masks(const std::vector<std::uint64_t>& up) {
  const std::size_t n = up.size();
  std::vector<PointSet> sets;
  for (auto m : up) sets.push_back(PointSet::from_mask(n, m));
  return FiniteSpace::from_up_sets(point_names(n), std::move(sets));
}

std::vector<std::vector<std::size_t>> continuous_maps(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(n, 0);
  auto recurse = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(image);
      return;
    }
    for (std::size_t fx = 0; fx < n; ++fx) {
      image[x] = fx;
      bool ok = true;
      for (std::size_t y = 0; y < x && ok; ++y) {
        if (space.specializes(x, y) && !space.specializes(fx, image[y])) ok = false;
        if (space.specializes(y, x) && !space.specializes(image[y], fx)) ok = false;
      }
      if (ok) self(self, x + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

void for_each_system(std::size_t n, bool up_to_iso, const std::function<void(FiniteSystem)>& visit) {
  for (const auto& up : enumerate_preorders(n, up_to_iso)) {
    FiniteSpace space = space_from_masks(up);
    for (auto& images : continuous_maps(space)) visit(make_system(space, std::move(images)));
  }
}

std::vector<FiniteSystem> enumerate_systems(std::size_t n, bool up_to_iso) {
  std::vector<FiniteSystem> out;
  for_each_system(n, up_to_iso, [&](FiniteSystem s) { out.push_back(std::move(s)); });
  return out;
}

std::vector<FiniteSystem> sample_systems(std::size_t n, std::size_t count, std::uint64_t seed) {
  const auto preorders = enumerate_preorders(n);
  std::mt19937_64 rng(seed);
  std::vector<FiniteSystem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Plain modulo keeps the sample identical across standard libraries.
    const auto& up = preorders[rng() % preorders.size()];
    FiniteSpace space = space_from_masks(up);
    auto maps = continuous_maps(space);
    out.push_back(make_system(std::move(space), std::move(maps[rng() % maps.size()])));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct Facts {
  const FiniteSystem& sys;
  DegreeTrace trace;
  Partition oracle;
};

using CheckFn = std::optional<std::string> (*)(const Facts&);

std::string set_text(const FiniteSpace& space, const PointSet& s) { return io::point_set_to_json(space, s).dump(); }

std::string partition_text(const FiniteSpace& space, const Partition& p) {
  return io::partition_to_json(space, p).dump();
}

std::optional<std::string> check_oracle_equivalence(const Facts& f) {
  if (f.trace.stationary() == f.oracle) return std::nullopt;
  return "stationary " + partition_text(f.sys.space, f.trace.stationary()) + " != oracle " +
         partition_text(f.sys.space, f.oracle);
}

std::optional<std::string> check_hausdorff_quotient(const Facts& f) {
  const auto q = quotient(f.sys, f.trace.stationary());
  if (!q.quotient.space.is_discrete()) return "quotient by the stationary partition is not discrete";
  for (std::size_t x = 0; x < f.sys.size(); ++x) {
    if (q.projection[f.sys.map(x)] != q.quotient.map(q.projection[x])) return "projection does not commute with the map";
  }
  // Fibres of the projection must be the maximal level sets.
  if (!(Partition::from_labels(q.projection) == f.oracle)) return "quotient fibres differ from the maximal level sets";
  return std::nullopt;
}

std::optional<std::string> check_degree_zero(const Facts& f) {
  if (f.trace.stabilization_degree.is_zero()) return std::nullopt;
  return "stabilizes at degree " + f.trace.stabilization_degree.format();
}

std::optional<std::string> check_definition_direct(const Facts& f) {
  const auto& sys = f.sys;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const PointSet fast = aorb0(sys, x);
    const PointSet ref = reference_intersection(sys, ReferenceMode::base, x);
    if (fast != ref) {
      return "aorb0(" + sys.space.name(x) + ") = " + set_text(sys.space, fast) + " but definition gives " +
             set_text(sys.space, ref);
    }
  }
  std::vector<Partition> partitions = {Partition::identity(sys.size()), f.oracle};
  for (const auto& e : f.trace.entries) partitions.push_back(e.partition);
  for (const auto& p : partitions) {
    for (std::size_t x = 0; x < sys.size(); ++x) {
      const PointSet fast = aorb_succ(sys, p, x);
      const PointSet ref = reference_intersection(sys, ReferenceMode::succ, x, &p);
      if (fast != ref) {
        return "aorb_succ(" + sys.space.name(x) + ") under " + partition_text(sys.space, p) + " = " +
               set_text(sys.space, fast) + " but definition gives " + set_text(sys.space, ref);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_absolute_stability_finest(const Facts& f) {
  for (const auto& cls : f.oracle.classes()) {
    if (!is_absolutely_stable(f.sys, cls, f.trace)) {
      return "maximal level set " + set_text(f.sys.space, cls) + " is not absolutely stable";
    }
  }
  const auto valid = abs_stable_partitions(f.sys);
  for (const auto& p : valid) {
    if (!f.oracle.refines(p)) {
      return "absolutely stable partition " + partition_text(f.sys.space, p) + " is not coarser than the oracle";
    }
  }
  const Partition finest = finest_abs_stable_partition(f.sys);
  if (!(finest == f.oracle)) return "finest absolutely stable partition " + partition_text(f.sys.space, finest);
  return std::nullopt;
}

std::vector<PointSet> nonempty_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(PointSet::from_mask(n, m));
  return out;
}

std::optional<std::string> check_stability_monotonicity(const Facts& f) {
  for (const auto& m : nonempty_subsets(f.sys.size())) {
    for (std::size_t i = 0; i < f.trace.entries.size(); ++i) {
      if (!is_stable_degree(f.sys, m, f.trace.entries[i].degree, f.trace)) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (!is_stable_degree(f.sys, m, f.trace.entries[j].degree, f.trace)) {
          return set_text(f.sys.space, m) + " is stable of degree " + f.trace.entries[i].degree.format() +
                 " but not of degree " + f.trace.entries[j].degree.format();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_containment_plain(const Facts& f) {
  const Partition& p0 = f.trace.entries.front().partition;
  for (const auto& m : nonempty_subsets(f.sys.size())) {
    if (!is_lyapunov_stable(f.sys, m)) continue;
    std::optional<std::string> failure;
    m.for_each([&](std::size_t x) {
      if (failure) return;
      const PointSet a = aorb0(f.sys, x);
      if (!a.is_subset_of(m)) {
        failure = "stable set " + set_text(f.sys.space, m) + " misses part of aorb0(" + f.sys.space.name(x) +
                  ") = " + set_text(f.sys.space, a);
      } else if (!p0.class_containing(x).is_subset_of(m)) {
        failure = "stable set " + set_text(f.sys.space, m) + " misses part of sorb0(" + f.sys.space.name(x) + ")";
      }
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

std::optional<std::string> check_containment_degree(const Facts& f) {
  const auto& entries = f.trace.entries;
  for (const auto& m : nonempty_subsets(f.sys.size())) {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (!is_stable_degree(f.sys, m, entries[i].degree, f.trace)) continue;
      std::optional<std::string> failure;
      m.for_each([&](std::size_t x) {
        if (failure) return;
        const PointSet a = aorb_succ(f.sys, entries[i].partition, x);
        if (!a.is_subset_of(m) || !entries[i + 1].partition.class_containing(x).is_subset_of(m)) {
          failure = "degree-" + entries[i].degree.format() + " stable set " + set_text(f.sys.space, m) +
                    " misses part of the next-degree orbit of " + f.sys.space.name(x);
        }
      });
      if (failure) return failure;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_ergodicity(const Facts& f) {
  const bool ergodic = is_topologically_ergodic(f.sys);
  const bool one_dim = f.oracle.class_count() == 1;
  const bool trivial = finest_abs_stable_partition(f.sys).class_count() == 1;
  if (ergodic == one_dim && one_dim == trivial) return std::nullopt;
  return std::string("ergodic=") + (ergodic ? "true" : "false") + " dim_fix_one=" + (one_dim ? "true" : "false") +
         " finest_trivial=" + (trivial ? "true" : "false");
}

// Definition-direct prolongations over every neighborhood of x.
std::uint64_t orbit_mask(const FiniteSystem& sys, std::uint64_t m) {
  while (true) {
    std::uint64_t next = m;
    for (std::size_t y = 0; y < sys.size(); ++y)
      if (bit(m, y)) next |= std::uint64_t{1} << sys.map(y);
    if (next == m) return m;
    m = next;
  }
}

std::uint64_t closure_mask(const FiniteSystem& sys, std::uint64_t m) {
  std::uint64_t out = 0;
  for (std::size_t y = 0; y < sys.size(); ++y)
    if (bit(m, y))
      for (std::size_t z = 0; z < sys.size(); ++z)
        if (sys.space.specializes(z, y)) out |= std::uint64_t{1} << z;
  return out;
}

template <class F>
std::uint64_t intersect_over_neighborhoods(const FiniteSystem& sys, std::size_t x, F&& value) {
  const std::size_t n = sys.size();
  std::uint64_t ux = 0;
  for (std::size_t y = 0; y < n; ++y)
    if (sys.space.specializes(x, y)) ux |= std::uint64_t{1} << y;
  std::uint64_t acc = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u)
    if ((ux & ~u) == 0) acc &= value(u);
  return acc;
}

std::optional<std::string> check_prolongation(const Facts& f) {
  const auto& sys = f.sys;
  const std::size_t n = sys.size();
  std::vector<std::uint64_t> d1_ref(n);
  for (std::size_t x = 0; x < n; ++x) {
    d1_ref[x] = intersect_over_neighborhoods(sys, x, [&](std::uint64_t u) { return closure_mask(sys, orbit_mask(sys, u)); });
  }
  auto d1_of_set = [&](std::uint64_t m) {
    std::uint64_t out = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (bit(m, y)) out |= d1_ref[y];
    return out;
  };
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t d2_ref = intersect_over_neighborhoods(sys, x, [&](std::uint64_t u) {
      std::uint64_t acc = u;
      std::uint64_t layer = u;
      while (true) {
        layer = d1_of_set(layer);
        if ((layer & ~acc) == 0) break;
        acc |= layer;
      }
      return closure_mask(sys, acc);
    });
    const PointSet a0 = aorb0(sys, x);
    const PointSet d1 = prolongation_d1(sys, x);
    const PointSet d2 = prolongation_d2(sys, x);
    const std::string at = "(" + sys.space.name(x) + ")";
    if (PointSet::from_mask(n, d1_ref[x]) != a0) return "definition-direct D1" + at + " differs from aorb0";
    if (d1 != a0) return "D1" + at + " differs from aorb0";
    if (PointSet::from_mask(n, d2_ref) != d1) return "definition-direct D2" + at + " differs from D1";
    if (d2 != d1) return "D2" + at + " differs from D1";
  }
  return std::nullopt;
}

std::optional<std::string> check_trace_invariants(const Facts& f) {
  const auto& sys = f.sys;
  const auto& entries = f.trace.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Partition& p = entries[i].partition;
    const std::string at = "degree " + entries[i].degree.format();
    if (i > 0 && !entries[i - 1].partition.refines(p)) return at + ": earlier classes not contained in later ones";
    if (!p.refines(f.oracle)) return at + ": partition does not refine the maximal level sets";
    for (std::size_t x = 0; x < sys.size(); ++x) {
      if (p.class_of(sys.map(x)) != p.class_of(x)) return at + ": class of " + sys.space.name(x) + " not invariant";
    }
    for (const auto& s : nonempty_subsets(sys.size())) {
      const PointSet sat = p.saturate(s);
      const bool inside = sat.is_subset_of(s);
      const bool equal = sat == s;
      bool union_of_classes = true;
      for (const auto& c : p.classes()) {
        if (c.intersects(s) && !c.is_subset_of(s)) union_of_classes = false;
      }
      if (inside != equal || equal != union_of_classes) return at + ": saturation equivalences fail";
    }
  }
  // Preimage of the intersection of closed neighborhoods of [x] in the
  // stationary quotient equals the next-degree approximating orbit.
  const Partition& stationary = f.trace.stationary();
  const auto q = quotient(sys, stationary);
  const std::size_t k = q.quotient.size();
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const std::size_t cx = q.projection[x];
    std::uint64_t acc = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      const PointSet vs = PointSet::from_mask(k, v);
      const bool closed = q.quotient.space.is_closed(vs);
      const bool neighborhood = q.quotient.space.minimal_open(cx).is_subset_of(vs);
      if (closed && neighborhood) acc &= v;
    }
    PointSet preimage(sys.size());
    for (std::size_t y = 0; y < sys.size(); ++y)
      if (bit(acc, q.projection[y])) preimage.insert(y);
    if (preimage != aorb_succ(sys, stationary, x)) {
      return "quotient-neighborhood identity fails at " + sys.space.name(x);
    }
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"oracle-equivalence", check_oracle_equivalence},
      {"hausdorff-quotient", check_hausdorff_quotient},
      {"stabilization-degree-0", check_degree_zero},
      {"definition-direct", check_definition_direct},
      {"absolute-stability-finest", check_absolute_stability_finest},
      {"stability-monotonicity", check_stability_monotonicity},
      {"containment-lemma-plain", check_containment_plain},
      {"containment-lemma-degree", check_containment_degree},
      {"ergodicity-equivalence", check_ergodicity},
      {"prolongation", check_prolongation},
      {"trace-invariants", check_trace_invariants},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& r : requested) {
    if (r == "all") return check_names();
    if (std::find(check_names().begin(), check_names().end(), r) == check_names().end()) {
      throw Error(ErrorCode::usage, "unknown check '" + r + "'");
    }
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::vector<CheckOutcome> run_checks(const FiniteSystem& sys, const std::vector<std::string>& checks) {
  const auto selected = resolve_checks(checks);
  Facts facts{sys, stabilize(sys), oracle_partition(sys)};
  std::vector<CheckOutcome> out;
  for (const auto& [name, fn] : registry()) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    auto failure = fn(facts);
    out.push_back({name, !failure.has_value(), failure.value_or("")});
  }
  return out;
}

bool CensusReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

namespace {

struct SystemResult {
  std::vector<CheckOutcome> outcomes;
  std::string degree;
  bool ergodic = false;
  std::optional<Partition> witness;
};

SystemResult evaluate(const FiniteSystem& sys, const std::vector<std::string>& checks) {
  SystemResult r;
  r.outcomes = run_checks(sys, checks);
  const DegreeTrace trace = stabilize(sys);
  r.degree = trace.stabilization_degree.format();
  r.ergodic = trace.stationary().class_count() == 1;
  r.witness = finer_plain_stable_witness(sys);
  return r;
}

}  // namespace

CensusReport run_census(const CensusOptions& options) {
  require_census_size(options.points, options.up_to_iso);
  const auto checks = resolve_checks(options.checks);
  CensusReport report;
  report.points = options.points;
  report.up_to_iso = options.up_to_iso;
  for (const auto& name : checks) report.checks[name] = {};
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  for (std::size_t n = 1; n <= options.points; ++n) {
    const auto preorders = enumerate_preorders(n, options.up_to_iso);
    std::vector<FiniteSystem> systems;
    for (const auto& up : preorders) {
      FiniteSpace space = space_from_masks(up);
      for (auto& images : continuous_maps(space)) systems.push_back(make_system(space, std::move(images)));
    }
    // Strided work split; results land in per-system slots, so the merge
    // below is independent of the job count.
    std::vector<SystemResult> results(systems.size());
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < systems.size(); i += jobs) results[i] = evaluate(systems[i], checks);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);

    report.sizes.push_back({n, preorders.size(), systems.size()});
    report.topologies += preorders.size();
    report.systems += systems.size();
    for (std::size_t i = 0; i < systems.size(); ++i) {
      const auto& r = results[i];
      for (const auto& o : r.outcomes) {
        auto& tally = report.checks[o.check];
        if (o.passed) {
          ++tally.passed;
        } else {
          ++tally.failed;
          if (!tally.counterexample) tally.counterexample = Counterexample{n, systems[i], o.detail};
        }
      }
      ++report.stabilization_histogram[r.degree];
      if (r.ergodic) ++report.ergodic;
      if (r.witness) {
        ++report.finer_witness_count;
        if (report.finer_witnesses.size() < witness_cap) report.finer_witnesses.push_back({systems[i], *r.witness});
      }
    }
  }
  return report;
}

nlohmann::json report_to_json(const CensusReport& report) {
  using nlohmann::json;
  json sizes = json::array();
  for (const auto& s : report.sizes) {
    sizes.push_back({{"points", s.points}, {"topologies", s.topologies}, {"systems", s.systems}});
  }
  json checks = json::object();
  for (const auto& [name, tally] : report.checks) {
    json entry = {{"passed", tally.passed}, {"failed", tally.failed}, {"counterexample", nullptr}};
    if (tally.counterexample) {
      entry["counterexample"] = {{"points", tally.counterexample->points},
                                 {"system", io::system_to_json(tally.counterexample->system)},
                                 {"detail", tally.counterexample->detail}};
    }
    checks[name] = std::move(entry);
  }
  json witnesses = json::array();
  for (const auto& w : report.finer_witnesses) {
    witnesses.push_back({{"system", io::system_to_json(w.system)},
                         {"partition", io::partition_to_json(w.system.space, w.partition)}});
  }
  return {{"points", report.points},
          {"up_to_iso", report.up_to_iso},
          {"sizes", std::move(sizes)},
          {"topologies", report.topologies},
          {"systems", report.systems},
          {"checks", std::move(checks)},
          {"stabilization_degree_histogram", report.stabilization_histogram},
          {"ergodic", report.ergodic},
          {"plain_stable_finer_witness_count", report.finer_witness_count},
          {"plain_stable_finer_witnesses", std::move(witnesses)},
          {"all_passed", report.all_passed()}};
}

}  // namespace fixfactor::census
