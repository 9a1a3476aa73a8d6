#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixfactor/decomposition.hpp"

namespace fixfactor::census {

// Largest labeled enumeration; one more point is allowed up to isomorphism.
inline constexpr std::size_t max_labeled_points = 5;
inline constexpr std::size_t max_iso_points = 6;

// Point names used by generated systems: "a", "b", ...
std::vector<std::string> point_names(std::size_t n);

// Every preorder on n labeled points as up-set bit masks, in a fixed order.
// With up_to_iso only the first member of each isomorphism class is kept.
std::vector<std::vector<std::uint64_t>> enumerate_preorders(std::size_t n, bool up_to_iso = false);

FiniteSpace space_from_masks(const std::vector<std::uint64_t>& up);

// All monotone self-maps, in lexicographic order of the image vector.
std::vector<std::vector<std::size_t>> continuous_maps(const FiniteSpace& space);

// Calls visit for every (preorder, continuous map) pair; deterministic order.
// Throws E_SIZE past the enumeration limits.
void for_each_system(std::size_t n, bool up_to_iso, const std::function<void(FiniteSystem)>& visit);
std::vector<FiniteSystem> enumerate_systems(std::size_t n, bool up_to_iso = false);

// Deterministic sample: uniform labeled preorder, then uniform continuous map.
std::vector<FiniteSystem> sample_systems(std::size_t n, std::size_t count, std::uint64_t seed);

// Names accepted by run_checks and run_census; "all" selects every one.
const std::vector<std::string>& check_names();
std::vector<std::string> resolve_checks(const std::vector<std::string>& requested);

struct CheckOutcome {
  std::string check;
  bool passed = true;
  std::string detail;
};

std::vector<CheckOutcome> run_checks(const FiniteSystem& sys, const std::vector<std::string>& checks);

struct Counterexample {
  std::size_t points = 0;
  FiniteSystem system;
  std::string detail;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> counterexample;
};

struct SizeSummary {
  std::size_t points = 0;
  std::size_t topologies = 0;
  std::size_t systems = 0;
};

struct FinerWitness {
  FiniteSystem system;
  Partition partition;
};

struct CensusOptions {
  std::size_t points = 3;
  bool up_to_iso = false;
  std::vector<std::string> checks = {"all"};
  std::size_t jobs = 1;
};

// Sizes 1..points are all visited, so the first counterexample recorded for
// a check comes from the smallest failing size.
struct CensusReport {
  std::size_t points = 0;
  bool up_to_iso = false;
  std::vector<SizeSummary> sizes;
  std::size_t topologies = 0;
  std::size_t systems = 0;
  std::map<std::string, CheckTally> checks;
  std::map<std::string, std::size_t> stabilization_histogram;
  std::size_t ergodic = 0;
  std::size_t finer_witness_count = 0;
  // The first few witnesses in enumeration order.
  std::vector<FinerWitness> finer_witnesses;

  bool all_passed() const;
};

CensusReport run_census(const CensusOptions& options);

nlohmann::json report_to_json(const CensusReport& report);

}  // namespace fixfactor::census
