#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixfactor/errors.hpp"

namespace fixfactor {

template <class Pred>
std::vector<Partition> enumerate_partitions_where(std::size_t n, Pred&& pred, std::size_t bound) {
  if (n > bound || n > 30) {
    throw Error(ErrorCode::size, std::to_string(n) + " points exceed the partition search bound " +
                                     std::to_string(bound));
  }
  // Predicate results are cached per subset mask so each block is tested once.
  std::vector<std::int8_t> cache(std::size_t{1} << n, -1);
  auto ok = [&](std::uint64_t mask) {
    auto& c = cache[mask];
    if (c < 0) c = pred(PointSet::from_mask(n, mask)) ? 1 : 0;
    return c == 1;
  };

  std::vector<Partition> out;
  std::vector<std::size_t> labels(n, 0);
  // The least unassigned point picks its block among the remaining points;
  // blocks failing pred are never extended.
  auto recurse = [&](auto&& self, std::uint64_t unassigned, std::size_t next_label) -> void {
    if (unassigned == 0) {
      out.push_back(Partition::from_labels(labels));
      return;
    }
    const std::uint64_t lead = unassigned & (~unassigned + 1);
    const std::uint64_t rest = unassigned & ~lead;
    // Enumerate subsets of rest in increasing numeric order.
    std::uint64_t sub = 0;
    while (true) {
      const std::uint64_t block = sub | lead;
      if (ok(block)) {
        for (std::size_t x = 0; x < n; ++x)
          if ((block >> x) & 1U) labels[x] = next_label;
        self(self, unassigned & ~block, next_label + 1);
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
  };
  recurse(recurse, n == 0 ? 0 : (std::uint64_t{1} << n) - 1, 0);
  return out;
}

}  // namespace fixfactor
