#include "fixfactor/partition.hpp"

#include <numeric>
#include <unordered_map>

namespace fixfactor {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  Partition p;
  const std::size_t n = labels.size();
  p.class_of_.resize(n);
  std::unordered_map<std::size_t, std::size_t> canonical;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = canonical.try_emplace(labels[x], p.classes_.size());
    if (inserted) p.classes_.emplace_back(n);
    p.class_of_[x] = it->second;
    p.classes_[it->second].insert(x);
  }
  return p;
}

Partition Partition::from_union_find(std::size_t n, UnionFind& uf) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = uf.find(x);
  return from_labels(labels);
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::single(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

PointSet Partition::saturate(const PointSet& s) const {
  PointSet out(universe());
  std::vector<bool> seen(classes_.size(), false);
  s.for_each([&](std::size_t x) {
    const std::size_t c = class_of_[x];
    if (!seen[c]) {
      seen[c] = true;
      out |= classes_[c];
    }
  });
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& c : classes_) {
    if (!c.is_subset_of(coarser.class_containing(c.first()))) return false;
  }
  return true;
}

}  // namespace fixfactor
