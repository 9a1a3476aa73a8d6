#include "fixfactor/point_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace fixfactor {

PointSet::PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(x);
  return s;
}

PointSet PointSet::singleton(std::size_t universe, std::size_t x) {
  PointSet s(universe);
  s.insert(x);
  return s;
}

PointSet PointSet::from_mask(std::size_t universe, std::uint64_t mask) {
  assert(universe <= 64);
  PointSet s(universe);
  if (!s.words_.empty()) {
    s.words_[0] = universe == 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
  }
  return s;
}

std::size_t PointSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t PointSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

PointSet& PointSet::operator|=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

PointSet PointSet::complement() const { return full(universe_) - *this; }

bool operator<(const PointSet& a, const PointSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace fixfactor
