#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fixfactor {

// Subset of {0, ..., universe-1}; points are addressed by index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, std::size_t x);
  // Bit i of mask selects point i; requires universe <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(std::size_t x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(std::size_t x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const PointSet& other) const noexcept;
  bool intersects(const PointSet& other) const noexcept;
  // Lowest member; universe() when empty.
  std::size_t first() const noexcept;
  std::vector<std::size_t> members() const;
  std::uint64_t low_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  PointSet& operator|=(const PointSet& other) noexcept;
  PointSet& operator&=(const PointSet& other) noexcept;
  PointSet& operator-=(const PointSet& other) noexcept;
  PointSet complement() const;

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;
  // Lexicographic on member lists, for deterministic ordering.
  friend bool operator<(const PointSet& a, const PointSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fixfactor
