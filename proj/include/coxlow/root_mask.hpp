#ifndef COXLOW_ROOT_MASK_HPP_
#define COXLOW_ROOT_MASK_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coxlow {

// Subset of a fixed, indexed root set (the small roots). Bit i stands for
// the root with index i.
class RootMask {
 public:
  RootMask() = default;
  explicit RootMask(std::size_t universe)
      : universe_(universe), blocks_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void set(std::size_t i) { blocks_[i / 64] |= bit(i); }
  void reset(std::size_t i) { blocks_[i / 64] &= ~bit(i); }
  bool test(std::size_t i) const { return (blocks_[i / 64] & bit(i)) != 0; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }
  bool empty() const noexcept { return count() == 0; }

  bool is_subset_of(RootMask const& other) const {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if ((blocks_[k] & ~other.blocks_[k]) != 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < universe_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  // Bit 0 first, e.g. "1010" for {0, 2} in a universe of four.
  std::string bits() const {
    std::string s(universe_, '0');
    for (std::size_t i = 0; i < universe_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  bool operator==(RootMask const&) const = default;
  std::strong_ordering operator<=>(RootMask const& other) const {
    if (auto c = universe_ <=> other.universe_; c != 0) return c;
    // Order by bit string so that index 0 is the most significant position.
    for (std::size_t i = 0; i < universe_; ++i) {
      bool a = test(i), b = other.test(i);
      if (a != b) return a ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto b : blocks_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(b);
    return h;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct RootMaskHash {
  std::size_t operator()(RootMask const& m) const noexcept { return m.hash(); }
};

}  // namespace coxlow

#endif  // COXLOW_ROOT_MASK_HPP_
