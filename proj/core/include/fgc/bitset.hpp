#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fgc {

/// Fixed-size dynamic bitset over element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(std::size_t i) noexcept { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) noexcept { w_[i >> 6] &= ~(1ULL << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  /// True iff every bit of *this is set in o.
  bool subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return w_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace fgc
