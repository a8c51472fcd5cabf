#ifndef PTM_BITSET_HPP
#define PTM_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ptm {

/// Growable bitset used for label sets (after sets, guards) and NFA state sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  void resize(std::size_t size) {
    size_ = size;
    words_.resize((size + 63) / 64, 0);
  }

  bool test(std::size_t i) const noexcept {
    return i < size_ && (words_[i >> 6] >> (i & 63)) & 1U;
  }

  void set(std::size_t i) {
    if (i >= size_) resize(i + 1);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) noexcept {
    if (i < size_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool intersects(const Bitset& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& other) {
    if (other.size_ > size_) resize(other.size_);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
  }

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto x = i < a.words_.size() ? a.words_[i] : 0;
      auto y = i < b.words_.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

using LabelSet = Bitset;
using StateSet = Bitset;

}  // namespace ptm

#endif  // PTM_BITSET_HPP
