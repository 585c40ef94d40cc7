#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lubkit {

/// Fixed-size bitset over {0, ..., size-1} with ordered iteration.
///
/// Used for families of subsets (indexed by mask) and for item sets of
/// generic rule systems.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t capacity() const { return size_; }
  bool contains(std::uint64_t i) const {
    return i < size_ && (words_[i >> 6] >> (i & 63) & 1);
  }
  void insert(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool subset_of(const DenseSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  DenseSet& operator|=(const DenseSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  /// Calls f(i) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<std::uint64_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::uint64_t> members() const {
    std::vector<std::uint64_t> out;
    for_each([&](std::uint64_t i) { out.push_back(i); });
    return out;
  }

  bool operator==(const DenseSet&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lubkit
