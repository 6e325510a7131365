#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace setmosaic {

// Fixed-universe bit set over set-label indices. Zone signatures and the
// segment-counting inner loops live on this type, so it favours word-wise
// operations over generality. The universe size is fixed at construction.
class SetMask {
public:
  SetMask() = default;

  explicit SetMask(std::size_t universe)
      : bits_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return bits_; }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool intersects(const SetMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const SetMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::size_t intersection_count(const SetMask& other) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  // Number of bits set here but not in `prev`: with zone signatures, the
  // number of line segments that start when this column follows `prev`.
  std::size_t count_not_in(const SetMask& prev) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & ~prev.words_[i]));
    return n;
  }

  SetMask& operator|=(const SetMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend bool operator==(const SetMask& a, const SetMask& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace setmosaic
