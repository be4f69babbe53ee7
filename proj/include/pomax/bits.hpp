#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pomax {

// Runtime-sized bit set over a fixed universe 0..n-1. This is the currency of
// the whole library: present-element subsets, memo keys, order rows.
class SubsetBits {
 public:
  SubsetBits() = default;

  explicit SubsetBits(int n, bool all = false) : n_(n), w_((n + 63) / 64, 0) {
    if (all) {
      for (auto& x : w_) x = ~uint64_t{0};
      trim();
    }
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[size_t(i) >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[size_t(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool operator==(const SubsetBits&) const = default;

  SubsetBits& operator&=(const SubsetBits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  SubsetBits& operator|=(const SubsetBits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // Set difference (and-not).
  SubsetBits& operator-=(const SubsetBits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend SubsetBits operator&(SubsetBits a, const SubsetBits& b) { return a &= b; }
  friend SubsetBits operator|(SubsetBits a, const SubsetBits& b) { return a |= b; }
  friend SubsetBits operator-(SubsetBits a, const SubsetBits& b) { return a -= b; }

  bool intersects(const SubsetBits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const SubsetBits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  // Calls f(i) for each member, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k)
      for (uint64_t x = w_[k]; x; x &= x - 1) f(int(k * 64 + std::countr_zero(x)));
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size_t(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over the words
    for (auto x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    if (n_ == 0) w_.clear();
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct SubsetHash {
  size_t operator()(const SubsetBits& s) const { return s.hash(); }
};

}  // namespace pomax
