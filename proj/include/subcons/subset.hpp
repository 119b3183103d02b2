#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "subcons/errors.hpp"

namespace subcons {

// A subset of the ground set {0..n-1}, stored as a word-packed bitmask with a
// cached cardinality. Values are cheap to copy and safe to share across
// threads.
class Subset {
 public:
  Subset() = default;

  explicit Subset(int n) : n_(check_n(n)), words_((n + 63) / 64, 0) {}

  static Subset from_mask(int n, std::uint64_t mask) {
    Subset s(n);
    if (n < 64 && (mask >> n) != 0) {
      throw InstanceError("bitmask has bits outside the ground set");
    }
    s.words_[0] = mask;
    s.card_ = std::popcount(mask);
    return s;
  }

  static Subset full(int n) {
    Subset s(n);
    for (int j = 0; j < n; ++j) s.add(j);
    return s;
  }

  int n() const { return n_; }
  int card() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains(int j) const {
    check_element(j);
    return (words_[j >> 6] >> (j & 63)) & 1u;
  }

  void add(int j) {
    check_element(j);
    std::uint64_t& w = words_[j >> 6];
    std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }

  void remove(int j) {
    check_element(j);
    std::uint64_t& w = words_[j >> 6];
    std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  Subset with(int j) const {
    Subset s = *this;
    s.add(j);
    return s;
  }

  Subset without(int j) const {
    Subset s = *this;
    s.remove(j);
    return s;
  }

  Subset complement() const {
    Subset s = full(n_);
    for (int j : elements()) s.remove(j);
    return s;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(card_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  int intersection_card(const Subset& other) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += std::popcount(words_[w] & other.words_[w]);
    }
    return c;
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  bool operator==(const Subset& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Subset& other) const { return !(*this == other); }

  // Orders subsets by their bitmask value, low elements least significant.
  // Used as the deterministic tie-break everywhere.
  bool lex_less(const Subset& other) const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != other.words_[w]) return words_[w] < other.words_[w];
    }
    return false;
  }

  std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

 private:
  static int check_n(int n) {
    if (n < 1) throw InstanceError("ground set size must be positive");
    return n;
  }
  void check_element(int j) const {
    if (j < 0 || j >= n_) throw InstanceError("element out of ground-set range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
  int card_ = 0;
};

}  // namespace subcons
