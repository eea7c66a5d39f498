#pragma once

// Ground-set subsets as 64-bit element masks, plus the canonical ordering
// (by size, then lexicographic on sorted elements) used for all list output.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcat {

inline constexpr int kMaxElements = 64;

// Subset of {0, ..., 63}.  Elements are identifiers 0..n-1 of some ground
// set whose size n travels separately (normally inside a Matroid).
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet full(int n) {
    if (n < 0 || n > kMaxElements) throw std::invalid_argument("ElemSet::full: bad size");
    return n == kMaxElements ? ElemSet(~0ull) : ElemSet((1ull << n) - 1);
  }
  static ElemSet single(int e) { return ElemSet(bit(e)); }
  static ElemSet of(std::initializer_list<int> es) {
    ElemSet s;
    for (int e : es) s.bits_ |= bit(e);
    return s;
  }
  static ElemSet of(const std::vector<int>& es) {
    ElemSet s;
    for (int e : es) s.bits_ |= bit(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return e >= 0 && e < kMaxElements && (bits_ >> e) & 1; }
  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }

  ElemSet with(int e) const { return ElemSet(bits_ | bit(e)); }
  ElemSet without(int e) const { return ElemSet(bits_ & ~bit(e)); }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElemSet a, ElemSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElemSet a, ElemSet b) { return a.bits_ != b.bits_; }

  // Canonical order: smaller sets first, ties broken lexicographically on the
  // sorted element lists.  For equal-size masks the lex-smaller set is the one
  // owning the lowest differing element.
  friend constexpr bool operator<(ElemSet a, ElemSet b) {
    if (a.bits_ == b.bits_) return false;
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    return (a.bits_ >> std::countr_zero(diff)) & 1;
  }

  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend bool operator!=(iterator a, iterator b) { return a.rest_ != b.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  static constexpr std::uint64_t bit(int e) {
    if (e < 0 || e >= kMaxElements) throw std::invalid_argument("ElemSet: element out of range");
    return 1ull << e;
  }
  std::uint64_t bits_ = 0;
};

// Visits every subset of s, including the empty set and s itself.
template <typename F>
void for_each_subset(ElemSet s, F&& f) {
  std::uint64_t m = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(ElemSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;  // next submask
  }
}

// Visits every k-element subset of s.
template <typename F>
void for_each_subset_of_size(ElemSet s, int k, F&& f) {
  std::vector<int> elems = s.elements();
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElemSet sub;
    for (int i : idx) sub = sub.with(elems[i]);
    f(sub);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Pascal-table binomial; values up to C(64,32) fit in 64 bits.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxElements + 1);
    for (int i = 0; i <= kMaxElements; ++i) {
      t[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (n > kMaxElements) throw std::invalid_argument("binomial: n too large");
  return table[n][k];
}

}  // namespace gcat
