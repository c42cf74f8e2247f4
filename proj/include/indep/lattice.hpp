#pragma once

// Finite ground sets {0..n-1} and subsets of them encoded as bit masks.
//
// Every enumeration in the library walks subsets in ascending numeric order of
// their mask. "Least witness" always means least under that order, applied
// lexicographically to the tuple of an axiom's variables.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace indep {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxGroundSize = 16;

class GroundSet {
 public:
  constexpr GroundSet() = default;
  explicit GroundSet(unsigned size);

  constexpr unsigned size() const noexcept { return size_; }
  constexpr Mask full() const noexcept { return (Mask{1} << size_) - 1; }
  constexpr std::uint32_t subset_count() const noexcept {
    return std::uint32_t{1} << size_;
  }
  constexpr bool contains(Mask bits) const noexcept { return (bits & ~full()) == 0; }

  bool operator==(const GroundSet&) const = default;

 private:
  unsigned size_ = 0;
};

class Subset {
 public:
  constexpr Subset() = default;
  Subset(GroundSet ground, Mask bits);

  static Subset empty(GroundSet g) { return Subset(g, 0); }
  static Subset full(GroundSet g) { return Subset(g, g.full()); }
  static Subset singleton(GroundSet g, unsigned element);
  static Subset of(GroundSet g, std::initializer_list<unsigned> elements);

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr GroundSet ground() const noexcept { return ground_; }

  bool contains(unsigned element) const noexcept {
    return element < 32 && ((bits_ >> element) & 1U) != 0;
  }
  unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  std::vector<unsigned> elements() const;

  // Throws UsageError when the grounds differ.
  bool is_subset_of(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator-(const Subset& other) const;
  Subset complement() const { return Subset(ground_, ~bits_ & ground_.full()); }

  bool operator==(const Subset&) const = default;
  // Numeric order on codes; ground size breaks ties so the order is total.
  std::strong_ordering operator<=>(const Subset& other) const noexcept {
    if (auto c = bits_ <=> other.bits_; c != 0) return c;
    return ground_.size() <=> other.ground_.size();
  }

 private:
  void require_same_ground(const Subset& other) const;

  GroundSet ground_{};
  Mask bits_ = 0;
};

// Ascending-code range over all subsets of a ground set.
class SubsetRange {
 public:
  class iterator {
   public:
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(GroundSet g, std::uint64_t code) : ground_(g), code_(code) {}
    Subset operator*() const { return Subset(ground_, static_cast<Mask>(code_)); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    GroundSet ground_{};
    std::uint64_t code_ = 0;
  };

  explicit SubsetRange(GroundSet g) : ground_(g) {}
  iterator begin() const { return {ground_, 0}; }
  iterator end() const { return {ground_, ground_.subset_count()}; }
  std::size_t size() const { return ground_.subset_count(); }

 private:
  GroundSet ground_;
};

inline SubsetRange enumerate_subsets(GroundSet g) { return SubsetRange(g); }

// Mask-level helpers used by the scanning loops.

inline unsigned popcount(Mask m) noexcept { return static_cast<unsigned>(std::popcount(m)); }
inline bool is_submask(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
inline bool is_singleton(Mask m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

// Calls f(sub) for every sub ⊆ mask in ascending numeric order. If f returns
// bool, a true result stops the walk and is propagated.
template <class F>
bool for_each_submask(Mask mask, F&& f) {
  Mask sub = 0;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(sub)), bool>) {
      if (f(sub)) return true;
    } else {
      f(sub);
    }
    if (sub == mask) return false;
    sub = (sub - mask) & mask;
  }
}

// Calls f(x) for every x with lower ⊆ x ⊆ upper, ascending. Requires lower ⊆ upper.
template <class F>
bool for_each_between(Mask lower, Mask upper, F&& f) {
  return for_each_submask(upper & ~lower, [&](Mask free) { return f(lower | free); });
}

// "{0,2,5}", sorted ascending; "{}" for the empty set.
std::string format_mask(Mask m);
inline std::string to_string(const Subset& s) { return format_mask(s.bits()); }

// Accepts "{0,2}", "0,2", "{}" or "" (empty). Throws ParseError on bad tokens
// or elements outside the ground set.
Subset parse_subset(GroundSet g, std::string_view text);

}  // namespace indep
