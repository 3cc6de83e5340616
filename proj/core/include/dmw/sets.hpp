// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DMW_SETS_HPP_
#define DMW_SETS_HPP_

// Ground sets, bit-mask subsets and canonical subset families. Everything in
// the library is built on these three value types.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmw {

inline constexpr int kMaxGroundSize = 16;

// Malformed input, precondition violations and mismatched ground sets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A subset of a ground set, as a bit mask over element indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  static constexpr Subset singleton(int element) {
    return Subset(std::uint32_t{1} << element);
  }
  static constexpr Subset pair(int x, int y) {
    return Subset((std::uint32_t{1} << x) | (std::uint32_t{1} << y));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int element) const {
    return (mask_ >> element) & 1u;
  }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr Subset with(int element) const {
    return Subset(mask_ | (std::uint32_t{1} << element));
  }
  constexpr Subset without(int element) const {
    return Subset(mask_ & ~(std::uint32_t{1} << element));
  }
  // Lowest element index, or -1 for the empty set.
  constexpr int first() const {
    return mask_ == 0 ? -1 : std::countr_zero(mask_);
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  // Symmetric difference.
  friend constexpr Subset operator^(Subset a, Subset b) {
    return Subset(a.mask_ ^ b.mask_);
  }
  // Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint32_t mask_ = 0;
};

// Calls fn(element) for every element of s in ascending index order.
template <typename Fn>
constexpr void for_each_element(Subset s, Fn&& fn) {
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) {
    fn(std::countr_zero(m));
  }
}

// Packs the bits of s that are outside `removed` into consecutive positions,
// preserving order. Used to re-index subsets after shrinking a ground set.
Subset compress(Subset s, Subset removed);
// Inverse of compress: spreads the low bits of s over the positions outside
// `removed`.
Subset expand(Subset s, Subset removed);

// An ordered universe of at most kMaxGroundSize distinctly labeled elements.
// Cheap to copy; labels are shared.
class GroundSet {
 public:
  GroundSet();
  explicit GroundSet(std::vector<std::string> labels);

  // Elements labeled "a", "b", "c", ...
  static GroundSet letters(int n);

  int size() const { return static_cast<int>(labels_->size()); }
  const std::string& label(int element) const { return (*labels_)[element]; }
  std::span<const std::string> labels() const { return *labels_; }
  std::optional<int> index_of(std::string_view label) const;

  Subset full() const {
    return Subset((std::uint32_t{1} << size()) - 1);
  }
  bool contains(Subset s) const { return s.is_subset_of(full()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }

  // Throws InputError on an unknown label.
  Subset subset(std::initializer_list<std::string_view> labels) const;
  Subset subset(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  // "{a,b}" style rendering.
  std::string format(Subset s) const;

  // The ground set with the elements of `removed` dropped, order preserved.
  GroundSet without(Subset removed) const;
  // Throws InputError if s has bits beyond this ground set.
  void require(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Symmetric difference of two subsets of `ground`.
Subset sym_diff(const GroundSet& ground, Subset a, Subset b);

// A dense bit per subset of a ground set (2^n bits).
class SubsetBitmap {
 public:
  SubsetBitmap() = default;
  explicit SubsetBitmap(int ground_size)
      : words_(((std::size_t{1} << ground_size) + 63) / 64, 0) {}

  bool test(Subset s) const {
    return (words_[s.mask() >> 6] >> (s.mask() & 63)) & 1u;
  }
  void set(Subset s) { words_[s.mask() >> 6] |= std::uint64_t{1} << (s.mask() & 63); }
  void reset(Subset s) {
    words_[s.mask() >> 6] &= ~(std::uint64_t{1} << (s.mask() & 63));
  }
  friend bool operator==(const SubsetBitmap&, const SubsetBitmap&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// A deduplicated collection of subsets of a ground set, kept in ascending
// mask order so that iteration and serialization are canonical.
class SetFamily {
 public:
  explicit SetFamily(GroundSet ground = GroundSet(),
                     std::vector<Subset> members = {});
  // Members are the set bits of `bitmap`.
  static SetFamily from_bitmap(GroundSet ground, const SubsetBitmap& bitmap);

  const GroundSet& ground() const { return ground_; }
  std::span<const Subset> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Subset s) const { return ground_.contains(s) && index_.test(s); }

  // Member cardinalities; both throw InputError on an empty family.
  int min_cardinality() const;
  int max_cardinality() const;
  SetFamily with_cardinality(int k) const;

  SetFamily with(Subset s) const;
  // Complements of all members.
  SetFamily complemented() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
  SubsetBitmap index_;
};

// Throws InputError unless a and b have the same ground set.
void require_same_ground(const GroundSet& a, const GroundSet& b);

// Members containing no other member.
SetFamily minimal_members(const SetFamily& family);
// Members contained in no other member.
SetFamily maximal_members(const SetFamily& family);

// All subsets of size k of `ground`, ascending.
std::vector<Subset> subsets_of_size(const GroundSet& ground, int k);

}  // namespace dmw

#endif  // DMW_SETS_HPP_
