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

#include "dmw/sets.hpp"

#include <algorithm>
#include <unordered_set>

namespace dmw {

Subset compress(Subset s, Subset removed) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e = 0; e < 32; ++e) {
    if (removed.contains(e)) continue;
    if (s.contains(e)) out |= std::uint32_t{1} << pos;
    ++pos;
  }
  return Subset(out);
}

Subset expand(Subset s, Subset removed) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e = 0; e < 32 && (s.mask() >> pos) != 0; ++e) {
    if (removed.contains(e)) continue;
    if (s.contains(pos)) out |= std::uint32_t{1} << e;
    ++pos;
  }
  return Subset(out);
}

GroundSet::GroundSet()
    : labels_(std::make_shared<const std::vector<std::string>>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.size() > kMaxGroundSize) {
    throw InputError("ground set has " + std::to_string(labels.size()) +
                     " elements; at most " + std::to_string(kMaxGroundSize) +
                     " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("ground set label must be nonempty");
    if (!seen.insert(l).second) {
      throw InputError("duplicate ground set label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::letters(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InputError("ground set size out of range: " + std::to_string(n));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

Subset GroundSet::subset(std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (auto l : labels) {
    auto idx = index_of(l);
    if (!idx) throw InputError("unknown element '" + std::string(l) + "'");
    s = s.with(*idx);
  }
  return s;
}

Subset GroundSet::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto idx = index_of(l);
    if (!idx) throw InputError("unknown element '" + l + "'");
    if (s.contains(*idx)) throw InputError("element '" + l + "' repeated");
    s = s.with(*idx);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  require(s);
  std::vector<std::string> out;
  for_each_element(s, [&](int e) { out.push_back(label(e)); });
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::without(Subset removed) const {
  std::vector<std::string> kept;
  for (int i = 0; i < size(); ++i) {
    if (!removed.contains(i)) kept.push_back(label(i));
  }
  return GroundSet(std::move(kept));
}

void GroundSet::require(Subset s) const {
  if (!contains(s)) {
    throw InputError("subset mask " + std::to_string(s.mask()) +
                     " exceeds a ground set of size " + std::to_string(size()));
  }
}

bool operator==(const GroundSet& a, const GroundSet& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) throw InputError("ground sets differ");
}

Subset sym_diff(const GroundSet& ground, Subset a, Subset b) {
  ground.require(a);
  ground.require(b);
  return a ^ b;
}

SetFamily::SetFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)),
      members_(std::move(members)),
      index_(ground_.size()) {
  for (Subset s : members_) ground_.require(s);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Subset s : members_) index_.set(s);
}

SetFamily SetFamily::from_bitmap(GroundSet ground, const SubsetBitmap& bitmap) {
  std::vector<Subset> members;
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m) {
    if (bitmap.test(Subset(m))) members.emplace_back(m);
  }
  return SetFamily(std::move(ground), std::move(members));
}

int SetFamily::min_cardinality() const {
  if (members_.empty()) throw InputError("empty family has no cardinality");
  int k = kMaxGroundSize + 1;
  for (Subset s : members_) k = std::min(k, s.size());
  return k;
}

int SetFamily::max_cardinality() const {
  if (members_.empty()) throw InputError("empty family has no cardinality");
  int k = -1;
  for (Subset s : members_) k = std::max(k, s.size());
  return k;
}

SetFamily SetFamily::with_cardinality(int k) const {
  std::vector<Subset> out;
  for (Subset s : members_) {
    if (s.size() == k) out.push_back(s);
  }
  return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::with(Subset s) const {
  auto members = members_;
  members.push_back(s);
  return SetFamily(ground_, std::move(members));
}

SetFamily SetFamily::complemented() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (Subset s : members_) out.push_back(ground_.full() - s);
  return SetFamily(ground_, std::move(out));
}

SetFamily minimal_members(const SetFamily& family) {
  std::vector<Subset> out;
  for (Subset s : family) {
    bool minimal = std::none_of(family.begin(), family.end(), [&](Subset t) {
      return t != s && t.is_subset_of(s);
    });
    if (minimal) out.push_back(s);
  }
  return SetFamily(family.ground(), std::move(out));
}

SetFamily maximal_members(const SetFamily& family) {
  std::vector<Subset> out;
  for (Subset s : family) {
    bool maximal = std::none_of(family.begin(), family.end(), [&](Subset t) {
      return t != s && s.is_subset_of(t);
    });
    if (maximal) out.push_back(s);
  }
  return SetFamily(family.ground(), std::move(out));
}

std::vector<Subset> subsets_of_size(const GroundSet& ground, int k) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m) {
    if (std::popcount(m) == k) out.emplace_back(m);
  }
  return out;
}

}  // namespace dmw
