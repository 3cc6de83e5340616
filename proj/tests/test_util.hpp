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

#ifndef DMW_TESTS_TEST_UTIL_HPP_
#define DMW_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <string_view>
#include <vector>

#include "dmw/delta.hpp"
#include "dmw/matroid.hpp"
#include "dmw/sets.hpp"

namespace dmw::testing {

using Labels = std::initializer_list<std::string_view>;

inline SetFamily family(const GroundSet& ground,
                        std::initializer_list<Labels> members) {
  std::vector<Subset> out;
  for (auto m : members) out.push_back(ground.subset(m));
  return SetFamily(ground, std::move(out));
}

inline SetFamily all_of_sizes(const GroundSet& ground, std::initializer_list<int> sizes) {
  std::vector<Subset> out;
  for (int k : sizes) {
    for (Subset s : subsets_of_size(ground, k)) out.push_back(s);
  }
  return SetFamily(ground, std::move(out));
}

inline GroundSet labels(std::initializer_list<const char*> ls) {
  return GroundSet(std::vector<std::string>(ls.begin(), ls.end()));
}

}  // namespace dmw::testing

#endif  // DMW_TESTS_TEST_UTIL_HPP_
