// Copyright 2026 The lightxc Authors.
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

// Brute-force ground truth. Plain bitmask enumeration over all 2^m
// subfamilies; shares no code with the device or simulator.

#ifndef LIGHTXC_ORACLE_HPP_
#define LIGHTXC_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "lightxc/instance.hpp"
#include "lightxc/labeling.hpp"
#include "lightxc/types.hpp"

namespace lightxc {

inline constexpr std::size_t kDefaultOracleMaxSubsets = 24;

struct OracleResult {
  bool yes = false;
  // Each witness lists 1-based subset indices, ascending. Witnesses are
  // ordered by their bitmask (bit i-1 set for C_i).
  std::vector<std::vector<std::size_t>> witnesses;
};

// Throws CapExceeded when m > max_subsets.
OracleResult oracle_exact_cover(const XCInstance& inst,
                                std::size_t max_subsets = kDefaultOracleMaxSubsets);

// Sum of delay(C_i) over the chosen C_i, for every one of the 2^m
// subfamilies, sorted ascending (a multiset, so values repeat). Throws
// InvalidArgument on a label/instance size mismatch and CapExceeded when
// m > max_subsets.
std::vector<BigInt> oracle_sum_multiset(const XCInstance& inst, const LabelSystem& ls,
                                        std::size_t max_subsets = kDefaultOracleMaxSubsets);

}  // namespace lightxc

#endif  // LIGHTXC_ORACLE_HPP_
