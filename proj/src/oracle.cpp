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

#include "lightxc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace lightxc {
namespace {

void check_cap(std::size_t m, std::size_t max_subsets) {
  if (m > max_subsets || m >= 64) {
    throw CapExceeded("brute force over 2^" + std::to_string(m) +
                      " subfamilies exceeds the limit of 2^" +
                      std::to_string(std::min<std::size_t>(max_subsets, 63)));
  }
}

}  // namespace

OracleResult oracle_exact_cover(const XCInstance& inst, std::size_t max_subsets) {
  const std::size_t m = inst.subset_count();
  check_cap(m, max_subsets);

  OracleResult result;
  std::vector<std::size_t> hits(inst.universe_size());
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        for (Element e : inst.subset(i)) ++hits[e - 1];
      }
    }
    if (std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; })) {
      std::vector<std::size_t> witness;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) witness.push_back(i + 1);
      }
      result.witnesses.push_back(std::move(witness));
    }
  }
  result.yes = !result.witnesses.empty();
  return result;
}

std::vector<BigInt> oracle_sum_multiset(const XCInstance& inst, const LabelSystem& ls,
                                        std::size_t max_subsets) {
  if (ls.size() != inst.universe_size()) {
    throw InvalidArgument("label system size does not match the universe size");
  }
  const std::size_t m = inst.subset_count();
  check_cap(m, max_subsets);

  std::vector<BigInt> delays;
  delays.reserve(m);
  for (const auto& s : inst.subsets()) {
    BigInt d = 0;
    for (Element e : s) d += ls.labels()[e - 1];
    delays.push_back(std::move(d));
  }

  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<BigInt> sums;
  sums.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) s += delays[i];
    }
    sums.push_back(std::move(s));
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace lightxc
