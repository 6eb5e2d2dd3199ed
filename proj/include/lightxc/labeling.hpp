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

// Per-element delay labels.
//
// Element i is assigned a positive integer delay d_i. A ray that crossed
// element i exactly a_i times arrives at sum(a_i * d_i); the labels are
// usable when that sum equals B = sum(d_i) only for the all-ones vector,
// i.e. only for rays that visited every element exactly once.

#ifndef LIGHTXC_LABELING_HPP_
#define LIGHTXC_LABELING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lightxc/instance.hpp"
#include "lightxc/types.hpp"

namespace lightxc {

class LabelSystem {
 public:
  // Throws InvalidArgument unless labels are nonempty, strictly positive
  // and pairwise distinct.
  explicit LabelSystem(std::vector<BigInt> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  // 0-based; label(0) is d_1.
  const BigInt& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<BigInt>& labels() const noexcept { return labels_; }
  // Sum of all labels: the delay carried by an exact cover.
  const BigInt& total() const noexcept { return total_; }

  friend bool operator==(const LabelSystem&, const LabelSystem&) = default;

 private:
  std::vector<BigInt> labels_;
  BigInt total_;
};

// d_i = 2^n - 2^(n-i) for i = 1..n. Throws InvalidArgument for n == 0.
LabelSystem generate_labels(std::size_t n);

// True when `ls` is exactly generate_labels(ls.size()).
bool is_canonical(const LabelSystem& ls);

inline constexpr std::uint64_t kDefaultMaxVectors = 100'000'000;

struct NoncollisionResult {
  bool holds = true;
  // Lexicographically smallest offending coefficient vector when !holds.
  std::vector<std::uint32_t> counterexample;
  // Size of the searched space, (max_multiplicity + 1)^n.
  std::uint64_t vectors = 0;
};

// Searches every coefficient vector a with 0 <= a_i <= max_multiplicity,
// other than all ones, for sum(a_i * d_i) == sum(d_i). Works on raw labels
// (zero, repeated or unordered values are allowed here) so perturbed label
// sets can be checked too. Throws CapExceeded when the space is larger than
// max_vectors and InvalidArgument when max_multiplicity == 0.
NoncollisionResult find_collision(std::span<const BigInt> labels,
                                  std::uint32_t max_multiplicity,
                                  std::uint64_t max_vectors = kDefaultMaxVectors);

NoncollisionResult verify_noncollision(const LabelSystem& ls,
                                       std::uint32_t max_multiplicity,
                                       std::uint64_t max_vectors = kDefaultMaxVectors);

// Sum of d_e over the elements of `subset`. Throws InvalidArgument for an
// index outside 1..ls.size().
BigInt subset_delay(const LabelSystem& ls, std::span<const Element> subset);

}  // namespace lightxc

#endif  // LIGHTXC_LABELING_HPP_
