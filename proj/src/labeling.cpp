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

#include "lightxc/labeling.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace lightxc {
namespace {

// Depth-first walk over coefficient vectors in lexicographic order
// (a_1 varies slowest), pruning once the partial sum passes the target.
// Labels are nonnegative, so the partial sum never decreases.
template <class Int>
class CollisionSearch {
 public:
  CollisionSearch(std::vector<Int> labels, std::uint32_t max_multiplicity)
      : labels_(std::move(labels)),
        max_multiplicity_(max_multiplicity),
        coeffs_(labels_.size(), 0) {
    for (const auto& d : labels_) target_ += d;
  }

  bool run() { return descend(0, Int(0), true); }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

 private:
  bool descend(std::size_t i, const Int& partial, bool all_ones) {
    if (i == labels_.size()) return !all_ones && partial == target_;
    Int sum = partial;
    for (std::uint64_t v = 0; v <= max_multiplicity_; ++v) {
      if (sum > target_) break;
      coeffs_[i] = static_cast<std::uint32_t>(v);
      if (descend(i + 1, sum, all_ones && v == 1)) return true;
      sum += labels_[i];
    }
    coeffs_[i] = 0;
    return false;
  }

  std::vector<Int> labels_;
  std::uint32_t max_multiplicity_;
  std::vector<std::uint32_t> coeffs_;
  Int target_ = 0;
};

// (base)^exp, or nullopt when it would exceed `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exp,
                                           std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  return acc;
}

}  // namespace

LabelSystem::LabelSystem(std::vector<BigInt> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("label system must have at least one label");
  std::set<BigInt> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] <= 0) {
      throw InvalidArgument("label d_" + std::to_string(i + 1) + " = " +
                            labels_[i].str() + " is not positive");
    }
    if (!seen.insert(labels_[i]).second) {
      throw InvalidArgument("label value " + labels_[i].str() + " appears twice");
    }
    total_ += labels_[i];
  }
}

LabelSystem generate_labels(std::size_t n) {
  if (n == 0) throw InvalidArgument("cannot label an empty universe (n = 0)");
  const BigInt top = BigInt(1) << n;
  std::vector<BigInt> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(top - (BigInt(1) << (n - i)));
  return LabelSystem(std::move(labels));
}

bool is_canonical(const LabelSystem& ls) { return ls == generate_labels(ls.size()); }

NoncollisionResult find_collision(std::span<const BigInt> labels,
                                  std::uint32_t max_multiplicity,
                                  std::uint64_t max_vectors) {
  if (max_multiplicity == 0) throw InvalidArgument("max_multiplicity must be at least 1");
  BigInt target = 0;
  BigInt largest = 0;
  for (const auto& d : labels) {
    if (d < 0) throw InvalidArgument("labels must be nonnegative, got " + d.str());
    target += d;
    largest = std::max(largest, d);
  }

  NoncollisionResult result;
  const auto space = bounded_power(std::uint64_t{max_multiplicity} + 1, labels.size(),
                                   max_vectors);
  if (!space) {
    throw CapExceeded("non-collision search over (" + std::to_string(max_multiplicity) +
                      "+1)^" + std::to_string(labels.size()) +
                      " coefficient vectors exceeds the limit of " +
                      std::to_string(max_vectors) + " vectors");
  }
  result.vectors = *space;

  // Partial sums stay <= target + max_multiplicity * largest.
  const BigInt bound = target + largest * max_multiplicity;
  bool found = false;
  if (bound < (BigInt(1) << 62)) {
    std::vector<std::int64_t> small;
    small.reserve(labels.size());
    for (const auto& d : labels) small.push_back(d.convert_to<std::int64_t>());
    CollisionSearch<std::int64_t> search(std::move(small), max_multiplicity);
    found = search.run();
    if (found) result.counterexample = search.coefficients();
  } else {
    CollisionSearch<BigInt> search(std::vector<BigInt>(labels.begin(), labels.end()),
                                   max_multiplicity);
    found = search.run();
    if (found) result.counterexample = search.coefficients();
  }
  result.holds = !found;
  return result;
}

NoncollisionResult verify_noncollision(const LabelSystem& ls,
                                       std::uint32_t max_multiplicity,
                                       std::uint64_t max_vectors) {
  return find_collision(ls.labels(), max_multiplicity, max_vectors);
}

BigInt subset_delay(const LabelSystem& ls, std::span<const Element> subset) {
  BigInt sum = 0;
  for (Element e : subset) {
    if (e < 1 || e > ls.size()) {
      throw InvalidArgument("element " + std::to_string(e) + " outside 1.." +
                            std::to_string(ls.size()));
    }
    sum += ls.label(e - 1);
  }
  return sum;
}

}  // namespace lightxc
