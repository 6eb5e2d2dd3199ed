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

// Exact Cover instances: a universe {1..n} and an ordered family of subsets.
//
// Text format:
//
//   # comment
//   n m
//   <indices of C_1>
//   ...
//   <indices of C_m>
//
// Subset order is significant: C_i becomes the i-th gap of the device.

#ifndef LIGHTXC_INSTANCE_HPP_
#define LIGHTXC_INSTANCE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lightxc/types.hpp"

namespace lightxc {

using Subset = std::vector<Element>;  // sorted, no repeats

class XCInstance {
 public:
  // Validates and normalizes (sorts) every subset. Throws InvalidArgument
  // if n == 0, a subset is empty, holds an index outside 1..n, repeats an
  // element, or (unless allow_duplicates) equals an earlier subset.
  XCInstance(std::size_t n, std::vector<Subset> subsets,
             bool allow_duplicates = false);

  std::size_t universe_size() const noexcept { return n_; }
  std::size_t subset_count() const noexcept { return subsets_.size(); }
  const std::vector<Subset>& subsets() const noexcept { return subsets_; }
  // 0-based access; subset(0) is C_1.
  const Subset& subset(std::size_t i) const { return subsets_.at(i); }

  friend bool operator==(const XCInstance&, const XCInstance&) = default;

 private:
  std::size_t n_;
  std::vector<Subset> subsets_;
};

struct ParseOptions {
  // Duplicate subsets become warnings instead of errors.
  bool allow_duplicates = false;
};

// Throws ParseError on malformed text or any instance invariant violation.
// Diagnostics that do not reject the input are appended to `warnings`.
XCInstance parse_instance(std::string_view text, const ParseOptions& options = {},
                          std::vector<std::string>* warnings = nullptr);

// Inverse of parse_instance.
std::string render_instance(const XCInstance& inst);

// coverage[e - 1] = number of subsets containing element e. Any zero entry
// rules out an exact cover.
std::vector<std::size_t> element_coverage(const XCInstance& inst);

// Elements that no subset contains, ascending.
std::vector<Element> uncovered_elements(const XCInstance& inst);

}  // namespace lightxc

#endif  // LIGHTXC_INSTANCE_HPP_
