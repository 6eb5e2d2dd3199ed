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

// The delay graph: a chain Start = node 0 -> node 1 -> ... -> node m =
// Destination. Gap i (between node i and i+1) has two cables, one of
// delay(C_{i+1}) + k and a skip cable of length k, so every
// Start-to-Destination path picks a subfamily of C and carries exactly m*k
// of offset.

#ifndef LIGHTXC_DEVICE_HPP_
#define LIGHTXC_DEVICE_HPP_

#include <cstddef>
#include <vector>

#include "lightxc/instance.hpp"
#include "lightxc/labeling.hpp"
#include "lightxc/types.hpp"

namespace lightxc {

struct Gap {
  BigInt subset_arc_delay;  // delay(C_i) + k
  BigInt skip_arc_delay;    // k
};

class DeviceGraph {
 public:
  std::size_t node_count() const noexcept { return gaps_.size() + 1; }
  std::size_t gap_count() const noexcept { return gaps_.size(); }
  const std::vector<Gap>& gaps() const noexcept { return gaps_; }
  const Gap& gap(std::size_t i) const { return gaps_.at(i); }
  const BigInt& k() const noexcept { return k_; }
  // Sum of the labels; a ray at target_time() visited every element once.
  const BigInt& label_total() const noexcept { return label_total_; }
  // B + m*k.
  BigInt target_time() const;

 private:
  friend DeviceGraph build_device(const XCInstance&, const LabelSystem&, const BigInt&);

  std::vector<Gap> gaps_;
  BigInt k_ = 1;
  BigInt label_total_ = 0;
};

inline constexpr unsigned kDefaultOffset = 1;

// Throws InvalidArgument when ls.size() != inst.universe_size() or k < 1.
DeviceGraph build_device(const XCInstance& inst, const LabelSystem& ls,
                         const BigInt& k = kDefaultOffset);

// Arrival time of the ray that takes the subset cable exactly in the gaps
// where choices[i] is set. Throws InvalidArgument on a length mismatch.
BigInt path_delay(const DeviceGraph& g, const std::vector<bool>& choices);

}  // namespace lightxc

#endif  // LIGHTXC_DEVICE_HPP_
