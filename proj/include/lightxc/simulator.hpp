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

// Ray propagation through a DeviceGraph.
//
// A unit-intensity ray enters Start at time 0. Every non-terminal node
// splits each incoming ray 50/50 onto its two outgoing cables. Rays that
// reach a node at the same instant superpose into one event whose
// intensity is the sum and whose multiplicity counts the merged rays.

#ifndef LIGHTXC_SIMULATOR_HPP_
#define LIGHTXC_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lightxc/device.hpp"
#include "lightxc/types.hpp"

namespace lightxc {

struct ArrivalEvent {
  BigInt time;         // delay units since the ray entered Start
  Rational intensity;  // fraction of the input power
  BigInt multiplicity; // rays merged into this event

  friend bool operator==(const ArrivalEvent&, const ArrivalEvent&) = default;
};

struct ArrivalProfile {
  std::vector<ArrivalEvent> events;  // strictly increasing time
  std::size_t gaps_traversed = 0;    // m for the Destination profile
  BigInt k;
  BigInt label_total;                // B

  BigInt target_time() const;        // B + m*k
  BigInt total_multiplicity() const;
  Rational total_intensity() const;
  // Intensity of one unmerged ray, 2^-gaps_traversed.
  Rational per_ray_intensity() const;
};

inline constexpr std::uint64_t kDefaultEventCap = std::uint64_t{1} << 24;

struct PropagateOptions {
  // Largest number of distinct arrival times allowed at any node.
  std::uint64_t event_cap = kDefaultEventCap;
};

// Arrival profile at the Destination node. Throws CapExceeded when some
// node would hold more than options.event_cap distinct arrival times.
ArrivalProfile propagate(const DeviceGraph& g, const PropagateOptions& options = {});

// Arrival profile at node `node` (0 = Start, gap_count() = Destination).
ArrivalProfile arrivals_at_node(const DeviceGraph& g, std::size_t node,
                                const PropagateOptions& options = {});

struct Decision {
  bool yes = false;
  BigInt target_time;                 // B + m*k
  std::optional<ArrivalEvent> detection;
};

// YES iff some ray reaches the Destination at exactly B + m*k.
Decision decide(const ArrivalProfile& profile);

// Events whose time lies within window_half_width of B + m*k. Throws
// InvalidArgument for a negative width.
std::vector<ArrivalEvent> detect_window(const ArrivalProfile& profile,
                                        const BigInt& window_half_width);

}  // namespace lightxc

#endif  // LIGHTXC_SIMULATOR_HPP_
