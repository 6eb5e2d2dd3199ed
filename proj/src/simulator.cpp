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

#include "lightxc/simulator.hpp"

#include <algorithm>
#include <string>

namespace lightxc {
namespace {

const Rational kHalf(1, 2);

// Both cables of a gap shift the (sorted) incoming events by a constant, so
// the outgoing events are a merge of two sorted runs.
std::vector<ArrivalEvent> cross_gap(const std::vector<ArrivalEvent>& in, const Gap& gap,
                                    std::uint64_t cap, std::size_t node) {
  std::vector<ArrivalEvent> out;
  out.reserve(std::min<std::uint64_t>(2 * in.size(), cap));
  auto emit = [&](BigInt time, const ArrivalEvent& parent) {
    Rational intensity = parent.intensity * kHalf;
    if (!out.empty() && out.back().time == time) {
      out.back().intensity += intensity;
      out.back().multiplicity += parent.multiplicity;
      return;
    }
    if (out.size() >= cap) {
      throw CapExceeded("node " + std::to_string(node) + " would receive more than " +
                        std::to_string(cap) +
                        " distinct arrival times; the instance is too large to simulate "
                        "exactly (raise the event cap or shrink the instance)");
    }
    out.push_back(ArrivalEvent{std::move(time), std::move(intensity), parent.multiplicity});
  };

  std::size_t skip = 0;
  std::size_t take = 0;
  while (skip < in.size() || take < in.size()) {
    BigInt t_skip = skip < in.size() ? in[skip].time + gap.skip_arc_delay : BigInt(0);
    BigInt t_take = take < in.size() ? in[take].time + gap.subset_arc_delay : BigInt(0);
    if (take >= in.size() || (skip < in.size() && t_skip <= t_take)) {
      emit(std::move(t_skip), in[skip++]);
    } else {
      emit(std::move(t_take), in[take++]);
    }
  }
  return out;
}

}  // namespace

BigInt ArrivalProfile::target_time() const {
  return label_total + k * static_cast<unsigned long long>(gaps_traversed);
}

BigInt ArrivalProfile::total_multiplicity() const {
  BigInt sum = 0;
  for (const auto& e : events) sum += e.multiplicity;
  return sum;
}

Rational ArrivalProfile::total_intensity() const {
  Rational sum = 0;
  for (const auto& e : events) sum += e.intensity;
  return sum;
}

Rational ArrivalProfile::per_ray_intensity() const {
  return Rational(BigInt(1), BigInt(1) << gaps_traversed);
}

ArrivalProfile arrivals_at_node(const DeviceGraph& g, std::size_t node,
                                const PropagateOptions& options) {
  if (node >= g.node_count()) {
    throw InvalidArgument("node " + std::to_string(node) + " outside 0.." +
                          std::to_string(g.node_count() - 1));
  }
  if (options.event_cap == 0) throw InvalidArgument("event cap must be positive");

  std::vector<ArrivalEvent> events{ArrivalEvent{BigInt(0), Rational(1), BigInt(1)}};
  for (std::size_t i = 0; i < node; ++i) {
    events = cross_gap(events, g.gap(i), options.event_cap, i + 1);
  }

  ArrivalProfile profile;
  profile.events = std::move(events);
  profile.gaps_traversed = node;
  profile.k = g.k();
  profile.label_total = g.label_total();
  return profile;
}

ArrivalProfile propagate(const DeviceGraph& g, const PropagateOptions& options) {
  return arrivals_at_node(g, g.gap_count(), options);
}

Decision decide(const ArrivalProfile& profile) {
  Decision d;
  d.target_time = profile.target_time();
  auto it = std::lower_bound(
      profile.events.begin(), profile.events.end(), d.target_time,
      [](const ArrivalEvent& e, const BigInt& t) { return e.time < t; });
  if (it != profile.events.end() && it->time == d.target_time) {
    d.yes = true;
    d.detection = *it;
  }
  return d;
}

std::vector<ArrivalEvent> detect_window(const ArrivalProfile& profile,
                                        const BigInt& window_half_width) {
  if (window_half_width < 0) throw InvalidArgument("window half-width must be nonnegative");
  const BigInt target = profile.target_time();
  const BigInt lo = target - window_half_width;
  const BigInt hi = target + window_half_width;
  auto first = std::lower_bound(
      profile.events.begin(), profile.events.end(), lo,
      [](const ArrivalEvent& e, const BigInt& t) { return e.time < t; });
  auto last = std::upper_bound(
      first, profile.events.end(), hi,
      [](const BigInt& t, const ArrivalEvent& e) { return t < e.time; });
  return {first, last};
}

}  // namespace lightxc
