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

#include "lightxc/device.hpp"

#include <string>

namespace lightxc {

BigInt DeviceGraph::target_time() const {
  return label_total_ + k_ * static_cast<unsigned long long>(gaps_.size());
}

DeviceGraph build_device(const XCInstance& inst, const LabelSystem& ls, const BigInt& k) {
  if (ls.size() != inst.universe_size()) {
    throw InvalidArgument("label system has " + std::to_string(ls.size()) +
                          " labels but the instance has " +
                          std::to_string(inst.universe_size()) + " elements");
  }
  if (k < 1) throw InvalidArgument("cable offset k must be at least 1, got " + k.str());

  DeviceGraph g;
  g.k_ = k;
  g.label_total_ = ls.total();
  g.gaps_.reserve(inst.subset_count());
  for (const auto& s : inst.subsets()) {
    g.gaps_.push_back(Gap{subset_delay(ls, s) + k, k});
  }
  return g;
}

BigInt path_delay(const DeviceGraph& g, const std::vector<bool>& choices) {
  if (choices.size() != g.gap_count()) {
    throw InvalidArgument("choice vector has " + std::to_string(choices.size()) +
                          " entries, device has " + std::to_string(g.gap_count()) +
                          " gaps");
  }
  BigInt t = 0;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    t += choices[i] ? g.gap(i).subset_arc_delay : g.gap(i).skip_arc_delay;
  }
  return t;
}

}  // namespace lightxc
