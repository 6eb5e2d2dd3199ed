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

// Physical sizing of the device. One delay unit is the distance light
// covers in the cable during one photodiode rise time; every cable is an
// integer number of units long. These are engineering estimates in
// double precision, unlike the exact simulator.

#ifndef LIGHTXC_FEASIBILITY_HPP_
#define LIGHTXC_FEASIBILITY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lightxc/instance.hpp"
#include "lightxc/labeling.hpp"
#include "lightxc/types.hpp"

namespace lightxc {

inline constexpr double kSpeedOfLightVacuum = 3.0e8;  // m/s
inline constexpr double kDefaultRiseTime = 1.0e-12;   // s
inline constexpr double kDefaultMaxCable = 300.0e3;   // m
inline constexpr double kDefaultDetectorGain = 1.0e8;

class Material {
 public:
  // Throws InvalidArgument unless refractive_index >= 1.
  Material(std::string name, double refractive_index);

  const std::string& name() const noexcept { return name_; }
  double refractive_index() const noexcept { return refractive_index_; }
  double light_speed() const noexcept { return kSpeedOfLightVacuum / refractive_index_; }

 private:
  std::string name_;
  double refractive_index_;
};

// Vacuum, Water Ice, Diamond, Silicon.
const std::vector<Material>& default_materials();

// One material per line: `<name> <refractive_index>`; the name may contain
// spaces, the index is the last token. `#` starts a comment line.
std::vector<Material> parse_materials(std::string_view text);

// Case-insensitive lookup. Throws InvalidArgument listing the known names.
const Material& find_material(std::string_view name, const std::vector<Material>& table);

// Meters of cable per delay unit. Throws InvalidArgument for rise_time_s <= 0.
double unit_length(const Material& material, double rise_time_s);

// d_i * unit_length for each label.
std::vector<double> cable_lengths(const LabelSystem& ls, const Material& material,
                                  double rise_time_s);

// Largest n with 2^n * unit_length <= max_cable_m; 0 when even 2^1 units
// do not fit. A relative slack of 1e-9 absorbs decimal round-off so that
// exact multiples (e.g. 0.0006 m = 2 units) count as fitting.
int max_instance_size(double max_cable_m, const Material& material, double rise_time_s);

struct PowerBudget {
  std::size_t splits = 0;        // m
  double per_ray_ratio = 1.0;    // 2^-m (0 once it underflows)
  double min_detector_gain = 1;  // 2^m (inf once it overflows)
  bool detectable = true;        // per_ray_ratio * gain >= 1
};

// Throws InvalidArgument for detector_gain < 1.
PowerBudget power_budget(std::size_t m, double detector_gain);

struct FeasibilityReport {
  std::string material;
  double refractive_index = 1;
  double light_speed_m_s = kSpeedOfLightVacuum;
  double photodiode_rise_time_s = kDefaultRiseTime;
  double unit_length_m = 0;
  std::vector<double> cable_lengths_m;  // per label
  double max_cable_m = kDefaultMaxCable;
  int max_universe_size = 0;
  std::string max_universe_size_note;
  // Per instance: the longest cable is the subset arc with the largest
  // delay(C_j) + k, which can exceed any single label.
  double longest_arc_m = 0;
  double skip_arc_m = 0;
  bool fits_cable_budget = true;
  PowerBudget power;
  double detector_gain = kDefaultDetectorGain;
};

struct FeasibilityParams {
  double rise_time_s = kDefaultRiseTime;
  double max_cable_m = kDefaultMaxCable;
  double detector_gain = kDefaultDetectorGain;
  BigInt k = 1;
};

FeasibilityReport assess_feasibility(const XCInstance& inst, const LabelSystem& ls,
                                     const Material& material,
                                     const FeasibilityParams& params = {});

}  // namespace lightxc

#endif  // LIGHTXC_FEASIBILITY_HPP_
