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

#include "lightxc/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace lightxc {
namespace {

constexpr double kFitSlack = 1e-9;

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

Material::Material(std::string name, double refractive_index)
    : name_(std::move(name)), refractive_index_(refractive_index) {
  if (!(refractive_index_ >= 1.0) || !std::isfinite(refractive_index_)) {
    throw InvalidArgument("refractive index of '" + name_ + "' must be a finite value >= 1");
  }
}

const std::vector<Material>& default_materials() {
  static const std::vector<Material> table{
      {"Vacuum", 1.0},
      {"Water Ice", 1.544},
      {"Diamond", 2.419},
      {"Silicon", 4.01},
  };
  return table;
}

std::vector<Material> parse_materials(std::string_view text) {
  std::vector<Material> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.starts_with('#')) continue;

    const auto split = line.find_last_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError("expected '<name> <refractive_index>'", lineno);
    }
    const std::string_view name = trim(line.substr(0, split));
    const std::string_view index_text = line.substr(split + 1);
    double index = 0;
    auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(),
                                     index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size()) {
      throw ParseError("bad refractive index '" + std::string(index_text) + "'", lineno);
    }
    try {
      out.emplace_back(std::string(name), index);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

const Material& find_material(std::string_view name, const std::vector<Material>& table) {
  for (const auto& m : table) {
    if (iequals(m.name(), name)) return m;
  }
  std::string known;
  for (const auto& m : table) known += (known.empty() ? "" : ", ") + m.name();
  throw InvalidArgument("unknown material '" + std::string(name) + "' (known: " + known + ")");
}

double unit_length(const Material& material, double rise_time_s) {
  if (!(rise_time_s > 0) || !std::isfinite(rise_time_s)) {
    throw InvalidArgument("rise time must be positive");
  }
  return material.light_speed() * rise_time_s;
}

std::vector<double> cable_lengths(const LabelSystem& ls, const Material& material,
                                  double rise_time_s) {
  const double unit = unit_length(material, rise_time_s);
  std::vector<double> out;
  out.reserve(ls.size());
  for (const auto& d : ls.labels()) out.push_back(d.convert_to<double>() * unit);
  return out;
}

int max_instance_size(double max_cable_m, const Material& material, double rise_time_s) {
  if (!(max_cable_m > 0)) throw InvalidArgument("cable budget must be positive");
  const double units = max_cable_m / unit_length(material, rise_time_s) * (1 + kFitSlack);
  int n = 0;
  while (n < std::numeric_limits<double>::max_exponent - 1 && std::ldexp(1.0, n + 1) <= units) {
    ++n;
  }
  return n;
}

PowerBudget power_budget(std::size_t m, double detector_gain) {
  if (!(detector_gain >= 1)) throw InvalidArgument("detector gain must be >= 1");
  PowerBudget b;
  b.splits = m;
  const int exp = static_cast<int>(std::min<std::size_t>(m, 1 << 20));
  b.per_ray_ratio = std::ldexp(1.0, -exp);
  b.min_detector_gain = std::ldexp(1.0, exp);
  // gain * 2^-m >= 1  <=>  gain >= 2^m, which stays exact in binary.
  b.detectable = detector_gain >= b.min_detector_gain;
  return b;
}

FeasibilityReport assess_feasibility(const XCInstance& inst, const LabelSystem& ls,
                                     const Material& material,
                                     const FeasibilityParams& params) {
  if (ls.size() != inst.universe_size()) {
    throw InvalidArgument("label system size does not match the universe size");
  }
  FeasibilityReport r;
  r.material = material.name();
  r.refractive_index = material.refractive_index();
  r.light_speed_m_s = material.light_speed();
  r.photodiode_rise_time_s = params.rise_time_s;
  r.unit_length_m = unit_length(material, params.rise_time_s);
  r.cable_lengths_m = cable_lengths(ls, material, params.rise_time_s);
  r.max_cable_m = params.max_cable_m;
  r.max_universe_size = max_instance_size(params.max_cable_m, material, params.rise_time_s);

  std::ostringstream note;
  note << "largest n with 2^n * unit_length_m <= max_cable_m, i.e. floor(log2("
       << params.max_cable_m << " / " << r.unit_length_m << ")) = " << r.max_universe_size
       << "; round-figure estimates quoted for this budget (e.g. 'about 28' for 300 km "
          "in vacuum at 1 ps) are approximations of this bound";
  r.max_universe_size_note = note.str();

  BigInt longest = 0;
  for (const auto& s : inst.subsets()) {
    BigInt d = subset_delay(ls, s);
    if (d > longest) longest = d;
  }
  const BigInt k_units = params.k;
  r.skip_arc_m = k_units.convert_to<double>() * r.unit_length_m;
  r.longest_arc_m = inst.subset_count() == 0
                        ? 0.0
                        : (longest + k_units).convert_to<double>() * r.unit_length_m;
  r.fits_cable_budget = r.longest_arc_m <= params.max_cable_m * (1 + kFitSlack);

  r.detector_gain = params.detector_gain;
  r.power = power_budget(inst.subset_count(), params.detector_gain);
  return r;
}

}  // namespace lightxc
