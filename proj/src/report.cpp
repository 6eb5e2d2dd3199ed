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

#include "lightxc/report.hpp"

#include <algorithm>
#include <limits>

namespace lightxc {
namespace {

const char* yes_no(bool yes) { return yes ? "YES" : "NO"; }

Json label_system_json(const LabelSystem& ls) {
  Json labels = Json::array();
  for (const auto& d : ls.labels()) labels.push_back(to_json(d));
  return Json{{"n", ls.size()},
              {"canonical", is_canonical(ls)},
              {"labels", std::move(labels)},
              {"B", to_json(ls.total())}};
}

}  // namespace

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json to_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return lightxc::to_string(v);
}

const char* to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::kHolds:
      return "holds";
    case VerificationStatus::kCounterexample:
      return "counterexample";
    case VerificationStatus::kUnverified:
      break;
  }
  return "unverified";
}

LabelVerification verify_for_instance(const LabelSystem& ls, std::size_t m,
                                      std::uint64_t max_vectors) {
  LabelVerification v;
  v.max_multiplicity = static_cast<std::uint32_t>(
      std::clamp<std::size_t>(m, 1, std::numeric_limits<std::uint32_t>::max()));
  try {
    auto r = verify_noncollision(ls, v.max_multiplicity, max_vectors);
    v.vectors = r.vectors;
    v.status = r.holds ? VerificationStatus::kHolds : VerificationStatus::kCounterexample;
    v.counterexample = std::move(r.counterexample);
  } catch (const CapExceeded& e) {
    v.status = VerificationStatus::kUnverified;
    v.detail = e.what();
  }
  return v;
}

SolveResult solve(const XCInstance& inst, const LabelSystem& labels,
                  const SolveOptions& options) {
  DeviceGraph device = build_device(inst, labels, options.k);
  ArrivalProfile profile = propagate(device, PropagateOptions{options.event_cap});
  Decision decision = decide(profile);
  std::optional<OracleResult> oracle;
  if (options.check) oracle = oracle_exact_cover(inst, options.oracle_max_subsets);
  return SolveResult{labels,
                     std::move(device),
                     std::move(profile),
                     std::move(decision),
                     verify_for_instance(labels, inst.subset_count(), options.verify_cap),
                     std::move(oracle)};
}

Json solve_report(const XCInstance& inst, const SolveResult& r,
                  const std::vector<std::string>& warnings) {
  Json gaps = Json::array();
  for (const auto& g : r.device.gaps()) {
    gaps.push_back(Json{{"subset_arc", to_json(g.subset_arc_delay)},
                        {"skip_arc", to_json(g.skip_arc_delay)}});
  }
  const auto& det = r.decision.detection;

  Json verification{{"status", to_string(r.verification.status)},
                    {"max_multiplicity", r.verification.max_multiplicity},
                    {"vectors", r.verification.vectors},
                    {"counterexample", r.verification.counterexample.empty()
                                           ? Json(nullptr)
                                           : Json(r.verification.counterexample)},
                    {"detail", r.verification.detail}};

  Json out;
  out["decision"] = yes_no(r.decision.yes);
  out["detection_time"] = to_json(r.decision.target_time);
  out["detection_multiplicity"] = det ? to_json(det->multiplicity) : Json(0);
  out["detection_intensity"] = det ? to_json(det->intensity) : Json("0");
  out["B"] = to_json(r.labels.total());
  out["n"] = inst.universe_size();
  out["m"] = inst.subset_count();
  out["k"] = to_json(r.device.k());
  out["event_count"] = to_json(r.profile.total_multiplicity());
  out["distinct_times"] = r.profile.events.size();
  out["per_ray_intensity"] = to_json(r.profile.per_ray_intensity());
  out["total_intensity"] = to_json(r.profile.total_intensity());
  out["label_system"] = label_system_json(r.labels);
  out["verification_status"] = to_string(r.verification.status);
  out["verification"] = std::move(verification);
  out["oracle_agrees"] = r.oracle ? Json(r.oracle_agrees()) : Json(nullptr);
  out["oracle_witness_count"] = r.oracle ? Json(r.oracle->witnesses.size()) : Json(nullptr);
  out["device"] = Json{{"nodes", r.device.node_count()}, {"gaps", std::move(gaps)}};
  out["warnings"] = warnings;
  return out;
}

Json oracle_report(const XCInstance& inst, const OracleResult& result) {
  return Json{{"decision", yes_no(result.yes)},
              {"n", inst.universe_size()},
              {"m", inst.subset_count()},
              {"witness_count", result.witnesses.size()},
              {"witnesses", result.witnesses}};
}

Json labels_report(const LabelSystem& ls) { return label_system_json(ls); }

Json verify_report(const LabelSystem& ls, const NoncollisionResult& result,
                   std::uint32_t max_multiplicity) {
  return Json{{"label_system", label_system_json(ls)},
              {"max_multiplicity", max_multiplicity},
              {"vectors", result.vectors},
              {"holds", result.holds},
              {"counterexample",
               result.holds ? Json(nullptr) : Json(result.counterexample)}};
}

Json feasibility_report(const FeasibilityReport& r) {
  return Json{{"material", r.material},
              {"refractive_index", r.refractive_index},
              {"light_speed_m_s", r.light_speed_m_s},
              {"photodiode_rise_time_s", r.photodiode_rise_time_s},
              {"unit_length_m", r.unit_length_m},
              {"cable_lengths_m", r.cable_lengths_m},
              {"max_cable_m", r.max_cable_m},
              {"max_universe_size", r.max_universe_size},
              {"max_universe_size_note", r.max_universe_size_note},
              {"longest_arc_m", r.longest_arc_m},
              {"skip_arc_m", r.skip_arc_m},
              {"fits_cable_budget", r.fits_cable_budget},
              {"m", r.power.splits},
              {"power_ratio", r.power.per_ray_ratio},
              {"min_detector_gain", r.power.min_detector_gain},
              {"detector_gain", r.detector_gain},
              {"detectable", r.power.detectable}};
}

void write_arrivals_csv(std::ostream& out, const ArrivalProfile& profile) {
  out << "time_units,multiplicity,intensity_num,intensity_den\n";
  for (const auto& e : profile.events) {
    out << e.time << ',' << e.multiplicity << ','
        << boost::multiprecision::numerator(e.intensity) << ','
        << boost::multiprecision::denominator(e.intensity) << '\n';
  }
}

}  // namespace lightxc
