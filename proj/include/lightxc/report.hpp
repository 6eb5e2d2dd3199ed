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

// The end-to-end pipeline and its machine-readable reports.
//
// JSON objects keep insertion order and carry the same keys for every
// input. Integers that fit in 64 bits are JSON numbers, larger ones are
// decimal strings; rationals are "num/den" strings.

#ifndef LIGHTXC_REPORT_HPP_
#define LIGHTXC_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lightxc/device.hpp"
#include "lightxc/feasibility.hpp"
#include "lightxc/instance.hpp"
#include "lightxc/labeling.hpp"
#include "lightxc/oracle.hpp"
#include "lightxc/simulator.hpp"

namespace lightxc {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const Rational& v);

enum class VerificationStatus { kHolds, kCounterexample, kUnverified };

const char* to_string(VerificationStatus s);

struct LabelVerification {
  VerificationStatus status = VerificationStatus::kUnverified;
  std::uint32_t max_multiplicity = 1;
  std::uint64_t vectors = 0;
  std::vector<std::uint32_t> counterexample;
  std::string detail;
};

// Bounded non-collision check at multiplicity max(m, 1); never throws on a
// too-large space, reports kUnverified instead.
LabelVerification verify_for_instance(const LabelSystem& ls, std::size_t m,
                                      std::uint64_t max_vectors = kDefaultMaxVectors);

struct SolveOptions {
  BigInt k = kDefaultOffset;
  bool check = false;  // cross-check against the brute-force oracle
  std::uint64_t event_cap = kDefaultEventCap;
  std::uint64_t verify_cap = kDefaultMaxVectors;
  std::size_t oracle_max_subsets = kDefaultOracleMaxSubsets;
};

struct SolveResult {
  LabelSystem labels;
  DeviceGraph device;
  ArrivalProfile profile;
  Decision decision;
  LabelVerification verification;
  std::optional<OracleResult> oracle;  // set when options.check

  bool oracle_agrees() const { return oracle && oracle->yes == decision.yes; }
};

// label -> device -> propagate -> decide, plus verification and the
// optional oracle cross-check.
SolveResult solve(const XCInstance& inst, const LabelSystem& labels,
                  const SolveOptions& options = {});

Json solve_report(const XCInstance& inst, const SolveResult& result,
                  const std::vector<std::string>& warnings = {});
Json oracle_report(const XCInstance& inst, const OracleResult& result);
Json labels_report(const LabelSystem& ls);
Json verify_report(const LabelSystem& ls, const NoncollisionResult& result,
                   std::uint32_t max_multiplicity);
Json feasibility_report(const FeasibilityReport& report);

// Columns: time_units,multiplicity,intensity_num,intensity_den.
void write_arrivals_csv(std::ostream& out, const ArrivalProfile& profile);

}  // namespace lightxc

#endif  // LIGHTXC_REPORT_HPP_
