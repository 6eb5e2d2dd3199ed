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

#include <map>

#include "doctest.h"
#include "lightxc/oracle.hpp"
#include "lightxc/simulator.hpp"
#include "test_support.hpp"

using namespace lightxc;

namespace {

std::vector<BigInt> times_with_multiplicity(const ArrivalProfile& p) {
  std::vector<BigInt> out;
  for (const auto& e : p.events) {
    for (BigInt i = 0; i < e.multiplicity; ++i) out.push_back(e.time);
  }
  return out;
}

}  // namespace

TEST_CASE("worked example with k = 100") {
  const DeviceGraph g = build_device(testing::worked_example(), generate_labels(5), 100);
  const ArrivalProfile p = propagate(g);
  CHECK(p.events.size() == 64);
  CHECK(p.total_multiplicity() == 64);
  CHECK(p.total_intensity() == 1);
  CHECK(p.per_ray_intensity() == Rational(1, 64));
  for (const auto& e : p.events) {
    CHECK(e.multiplicity == 1);
    CHECK(e.intensity == Rational(1, 64));
  }
  CHECK(p.events.front().time == 600);
  CHECK(p.events.back().time == 959);

  const Decision d = decide(p);
  CHECK(d.yes);
  CHECK(d.target_time == 729);
  REQUIRE(d.detection);
  CHECK(d.detection->multiplicity == 1);
  CHECK(d.detection->intensity == Rational(1, 64));

  const auto exact = detect_window(p, 0);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].time == 729);
  CHECK(detect_window(p, 10000).size() == 64);
  CHECK_THROWS_AS(detect_window(p, -1), InvalidArgument);
}

TEST_CASE("arrivals at the third node") {
  const BigInt k = 100;
  const DeviceGraph g = build_device(testing::worked_example(), generate_labels(5), k);
  const ArrivalProfile p = arrivals_at_node(g, 2);
  std::vector<BigInt> times;
  for (const auto& e : p.events) times.push_back(e.time);
  // 2k, delay(C1) + 2k, delay(C2) + 2k, delay(C1) + delay(C2) + 2k
  CHECK(times == std::vector<BigInt>{200, 244, 271, 315});
  CHECK(p.total_intensity() == 1);
  CHECK(arrivals_at_node(g, 0).events.size() == 1);
  CHECK_THROWS_AS(arrivals_at_node(g, 7), InvalidArgument);
}

TEST_CASE("m = 0 device") {
  const DeviceGraph g = build_device(parse_instance("2 0\n"), generate_labels(2));
  const ArrivalProfile p = propagate(g);
  REQUIRE(p.events.size() == 1);
  CHECK(p.events[0].time == 0);
  CHECK(p.events[0].intensity == 1);
  CHECK_FALSE(decide(p).yes);
  CHECK(decide(p).target_time == 5);
  CHECK(detect_window(p, 0).empty());
}

TEST_CASE("uncovered element gives NO") {
  const XCInstance inst = parse_instance("2 1\n1\n");
  const ArrivalProfile p = propagate(build_device(inst, generate_labels(2)));
  const Decision d = decide(p);
  CHECK_FALSE(d.yes);
  CHECK_FALSE(d.detection);
  CHECK(detect_window(p, 0).empty());
}

TEST_CASE("coincident rays merge") {
  // C1 = {1,2} and C2 = {3} with labels 1,2,3: delay 3 both ways.
  const XCInstance inst(3, {{1, 2}, {3}});
  const LabelSystem ls(std::vector<BigInt>{1, 2, 3});
  const ArrivalProfile p = propagate(build_device(inst, ls, 1));
  // Sums: 0, 3, 3, 6 -> times 2, 5 (x2), 8.
  REQUIRE(p.events.size() == 3);
  CHECK(p.events[1].time == 5);
  CHECK(p.events[1].multiplicity == 2);
  CHECK(p.events[1].intensity == Rational(1, 2));
  CHECK(p.total_multiplicity() == 4);
  CHECK(p.total_intensity() == 1);
}

TEST_CASE("event cap is enforced") {
  const DeviceGraph g = build_device(testing::worked_example(), generate_labels(5));
  CHECK_THROWS_AS(propagate(g, PropagateOptions{63}), CapExceeded);
  CHECK_NOTHROW(propagate(g, PropagateOptions{64}));
}

TEST_CASE("long chain of duplicate subsets stays exact") {
  // 200 copies of {1}: a ray that takes exactly one subset cable covers the
  // universe, so the detection event merges 200 rays out of 2^200.
  const XCInstance inst(1, std::vector<Subset>(200, Subset{1}), true);
  const ArrivalProfile p = propagate(build_device(inst, generate_labels(1)));
  CHECK(p.events.size() == 201);
  CHECK(p.total_multiplicity() == (BigInt(1) << 200));
  CHECK(p.total_intensity() == 1);
  CHECK(p.per_ray_intensity() == Rational(BigInt(1), BigInt(1) << 200));
  const Decision d = decide(p);
  CHECK(d.yes);
  CHECK(d.target_time == 201);
  CHECK(d.detection->multiplicity == 200);
  CHECK(d.detection->intensity == Rational(BigInt(200), BigInt(1) << 200));
}

TEST_CASE("property: profile matches oracle sums, invariants, oracle decision, k-invariance") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 250; ++trial) {
    const XCInstance inst = testing::random_instance(rng, 8, 12);
    const LabelSystem ls = generate_labels(inst.universe_size());
    const std::size_t m = inst.subset_count();
    const OracleResult truth = oracle_exact_cover(inst);

    std::optional<bool> first_answer;
    for (int k : {1, 7, 100}) {
      const ArrivalProfile p = propagate(build_device(inst, ls, k));
      CHECK(p.total_multiplicity() == (BigInt(1) << m));
      CHECK(p.total_intensity() == 1);
      for (std::size_t i = 1; i < p.events.size(); ++i) {
        CHECK(p.events[i - 1].time < p.events[i].time);
      }
      for (const auto& e : p.events) {
        CHECK(e.intensity == Rational(e.multiplicity) * p.per_ray_intensity());
        CHECK(e.time >= BigInt(k) * static_cast<unsigned>(m));
      }

      std::vector<BigInt> shifted = oracle_sum_multiset(inst, ls);
      for (auto& s : shifted) s += BigInt(k) * static_cast<unsigned>(m);
      CHECK(times_with_multiplicity(p) == shifted);

      const Decision d = decide(p);
      CHECK(d.yes == truth.yes);
      if (d.yes) CHECK(d.detection->multiplicity == truth.witnesses.size());
      if (!first_answer) first_answer = d.yes;
      CHECK(d.yes == *first_answer);
    }
  }
}
