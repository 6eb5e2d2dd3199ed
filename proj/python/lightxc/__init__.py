# Copyright 2026 The lightxc Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Delay-line optical device simulator for Exact Cover."""

from ._core import (
    CapExceeded,
    Instance,
    LightxcError,
    arrivals,
    feasibility,
    generate_labels,
    max_instance_size,
    oracle_exact_cover,
    oracle_sum_multiset,
    parse_instance,
    power_budget,
    run_cli,
    solve,
    unit_length,
    verify_noncollision,
)

__all__ = [
    "CapExceeded",
    "Instance",
    "LightxcError",
    "arrivals",
    "feasibility",
    "generate_labels",
    "max_instance_size",
    "oracle_exact_cover",
    "oracle_sum_multiset",
    "parse_instance",
    "power_budget",
    "run_cli",
    "solve",
    "unit_length",
    "verify_noncollision",
]
