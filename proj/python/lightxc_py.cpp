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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "lightxc/cli.hpp"
#include "lightxc/report.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

py::object to_py(const lightxc::BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

lightxc::BigInt from_py(const py::handle& h) {
  return lightxc::BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::object to_py(const lightxc::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list to_py(const std::vector<lightxc::BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

lightxc::LabelSystem labels_from(const std::optional<py::list>& labels, std::size_t n) {
  if (!labels) return lightxc::generate_labels(n);
  std::vector<lightxc::BigInt> values;
  for (auto item : *labels) values.push_back(from_py(item));
  return lightxc::LabelSystem(std::move(values));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Delay-line optical device simulator for Exact Cover";

  static py::exception<lightxc::Error> error(m, "LightxcError");
  static py::exception<lightxc::CapExceeded> cap(m, "CapExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const lightxc::CapExceeded& e) {
      cap(e.what());
    } catch (const lightxc::Error& e) {
      error(e.what());
    }
  });

  py::class_<lightxc::XCInstance>(m, "Instance")
      .def(py::init<std::size_t, std::vector<lightxc::Subset>, bool>(), "n"_a, "subsets"_a,
           "allow_duplicates"_a = false)
      .def_property_readonly("n", &lightxc::XCInstance::universe_size)
      .def_property_readonly("m", &lightxc::XCInstance::subset_count)
      .def_property_readonly("subsets", &lightxc::XCInstance::subsets)
      .def("render", &lightxc::render_instance)
      .def("coverage", &lightxc::element_coverage)
      .def("__eq__", [](const lightxc::XCInstance& a, const lightxc::XCInstance& b) { return a == b; })
      .def("__repr__", [](const lightxc::XCInstance& i) {
        return "Instance(n=" + std::to_string(i.universe_size()) +
               ", m=" + std::to_string(i.subset_count()) + ")";
      });

  m.def("parse_instance",
        [](const std::string& text, bool allow_duplicates) {
          return lightxc::parse_instance(text, lightxc::ParseOptions{allow_duplicates});
        },
        "text"_a, "allow_duplicates"_a = false);

  m.def("generate_labels",
        [](std::size_t n) { return to_py(lightxc::generate_labels(n).labels()); }, "n"_a,
        "Labels 2^n - 2^(n-i) for i = 1..n as Python ints.");

  m.def("verify_noncollision",
        [](const py::list& labels, std::uint32_t max_multiplicity, std::uint64_t max_vectors) {
          std::vector<lightxc::BigInt> values;
          for (auto item : labels) values.push_back(from_py(item));
          const auto r = lightxc::find_collision(values, max_multiplicity, max_vectors);
          return py::dict("holds"_a = r.holds, "vectors"_a = r.vectors,
                          "counterexample"_a = r.holds ? py::object(py::none())
                                                       : py::cast(r.counterexample));
        },
        "labels"_a, "max_multiplicity"_a, "max_vectors"_a = lightxc::kDefaultMaxVectors);

  m.def("solve",
        [](const lightxc::XCInstance& inst, py::object k, bool check,
           std::optional<py::list> labels) {
          lightxc::SolveOptions opts;
          opts.k = from_py(k);
          opts.check = check;
          const auto ls = labels_from(labels, inst.universe_size());
          return to_py(lightxc::solve_report(inst, lightxc::solve(inst, ls, opts)));
        },
        "instance"_a, "k"_a = 1, "check"_a = false, "labels"_a = py::none(),
        "Run the device pipeline; returns the JSON report as a dict.");

  m.def("arrivals",
        [](const lightxc::XCInstance& inst, py::object k, std::optional<py::list> labels) {
          const auto ls = labels_from(labels, inst.universe_size());
          const auto profile = lightxc::propagate(lightxc::build_device(inst, ls, from_py(k)));
          py::list out;
          for (const auto& e : profile.events) {
            out.append(py::make_tuple(to_py(e.time), to_py(e.multiplicity),
                                      to_py(boost::multiprecision::numerator(e.intensity)),
                                      to_py(boost::multiprecision::denominator(e.intensity))));
          }
          return out;
        },
        "instance"_a, "k"_a = 1, "labels"_a = py::none(),
        "Destination events as (time, multiplicity, intensity_num, intensity_den).");

  m.def("oracle_exact_cover",
        [](const lightxc::XCInstance& inst) {
          return to_py(lightxc::oracle_report(inst, lightxc::oracle_exact_cover(inst)));
        },
        "instance"_a);

  m.def("oracle_sum_multiset",
        [](const lightxc::XCInstance& inst) {
          return to_py(lightxc::oracle_sum_multiset(
              inst, lightxc::generate_labels(inst.universe_size())));
        },
        "instance"_a);

  m.def("unit_length",
        [](const std::string& material, double rise_time_s) {
          return lightxc::unit_length(
              lightxc::find_material(material, lightxc::default_materials()), rise_time_s);
        },
        "material"_a = "Vacuum", "rise_time_s"_a = lightxc::kDefaultRiseTime);

  m.def("max_instance_size",
        [](double max_cable_m, const std::string& material, double rise_time_s) {
          return lightxc::max_instance_size(
              max_cable_m, lightxc::find_material(material, lightxc::default_materials()),
              rise_time_s);
        },
        "max_cable_m"_a, "material"_a = "Vacuum", "rise_time_s"_a = lightxc::kDefaultRiseTime);

  m.def("power_budget",
        [](std::size_t subsets, double gain) {
          const auto b = lightxc::power_budget(subsets, gain);
          return py::dict("per_ray_ratio"_a = b.per_ray_ratio,
                          "min_detector_gain"_a = b.min_detector_gain,
                          "detectable"_a = b.detectable);
        },
        "m"_a, "detector_gain"_a = lightxc::kDefaultDetectorGain);

  m.def("feasibility",
        [](const lightxc::XCInstance& inst, const std::string& material, double rise_time_s,
           double max_cable_m, double detector_gain) {
          lightxc::FeasibilityParams params;
          params.rise_time_s = rise_time_s;
          params.max_cable_m = max_cable_m;
          params.detector_gain = detector_gain;
          return to_py(lightxc::feasibility_report(lightxc::assess_feasibility(
              inst, lightxc::generate_labels(inst.universe_size()),
              lightxc::find_material(material, lightxc::default_materials()), params)));
        },
        "instance"_a, "material"_a = "Vacuum", "rise_time_s"_a = lightxc::kDefaultRiseTime,
        "max_cable_m"_a = lightxc::kDefaultMaxCable,
        "detector_gain"_a = lightxc::kDefaultDetectorGain);

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "lightxc");
          std::ostringstream out, err;
          const int status = lightxc::cli::run(args, out, err);
          return py::make_tuple(status, out.str(), err.str());
        },
        "args"_a, "Run a CLI subcommand; returns (status, stdout, stderr).");
}
