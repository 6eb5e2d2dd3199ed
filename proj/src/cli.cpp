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

#include "lightxc/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "lightxc/report.hpp"

namespace lightxc::cli {
namespace {

// Bad command-line values that CLI11 cannot validate on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BigInt parse_bigint(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
  }
  return BigInt(text);
}

LabelSystem parse_label_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<BigInt> labels;
  for (std::string tok; in >> tok;) labels.push_back(parse_bigint(tok, "label"));
  try {
    return LabelSystem(std::move(labels));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--labels: ") + e.what());
  }
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + v.str();
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct InstanceArgs {
  std::string path;
  bool allow_duplicates = false;
};

XCInstance load_instance(const InstanceArgs& a, std::ostream& err,
                         std::vector<std::string>* warnings_out = nullptr) {
  const std::string text = read_file(a.path);
  std::vector<std::string> warnings;
  XCInstance inst = parse_instance(text, ParseOptions{a.allow_duplicates}, &warnings);
  for (const auto& w : warnings) err << "warning: " << a.path << ": " << w << '\n';
  if (warnings_out) *warnings_out = std::move(warnings);
  return inst;
}

void add_instance_args(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("instance", a.path, "Instance file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--allow-duplicates", a.allow_duplicates,
                "Accept repeated subsets with a warning");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delay-line optical device simulator for Exact Cover", "lightxc"};
  app.require_subcommand(1);

  // solve
  InstanceArgs solve_in;
  std::string k_text = "1";
  std::string format = "text";
  bool solve_json = false;
  bool check = false;
  std::string csv_path;
  std::string solve_labels;
  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Simulate the device and decide the instance");
  add_instance_args(solve_cmd, solve_in);
  solve_cmd->add_option("--k", k_text, "Constant added to every cable, in delay units")
      ->capture_default_str();
  solve_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  solve_cmd->add_flag("--json", solve_json, "Same as --format json");
  solve_cmd->add_option("--arrivals-csv", csv_path, "Write Destination arrivals as CSV");
  solve_cmd->add_flag("--check", check, "Cross-check against the brute-force oracle");
  solve_cmd->add_option("--labels", solve_labels,
                        "Custom label system, space separated (default: generated)");
  solve_cmd->add_option("--event-cap", solve_opts.event_cap,
                        "Max distinct arrival times per node")
      ->capture_default_str();
  solve_cmd->add_option("--verify-cap", solve_opts.verify_cap,
                        "Max coefficient vectors for label verification")
      ->capture_default_str();
  solve_cmd->add_option("--oracle-max-subsets", solve_opts.oracle_max_subsets,
                        "Largest m the --check oracle enumerates")
      ->capture_default_str();

  // oracle
  InstanceArgs oracle_in;
  bool oracle_json = false;
  std::size_t oracle_max = kDefaultOracleMaxSubsets;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force exact cover ground truth");
  add_instance_args(oracle_cmd, oracle_in);
  oracle_cmd->add_flag("--json", oracle_json, "JSON report");
  oracle_cmd->add_option("--max-subsets", oracle_max, "Largest m to enumerate")
      ->capture_default_str();

  // labels
  std::size_t labels_n = 0;
  bool labels_json = false;
  auto* labels_cmd = app.add_subcommand("labels", "Print the generated label system");
  labels_cmd->add_option("--n", labels_n, "Universe size")
      ->required()
      ->check(CLI::PositiveNumber);
  labels_cmd->add_flag("--json", labels_json, "JSON report");

  // verify
  std::size_t verify_n = 0;
  std::string verify_labels;
  std::uint32_t verify_mult = 1;
  std::uint64_t verify_cap = kDefaultMaxVectors;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Bounded non-collision check of a label system");
  auto* vn = verify_cmd->add_option("--n", verify_n, "Check the generated system of size n")
                 ->check(CLI::PositiveNumber);
  auto* vl = verify_cmd->add_option("--labels", verify_labels, "Custom labels, space separated");
  vn->excludes(vl);
  verify_cmd->add_option("--max-multiplicity", verify_mult, "Largest coefficient searched")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-vectors", verify_cap, "Search-space limit")->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "JSON report");

  // feasibility
  InstanceArgs feas_in;
  std::string material_name = "Vacuum";
  std::string materials_path;
  double rise_ps = kDefaultRiseTime * 1e12;
  FeasibilityParams feas;
  std::string feas_k = "1";
  bool feas_json = false;
  auto* feas_cmd = app.add_subcommand("feasibility", "Physical sizing of the device");
  add_instance_args(feas_cmd, feas_in);
  feas_cmd->add_option("--material", material_name, "Cable material")->capture_default_str();
  feas_cmd->add_option("--materials", materials_path,
                       "Extra materials file: '<name> <refractive_index>' per line")
      ->check(CLI::ExistingFile);
  feas_cmd->add_option("--rise-time-ps", rise_ps, "Photodiode rise time in picoseconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  feas_cmd->add_option("--max-cable-m", feas.max_cable_m, "Longest available cable in meters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  feas_cmd->add_option("--detector-gain", feas.detector_gain, "Detector gain")
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
      ->capture_default_str();
  feas_cmd->add_option("--k", feas_k, "Cable offset in delay units")->capture_default_str();
  feas_cmd->add_flag("--json", feas_json, "JSON report");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsageError;
  }

  try {
    if (*solve_cmd) {
      std::vector<std::string> warnings;
      const XCInstance inst = load_instance(solve_in, err, &warnings);
      solve_opts.k = parse_bigint(k_text, "--k");
      if (solve_opts.k < 1) throw UsageError("--k must be at least 1");
      solve_opts.check = check;
      const LabelSystem labels = solve_labels.empty() ? generate_labels(inst.universe_size())
                                                      : parse_label_list(solve_labels);
      if (labels.size() != inst.universe_size()) {
        throw UsageError("--labels gives " + std::to_string(labels.size()) +
                         " labels for a universe of " + std::to_string(inst.universe_size()));
      }
      const SolveResult r = solve(inst, labels, solve_opts);

      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error("cannot write '" + csv_path + "'");
        write_arrivals_csv(csv, r.profile);
      }
      if (solve_json || format == "json") {
        print_json(out, solve_report(inst, r, warnings));
      } else {
        const auto& det = r.decision.detection;
        out << "decision: " << (r.decision.yes ? "YES" : "NO") << '\n'
            << "detection time: " << r.decision.target_time << " (B = " << labels.total()
            << ", m = " << inst.subset_count() << ", k = " << r.device.k() << ")\n"
            << "detected rays: " << (det ? det->multiplicity : BigInt(0)) << " (intensity "
            << (det ? lightxc::to_string(det->intensity) : std::string("0")) << ")\n"
            << "arrivals: " << r.profile.total_multiplicity() << " rays at "
            << r.profile.events.size() << " distinct times\n"
            << "labels: " << join(labels.labels())
            << (is_canonical(labels) ? " (generated)" : " (custom)") << '\n'
            << "verification: " << to_string(r.verification.status)
            << " (multiplicity <= " << r.verification.max_multiplicity << ")\n";
        if (r.oracle) {
          out << "oracle: " << (r.oracle_agrees() ? "agrees" : "DISAGREES") << " ("
              << r.oracle->witnesses.size() << " exact covers)\n";
        }
      }
      if (r.oracle && !r.oracle_agrees()) {
        err << "error: simulator and oracle disagree\n";
        return kRuntimeError;
      }
      return r.decision.yes ? kYes : kNo;
    }

    if (*oracle_cmd) {
      const XCInstance inst = load_instance(oracle_in, err);
      const OracleResult r = oracle_exact_cover(inst, oracle_max);
      if (oracle_json) {
        print_json(out, oracle_report(inst, r));
      } else {
        out << "decision: " << (r.yes ? "YES" : "NO") << '\n';
        for (const auto& w : r.witnesses) {
          out << "cover:";
          for (auto i : w) out << " C" << i;
          out << '\n';
        }
      }
      return r.yes ? kYes : kNo;
    }

    if (*labels_cmd) {
      const LabelSystem ls = generate_labels(labels_n);
      if (labels_json) {
        print_json(out, labels_report(ls));
      } else {
        out << join(ls.labels()) << '\n' << "B = " << ls.total() << '\n';
      }
      return kYes;
    }

    if (*verify_cmd) {
      if (verify_labels.empty() && verify_n == 0) {
        throw UsageError("verify needs --n or --labels");
      }
      const LabelSystem ls =
          verify_labels.empty() ? generate_labels(verify_n) : parse_label_list(verify_labels);
      const auto r = verify_noncollision(ls, verify_mult, verify_cap);
      if (verify_json) {
        print_json(out, verify_report(ls, r, verify_mult));
      } else {
        out << "labels: " << join(ls.labels()) << " (B = " << ls.total() << ")\n";
        if (r.holds) {
          out << "non-collision holds for all " << r.vectors
              << " coefficient vectors with entries <= " << verify_mult << '\n';
        } else {
          out << "collision: coefficients";
          for (auto a : r.counterexample) out << ' ' << a;
          out << " reach B\n";
        }
      }
      return kYes;
    }

    if (*feas_cmd) {
      const XCInstance inst = load_instance(feas_in, err);
      std::vector<Material> table = default_materials();
      if (!materials_path.empty()) {
        auto extra = parse_materials(read_file(materials_path));
        table.insert(table.end(), extra.begin(), extra.end());
      }
      const Material* material = nullptr;
      try {
        material = &find_material(material_name, table);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      feas.rise_time_s = rise_ps * 1e-12;
      feas.k = parse_bigint(feas_k, "--k");
      if (feas.k < 1) throw UsageError("--k must be at least 1");
      const FeasibilityReport r =
          assess_feasibility(inst, generate_labels(inst.universe_size()), *material, feas);
      if (feas_json) {
        print_json(out, feasibility_report(r));
      } else {
        out << "material: " << r.material << " (n = " << r.refractive_index
            << ", light speed " << r.light_speed_m_s << " m/s)\n"
            << "unit length: " << r.unit_length_m << " m per " << rise_ps << " ps\n"
            << "cable lengths (m):";
        for (double len : r.cable_lengths_m) out << ' ' << len;
        out << '\n'
            << "longest arc: " << r.longest_arc_m << " m"
            << (r.fits_cable_budget ? " (fits " : " (exceeds ") << r.max_cable_m << " m)\n"
            << "max universe size: " << r.max_universe_size << '\n'
            << "per-ray power: " << r.power.per_ray_ratio << " (needs gain >= "
            << r.power.min_detector_gain << ", "
            << (r.power.detectable ? "detectable" : "not detectable") << " at "
            << r.detector_gain << ")\n";
      }
      return kYes;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace lightxc::cli
