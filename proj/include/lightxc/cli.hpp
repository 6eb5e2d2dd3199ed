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

#ifndef LIGHTXC_CLI_HPP_
#define LIGHTXC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lightxc::cli {

// Exit statuses. solve and oracle encode the decision; every other
// subcommand returns kYes on success.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kRuntimeError = 3;

// Subcommands: solve | oracle | labels | feasibility | verify.
// args[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lightxc::cli

#endif  // LIGHTXC_CLI_HPP_
