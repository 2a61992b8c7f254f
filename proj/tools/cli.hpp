// Copyright 2026 The skewrank Authors
//
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

#ifndef SKEWRANK_TOOLS_CLI_HPP
#define SKEWRANK_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace skewrank::cli {

/// Seed used when neither --seed nor SKEWRANK_SEED is given.
std::uint64_t default_seed();

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 on success, 1 when a check fails, 2 on usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewrank::cli

#endif  // SKEWRANK_TOOLS_CLI_HPP
