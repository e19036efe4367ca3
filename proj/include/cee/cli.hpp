// Copyright 2026 The cee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEE_CLI_HPP_
#define CEE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cee::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidSpace = 1;
inline constexpr int kUndetermined = 2;
inline constexpr int kKernelMissing = 3;
inline constexpr int kUsage = 4;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cee::cli

#endif  // CEE_CLI_HPP_
