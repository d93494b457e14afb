// Copyright 2026 The Heyting Toolkit Authors
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

#ifndef HEYTING_TOOLS_CLI_H_
#define HEYTING_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace heyting::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudget = 3;
inline constexpr int kInternal = 4;

// Runs one invocation; args excludes the program name. Output is written to
// `out` in one piece after the command completes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heyting::cli

#endif  // HEYTING_TOOLS_CLI_H_
