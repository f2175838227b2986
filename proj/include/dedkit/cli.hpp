/* Copyright 2026 The dedkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Batch command-line front end.
//
// Exit codes: 0 success, true, or no counterexample; 1 false, counterexample,
// or nothing found; 2 usage or input error. Machine output (scripts,
// numbers, models) goes to `out`, diagnostics to `err`.

#ifndef DEDKIT_CLI_HPP_
#define DEDKIT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dedkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedkit

#endif  // DEDKIT_CLI_HPP_
