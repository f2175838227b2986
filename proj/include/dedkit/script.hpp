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

// Line-oriented deduction scripts:
//
//   # comment
//   sig P/0 R/1 c/0 x
//   hyp <formula>
//   step <formula> ; axiom
//   step <formula> ; hyp <i>
//   step <formula> ; mp <i> <j>
//   step <formula> ; gen <i> <var>
//
// A script without step lines is a theory (a bare hypothesis list).

#ifndef DEDKIT_SCRIPT_HPP_
#define DEDKIT_SCRIPT_HPP_

#include <span>
#include <string>
#include <string_view>

#include "dedkit/kernel.hpp"

namespace dedkit {

// Variables used but not declared on the sig line are appended to the
// signature in order of first appearance (hypotheses first, then steps).
// Throws ScriptError.
Deduction parse_script(std::string_view text);

std::string print_script(const Deduction& d);

// Appends to sig.variables every variable of the formulas it lacks.
void declare_variables(Signature& sig, std::span<const Formula> formulas);

}  // namespace dedkit

#endif  // DEDKIT_SCRIPT_HPP_
