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

#ifndef DEDKIT_ERROR_HPP_
#define DEDKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dedkit {

// Root of every exception thrown by the library. Kernel verdicts are values,
// not exceptions; these signal malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad signature declaration (duplicate name, wrong case, reserved word).
class SignatureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Substituting t for v in f would capture a variable of t.
class CaptureError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// infer_justifications found no rule for a line (1-based).
class ElaborationError : public Error {
 public:
  ElaborationError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Deduction script syntax problem; line is 1-based.
class ScriptError : public Error {
 public:
  ScriptError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A symbol has no entry in the active symbol-code table.
class EncodeError : public Error {
 public:
  using Error::Error;
};

// The number is not the code of a formula or formula sequence.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dedkit

#endif  // DEDKIT_ERROR_HPP_
