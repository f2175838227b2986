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

#include "dedkit/script.hpp"

#include <charconv>
#include <sstream>

#include "dedkit/error.hpp"

namespace dedkit {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::size_t parse_index(const std::string& word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() || value == 0)
    throw ScriptError("expected a positive index, found '" + word + "'", line);
  return value;
}

Justification parse_justification(std::string_view text, const Signature& sig,
                                  std::size_t line) {
  std::istringstream in{std::string(text)};
  std::string rule;
  std::vector<std::string> words;
  in >> rule;
  for (std::string w; in >> w;) words.push_back(w);
  auto want = [&](std::size_t n) {
    if (words.size() != n)
      throw ScriptError("'" + rule + "' takes " + std::to_string(n) + " argument(s)", line);
  };
  if (rule == "axiom") {
    want(0);
    return ByAxiom{};
  }
  if (rule == "hyp") {
    want(1);
    return ByHypothesis{parse_index(words[0], line)};
  }
  if (rule == "mp") {
    want(2);
    return ByModusPonens{parse_index(words[0], line), parse_index(words[1], line)};
  }
  if (rule == "gen") {
    want(2);
    if (!sig.is_variable_spelling(words[1]))
      throw ScriptError("'" + words[1] + "' is not a variable", line);
    return ByGeneralization{parse_index(words[0], line), words[1]};
  }
  throw ScriptError("unknown justification '" + rule + "'", line);
}

Formula parse_line_formula(std::string_view text, const Signature& sig,
                           std::size_t line) {
  try {
    return parse_formula(text, sig);
  } catch (const Error& e) {
    throw ScriptError(e.what(), line);
  }
}

}  // namespace

void declare_variables(Signature& sig, std::span<const Formula> formulas) {
  std::vector<std::string> seen = sig.variables();
  for (const auto& f : formulas) collect_variables(f, seen);
  for (std::size_t i = sig.variables().size(); i < seen.size(); ++i)
    sig.add_variable(seen[i]);
}

Deduction parse_script(std::string_view text) {
  Deduction d;
  bool have_sig = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (keyword == "sig") {
      if (have_sig) throw ScriptError("duplicate sig line", line_no);
      if (!d.hypotheses.empty() || !d.steps.empty())
        throw ScriptError("sig line must precede hyp and step lines", line_no);
      try {
        d.sig = parse_signature(rest);
      } catch (const Error& e) {
        throw ScriptError(e.what(), line_no);
      }
      have_sig = true;
    } else if (keyword == "hyp") {
      if (!d.steps.empty())
        throw ScriptError("hyp lines must precede step lines", line_no);
      d.hypotheses.push_back(parse_line_formula(rest, d.sig, line_no));
    } else if (keyword == "step") {
      auto semi = rest.rfind(';');
      if (semi == std::string_view::npos)
        throw ScriptError("step needs '; <justification>'", line_no);
      Formula f = parse_line_formula(trim(rest.substr(0, semi)), d.sig, line_no);
      Justification why = parse_justification(rest.substr(semi + 1), d.sig, line_no);
      d.steps.push_back({std::move(f), std::move(why)});
    } else {
      throw ScriptError("unknown directive '" + std::string(keyword) + "'", line_no);
    }
  }
  if (!have_sig) throw ScriptError("missing sig line", line_no == 0 ? 1 : line_no);

  std::vector<Formula> all = d.hypotheses;
  for (const auto& s : d.steps) all.push_back(s.formula);
  try {
    declare_variables(d.sig, all);
  } catch (const Error& e) {
    throw ScriptError(e.what(), line_no);
  }
  return d;
}

std::string print_script(const Deduction& d) {
  std::string out = d.sig.to_string() + "\n";
  for (const auto& h : d.hypotheses) out += "hyp " + print_formula(h) + "\n";
  for (const auto& s : d.steps) {
    out += "step " + print_formula(s.formula) + " ; ";
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, ByAxiom>) {
            out += "axiom";
          } else if constexpr (std::is_same_v<J, ByHypothesis>) {
            out += "hyp " + std::to_string(j.index);
          } else if constexpr (std::is_same_v<J, ByModusPonens>) {
            out += "mp " + std::to_string(j.antecedent) + " " +
                   std::to_string(j.implication);
          } else {
            out += "gen " + std::to_string(j.premise) + " " + j.variable;
          }
        },
        s.why);
    out += "\n";
  }
  return out;
}

}  // namespace dedkit
