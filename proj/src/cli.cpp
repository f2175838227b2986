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

#include "dedkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dedkit/dedthm.hpp"
#include "dedkit/error.hpp"
#include "dedkit/godel.hpp"
#include "dedkit/models.hpp"
#include "dedkit/script.hpp"

namespace dedkit {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Deduction load_script(const std::string& path) {
  try {
    return parse_script(read_file(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// A signature file holds one signature, possibly over several lines, with
// '#' comments.
Signature load_signature(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string text;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    text += line + " ";
  }
  return parse_signature(text);
}

Formula load_formula(const std::string& text, Signature& sig) {
  Formula f = parse_formula(text, sig);
  check_well_formed(f, sig);
  declare_variables(sig, std::span<const Formula>(&f, 1));
  return f;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deduction checker, transformer and arithmetizer for first-order logic",
               "dedkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, file_b, output, formula, sig_file, theory_file, number, x, y;
  std::size_t index = 0, max_len = 0, pool_depth = 0, max_size = 0;
  bool as_deduction = false;

  auto* check = app.add_subcommand("check", "Verify a deduction script");
  check->add_option("file", file, "Script")->required();
  check->callback([&] {
    action = [&] {
      Deduction d = load_script(file);
      if (d.steps.empty()) throw InputError(file + ": no step lines");
      Verdict v = verify_deduction(d);
      if (!v) {
        out << "invalid: step " << v.step << ": " << v.reason << "\n";
        return kExitNo;
      }
      out << "ok (" << d.steps.size() << (d.steps.size() == 1 ? " step)" : " steps)") << "\n";
      return kExitOk;
    };
  });

  auto* dis = app.add_subcommand("discharge", "Discharge a hypothesis");
  dis->add_option("file", file, "Script")->required();
  dis->add_option("--hyp", index, "1-based index of the hypothesis to discharge")->required();
  dis->add_option("-o", output, "Output script (default: standard output)");
  dis->callback([&] {
    action = [&] {
      Deduction d = load_script(file);
      if (index == 0 || index > d.hypotheses.size())
        throw InputError("--hyp " + std::to_string(index) + " is out of range");
      d = move_hypothesis_to_end(d, index);
      emit(print_script(discharge(d, d.hypotheses.back())), output, out);
      return kExitOk;
    };
  });

  auto* und = app.add_subcommand("undischarge", "Turn an implication antecedent into a hypothesis");
  und->add_option("file", file, "Script")->required();
  und->add_option("--ante", formula, "Antecedent")->required();
  und->add_option("-o", output, "Output script (default: standard output)");
  und->callback([&] {
    action = [&] {
      Deduction d = load_script(file);
      Formula a = load_formula(formula, d.sig);
      emit(print_script(undischarge(d, a)), output, out);
      return kExitOk;
    };
  });

  auto* cat = app.add_subcommand("concat", "Cut a lemma into a deduction that assumes it");
  cat->add_option("a", file, "Deduction of the lemma")->required();
  cat->add_option("b", file_b, "Deduction using the lemma as its last hypothesis")->required();
  cat->add_option("-o", output, "Output script (default: standard output)");
  cat->callback([&] {
    action = [&] {
      emit(print_script(concat(load_script(file), load_script(file_b))), output, out);
      return kExitOk;
    };
  });

  auto* wk = app.add_subcommand("weaken", "Add an unused hypothesis");
  wk->add_option("file", file, "Script")->required();
  wk->add_option("--add", formula, "Hypothesis to add")->required();
  wk->add_option("-o", output, "Output script (default: standard output)");
  wk->callback([&] {
    action = [&] {
      Deduction d = load_script(file);
      Formula a = load_formula(formula, d.sig);
      emit(print_script(weaken(d, a)), output, out);
      return kExitOk;
    };
  });

  auto* enc = app.add_subcommand("encode", "Print the Godel number of a deduction");
  enc->add_option("file", file, "Script")->required();
  enc->callback([&] {
    action = [&] {
      Deduction d = load_script(file);
      out << encode_deduction(d, SymbolCode(d.sig)).to_string() << "\n";
      return kExitOk;
    };
  });

  auto* dec = app.add_subcommand("decode", "Decode a Godel number");
  dec->add_option("--number", number, "Decimal, or seq:e1,e2,...")->required();
  dec->add_option("--sig", sig_file, "Signature file")->required();
  dec->add_flag("--deduction", as_deduction, "Decode as a sequence of formulas");
  dec->callback([&] {
    action = [&] {
      Signature sig = load_signature(sig_file);
      GodelNumber n = GodelNumber::parse(number);
      try {
        if (as_deduction) {
          for (const auto& f : decode_sequence(n, sig)) out << print_formula(f) << "\n";
        } else {
          out << print_formula(decode_formula(n, sig)) << "\n";
        }
      } catch (const DecodeError& e) {
        err << "dedkit: " << e.what() << "\n";
        return kExitNo;
      }
      return kExitOk;
    };
  });

  auto* pc = app.add_subcommand("proofcheck", "Decide the proof relation");
  pc->add_option("--x", x, "Witness")->required();
  pc->add_option("--y", y, "Formula code")->required();
  pc->add_option("--theory", theory_file, "Theory script")->required();
  pc->callback([&] {
    action = [&] {
      Deduction t = load_script(theory_file);
      bool ok = proof_check(GodelNumber::parse(x), GodelNumber::parse(y), t.hypotheses, t.sig);
      out << (ok ? "true" : "false") << "\n";
      return ok ? kExitOk : kExitNo;
    };
  });

  auto* se = app.add_subcommand("search", "Bounded proof search");
  se->add_option("--goal", formula, "Goal formula")->required();
  se->add_option("--theory", theory_file, "Theory script")->required();
  se->add_option("--max-len", max_len, "Largest proof size")->required();
  se->add_option("--pool-depth", pool_depth, "Closure depth of the cut-formula pool")
      ->required();
  se->callback([&] {
    action = [&] {
      Deduction t = load_script(theory_file);
      Formula goal = load_formula(formula, t.sig);
      auto found = search_deduction(goal, t.hypotheses, t.sig, {max_len, pool_depth});
      if (!found) {
        out << "none\n";
        return kExitNo;
      }
      out << print_script(found->deduction) << "# godel " << found->number.to_string() << "\n";
      return kExitOk;
    };
  });

  auto* td = app.add_subcommand("transport-discharge",
                                "Map a witness of (T, a) |- B to one of T |- a -> B");
  td->add_option("--x", x, "Witness")->required();
  td->add_option("--hyp", formula, "Closed formula a")->required();
  td->add_option("--theory", theory_file, "Theory script T")->required();
  td->callback([&] {
    action = [&] {
      Deduction t = load_script(theory_file);
      Formula a = load_formula(formula, t.sig);
      out << transport_discharge(GodelNumber::parse(x), a, t.hypotheses, t.sig).to_string()
          << "\n";
      return kExitOk;
    };
  });

  auto* tw = app.add_subcommand("transport-weaken",
                                "Map a witness of T |- B to one of T |- a -> B");
  tw->add_option("--u", x, "Witness")->required();
  tw->add_option("--add", formula, "Formula a")->required();
  tw->add_option("--theory", theory_file, "Theory script T")->required();
  tw->callback([&] {
    action = [&] {
      Deduction t = load_script(theory_file);
      Formula a = load_formula(formula, t.sig);
      out << transport_weaken(GodelNumber::parse(x), a, t.hypotheses, t.sig).to_string()
          << "\n";
      return kExitOk;
    };
  });

  auto* en = app.add_subcommand("entail", "Search finite models for a counterexample");
  en->add_option("--theory", theory_file, "Theory script")->required();
  en->add_option("--goal", formula, "Closed goal formula")->required();
  en->add_option("--max-size", max_size, "Largest domain size")->required();
  en->callback([&] {
    action = [&] {
      Deduction t = load_script(theory_file);
      Formula goal = load_formula(formula, t.sig);
      EntailmentVerdict v = check_entailment(t.hypotheses, goal, t.sig, max_size);
      if (v.holds()) {
        out << "no counterexample up to size " << max_size << "\n";
        return kExitOk;
      }
      out << "counterexample\n" << v.counterexample->to_string();
      return kExitNo;
    };
  });

  auto* si = app.add_subcommand("selfimp", "Print the five-line deduction of F -> F");
  si->add_option("--formula", formula, "Formula F")->required();
  si->add_option("--sig", sig_file, "Signature file")->required();
  si->callback([&] {
    action = [&] {
      Signature sig = load_signature(sig_file);
      Formula f = load_formula(formula, sig);
      out << print_script(prove_self_implication(f, sig));
      return kExitOk;
    };
  });

  auto* co = app.add_subcommand("codes", "Print the symbol codes of a signature");
  co->add_option("--sig", sig_file, "Signature file")->required();
  co->callback([&] {
    action = [&] {
      out << SymbolCode(load_signature(sig_file)).dump();
      return kExitOk;
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "dedkit: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "dedkit: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace dedkit
