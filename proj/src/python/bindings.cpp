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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dedkit/cli.hpp"
#include "dedkit/dedthm.hpp"
#include "dedkit/error.hpp"
#include "dedkit/godel.hpp"
#include "dedkit/models.hpp"
#include "dedkit/script.hpp"

namespace py = pybind11;
using namespace dedkit;

namespace {

GodelNumber number(const std::string& text) { return GodelNumber::parse(text); }

}  // namespace

PYBIND11_MODULE(_dedkit, m) {
  m.doc() = "First-order deduction kernel, deduction theorem and Godel coding";

  static py::exception<Error> error(m, "DedkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Signature>(m, "Signature")
      .def(py::init(&parse_signature), py::arg("text"))
      .def_property_readonly("variables", &Signature::variables)
      .def_property_readonly("predicates",
                             [](const Signature& s) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& p : s.predicates()) out.emplace_back(p.name, p.arity);
                               return out;
                             })
      .def_property_readonly("functions",
                             [](const Signature& s) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& f : s.functions()) out.emplace_back(f.name, f.arity);
                               return out;
                             })
      .def("__str__", &Signature::to_string)
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; });

  py::class_<Formula>(m, "Formula")
      .def("__str__", &print_formula)
      .def("__repr__", [](const Formula& f) { return "Formula('" + print_formula(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash)
      .def_property_readonly("free_vars", &free_vars)
      .def_property_readonly("is_closed", &is_closed)
      .def_property_readonly("depth", &Formula::depth);

  m.def("parse_formula", &parse_formula, py::arg("text"), py::arg("sig"));
  m.def("implies", &Formula::implies, py::arg("lhs"), py::arg("rhs"));

  py::class_<Deduction>(m, "Deduction")
      .def_readonly("signature", &Deduction::sig)
      .def_readonly("hypotheses", &Deduction::hypotheses)
      .def_property_readonly("formulas", &Deduction::formulas)
      .def_property_readonly("conclusion", &Deduction::conclusion)
      .def("__len__", [](const Deduction& d) { return d.steps.size(); })
      .def("__str__", &print_script);

  m.def("parse_script", &parse_script, py::arg("text"));
  m.def("verify", [](const Deduction& d) {
    Verdict v = verify_deduction(d);
    return py::make_tuple(v.ok, v.step, v.reason);
  }, py::arg("deduction"), "(ok, first bad step or 0, reason)");

  m.def("self_implication", &prove_self_implication, py::arg("a"), py::arg("sig"));
  m.def("discharge", &discharge, py::arg("deduction"), py::arg("a"));
  m.def("undischarge", &undischarge, py::arg("deduction"), py::arg("a"));
  m.def("concat", &concat, py::arg("lemma"), py::arg("user"));
  m.def("weaken", &weaken, py::arg("deduction"), py::arg("a"));
  m.def("move_hypothesis_to_end", &move_hypothesis_to_end, py::arg("deduction"),
        py::arg("index"));

  m.def("encode_formula", [](const Formula& f, const Signature& sig) {
    return encode_formula(f, SymbolCode(sig)).to_string();
  }, py::arg("formula"), py::arg("sig"));
  m.def("decode_formula", [](const std::string& n, const Signature& sig) {
    return decode_formula(number(n), sig);
  }, py::arg("number"), py::arg("sig"));
  m.def("encode_deduction", [](const Deduction& d) {
    return encode_deduction(d, SymbolCode(d.sig)).to_string();
  }, py::arg("deduction"));
  m.def("decode_sequence", [](const std::string& n, const Signature& sig) {
    return decode_sequence(number(n), sig);
  }, py::arg("number"), py::arg("sig"));
  m.def("proof_check", [](const std::string& x, const std::string& y,
                          const std::vector<Formula>& theory, const Signature& sig) {
    return proof_check(number(x), number(y), theory, sig);
  }, py::arg("x"), py::arg("y"), py::arg("theory"), py::arg("sig"));
  m.def("search", [](const Formula& goal, const std::vector<Formula>& theory,
                     const Signature& sig, std::size_t max_len, std::size_t pool_depth)
            -> std::optional<std::pair<Deduction, std::string>> {
    auto r = search_deduction(goal, theory, sig, {max_len, pool_depth});
    if (!r) return std::nullopt;
    return std::make_pair(r->deduction, r->number.to_string());
  }, py::arg("goal"), py::arg("theory"), py::arg("sig"), py::arg("max_len"),
        py::arg("pool_depth"));
  m.def("transport_discharge", [](const std::string& x, const Formula& a,
                                  const std::vector<Formula>& theory, const Signature& sig) {
    return transport_discharge(number(x), a, theory, sig).to_string();
  }, py::arg("x"), py::arg("a"), py::arg("theory"), py::arg("sig"));
  m.def("transport_weaken", [](const std::string& u, const Formula& a,
                               const std::vector<Formula>& theory, const Signature& sig) {
    return transport_weaken(number(u), a, theory, sig).to_string();
  }, py::arg("u"), py::arg("a"), py::arg("theory"), py::arg("sig"));

  m.def("check_entailment", [](const std::vector<Formula>& theory, const Formula& goal,
                               const Signature& sig,
                               std::size_t max_size) -> std::optional<std::string> {
    EntailmentVerdict v = check_entailment(theory, goal, sig, max_size);
    if (v.holds()) return std::nullopt;
    return v.counterexample->to_string();
  }, py::arg("theory"), py::arg("goal"), py::arg("sig"), py::arg("max_size"),
        "None when no counterexample exists up to max_size, else the first one.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout text, stderr text)");
}
