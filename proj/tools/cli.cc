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

#include "cli.h"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <sstream>

#include "heyting/algebra.h"
#include "heyting/algebra_io.h"
#include "heyting/catalog.h"
#include "heyting/classifiers.h"
#include "heyting/decide.h"
#include "heyting/duality.h"
#include "heyting/errors.h"
#include "heyting/families.h"
#include "heyting/formula.h"
#include "heyting/poset_io.h"
#include "heyting/semantics.h"
#include "heyting/upsets.h"

namespace heyting::cli {
namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> posets;
  std::vector<std::string> algebras;
  std::vector<std::string> axioms;
  std::string formula;
  std::string target;
  std::string levels;
  std::string word;  // positional: property, kind, name or case
  std::string name;  // second positional of gen
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  double p = 0.3;
  bool json = false;
  bool dot = false;
  bool print = false;
};

Limits limits_of(const Options& o) {
  Limits l;
  if (o.budget) {
    l.max_search_nodes = *o.budget;
    l.max_assignments = *o.budget;
  }
  return l;
}

// "named:P4" selects a registry poset; anything else is a JSON file.
Poset poset_arg(const std::string& s) {
  if (s.rfind("named:", 0) == 0) return named(s.substr(6));
  return load_poset(s);
}

const Poset& only_poset(const std::vector<Poset>& v, const char* what) {
  if (v.size() != 1) throw InputError(std::string(what) + " needs exactly one --poset");
  return v.front();
}

std::string set_str(const Poset& x, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    first = false;
    out += x.label(i);
  });
  return out + "}";
}

std::string element_str(const HeytingAlgebra& a, std::size_t e) {
  if (a.source()) return set_str(*a.source(), a.upset(e));
  return "e" + std::to_string(e);
}

json element_json(const HeytingAlgebra& a, std::size_t e) {
  if (!a.source()) return e;
  json out = json::array();
  a.upset(e).for_each([&](std::size_t i) { out.push_back(a.source()->label(i)); });
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Loaded inputs: either posets or algebras, never both.
struct Inputs {
  std::vector<Poset> posets;
  std::vector<HeytingAlgebra> algebras;
};

Inputs load_inputs(const Options& o, const Limits& limits) {
  if (!o.posets.empty() && !o.algebras.empty()) {
    throw InputError("give --poset or --algebra, not both");
  }
  Inputs in;
  for (const auto& p : o.posets) in.posets.push_back(poset_arg(p));
  for (const auto& a : o.algebras) in.algebras.push_back(load_algebra(a, limits));
  return in;
}

// The single algebra named by --algebra, or Up of the single --poset.
HeytingAlgebra one_algebra(const Inputs& in, const Limits& limits) {
  if (in.algebras.size() + in.posets.size() != 1) {
    throw InputError("expected exactly one --poset or --algebra");
  }
  if (!in.algebras.empty()) return in.algebras.front();
  return HeytingAlgebra::from_upsets(in.posets.front(), limits);
}

std::vector<HeytingAlgebra> all_algebras(const Inputs& in, const Limits& limits) {
  std::vector<HeytingAlgebra> out = in.algebras;
  for (const auto& p : in.posets) out.push_back(HeytingAlgebra::from_upsets(p, limits));
  return out;
}

int emit_poset(const Poset& x, const Options& o, std::ostream& out) {
  if (o.dot) {
    out << to_dot(x);
  } else {
    out << poset_to_json(x).dump() << "\n";
  }
  return kYes;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.word == "named") {
    if (o.name.empty()) throw InputError("gen named needs a name");
    return emit_poset(named(o.name), o, out);
  }
  if (o.word == "diamond") {
    DiamondSpec spec;
    std::stringstream ss(o.levels);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        spec.levels.push_back(std::stoul(part));
      } catch (const std::exception&) {
        throw BadSpec("level '" + part + "' is not a number");
      }
    }
    return emit_poset(diamond_sequence(spec), o, out);
  }
  if (o.word == "random") {
    if (!o.n) throw InputError("gen random needs --n");
    return emit_poset(random_poset(*o.n, o.p, o.seed), o, out);
  }
  throw InputError("gen expects named, diamond or random");
}

int cmd_show(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  json j;
  if (!in.posets.empty()) {
    const Poset& x = only_poset(in.posets, "show");
    j["kind"] = "poset";
    j["size"] = x.size();
    j["rooted"] = x.is_rooted();
    if (!x.empty()) {
      j["depth"] = x.depth();
      j["width"] = x.width();
    }
    j["upsets"] = count_upsets(x, limits.max_upsets);
  } else {
    HeytingAlgebra a = one_algebra(in, limits);
    Poset s = prime_spectrum(a);
    j["kind"] = "algebra";
    j["size"] = a.size();
    j["si"] = a.is_si();
    j["spectrum"] = poset_to_json(s);
    if (!s.empty()) {
      j["depth"] = s.depth();
      j["width"] = s.width();
    }
  }
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
  }
  return kYes;
}

int report_out(const ClassifierReport& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << r.to_json().dump() << "\n";
  } else {
    out << r.property << ": " << yes_no(r.verdict) << "\n";
    for (const auto& route : r.routes) {
      out << "  " << route.route << ": " << yes_no(route.verdict);
      if (!route.witness.is_null()) out << " " << route.witness.dump();
      out << "\n";
    }
  }
  return r.verdict ? kYes : kNo;
}

int cmd_check(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  const std::string& prop = o.word;
  const bool poset_input = !in.posets.empty();
  if (prop == "three-point") {
    return report_out(three_point_rule_principal(only_poset(in.posets, "check three-point")), o,
                      out);
  }
  if (prop == "root-system") {
    if (poset_input) return report_out(root_system(only_poset(in.posets, "check")), o, out);
    return report_out(root_system(prime_spectrum(one_algebra(in, limits))), o, out);
  }
  if (prop == "diamond") {
    if (poset_input) return report_out(is_diamond_system(only_poset(in.posets, "check")), o, out);
    return report_out(is_diamond_algebra(one_algebra(in, limits), limits), o, out);
  }
  if (prop == "cascade") {
    if (poset_input) return report_out(is_cascade(only_poset(in.posets, "check"), limits), o, out);
    return report_out(is_cascade(one_algebra(in, limits), limits), o, out);
  }
  if (prop == "width-cascade") {
    if (!o.n) throw InputError("check width-cascade needs --n");
    return report_out(is_cascade_width(one_algebra(in, limits), *o.n, limits), o, out);
  }
  throw InputError("unknown property '" + prop +
                   "' (diamond, cascade, root-system, three-point, width-cascade)");
}

template <class Value, class Show, class ToJson>
int validity_out(const Validity<Value>& v, const std::string& formula, const Options& o,
                 std::ostream& out, Show show, ToJson to_json) {
  if (o.json) {
    json evidence = json::array();
    json item = {{"formula", formula}, {"assignments", v.assignments}};
    if (v.refutation) {
      json assignment = json::array();
      for (const auto& [name, value] : v.refutation->assignment) {
        assignment.push_back({name, to_json(value)});
      }
      item["refutation"] = std::move(assignment);
      item["value"] = to_json(v.refutation->lhs);
    }
    evidence.push_back(std::move(item));
    out << json{{"answer", yes_no(v.valid)}, {"evidence", std::move(evidence)}}.dump() << "\n";
  } else if (v.valid) {
    out << "valid (" << v.assignments << " assignments)\n";
  } else {
    out << "refuted:";
    for (const auto& [name, value] : v.refutation->assignment) {
      out << " " << name << "=" << show(value);
    }
    out << " gives " << show(v.refutation->lhs) << "\n";
  }
  return v.valid ? kYes : kNo;
}

int cmd_valid(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  if (o.formula.empty()) throw InputError("valid needs --formula");
  Formula f = parse_formula(o.formula);
  const std::string text = print(f);
  if (!in.posets.empty()) {
    const Poset& x = only_poset(in.posets, "valid");
    return validity_out(
        valid_on_poset(x, f, limits), text, o, out,
        [&](const ElementSet& s) { return set_str(x, s); },
        [&](const ElementSet& s) {
          json arr = json::array();
          s.for_each([&](std::size_t i) { arr.push_back(x.label(i)); });
          return arr;
        });
  }
  HeytingAlgebra a = one_algebra(in, limits);
  return validity_out(
      valid_in(a, f, limits), text, o, out, [&](std::size_t e) { return element_str(a, e); },
      [&](std::size_t e) { return element_json(a, e); });
}

int cmd_jankov(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  if (o.target.empty()) throw InputError("jankov needs --target");
  Poset target = poset_arg(o.target);
  if (o.print) {
    HeytingAlgebra a = HeytingAlgebra::from_upsets(target, limits);
    out << print(jankov_syntactic(a, limits)) << "\n";
    return kYes;
  }
  Poset host = in.posets.empty() ? prime_spectrum(one_algebra(in, limits))
                                 : only_poset(in.posets, "jankov");
  JankovVerdict v = jankov_valid(host, target, limits);
  if (o.json) {
    json item = {{"target", o.target}, {"valid", v.valid}, {"nodes", v.nodes}};
    if (v.witness) item["witness"] = image_witness_json(*v.witness, host, target);
    out << json{{"answer", yes_no(v.valid)}, {"evidence", json::array({item})}}.dump() << "\n";
  } else if (v.valid) {
    out << "valid: target is not a p-morphic image of an upset\n";
  } else {
    out << "refuted: " << image_witness_json(*v.witness, host, target).dump() << "\n";
  }
  return v.valid ? kYes : kNo;
}

int verdict_out(const Verdict& v, const Options& o, std::ostream& out) {
  json j = v.to_json();
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    out << j["answer"].get<std::string>() << "\n";
    for (const auto& e : j["evidence"]) out << "  " << e.dump() << "\n";
  }
  return v.yes ? kYes : kNo;
}

int cmd_decide(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  if (o.word == "equations") {
    std::vector<Equation> sigma;
    for (const auto& a : o.axioms) sigma.push_back(parse_equation(a));
    return verdict_out(decide_equations(sigma, limits), o, out);
  }
  std::vector<HeytingAlgebra> k = all_algebras(in, limits);
  if (o.word == "generated") return verdict_out(decide_generated(k, limits), o, out);
  if (o.word == "representable") {
    return verdict_out(decide_representable_generated(k, limits), o, out);
  }
  if (o.word == "primitive") return verdict_out(decide_primitive_generated(k, limits), o, out);
  throw InputError("decide expects equations, generated, representable or primitive");
}

int cmd_decompose(const Options& o, const Inputs& in, std::ostream& out) {
  const Poset& x = only_poset(in.posets, "decompose");
  try {
    json j = decompose_shapes(x).to_json(x);
    out << (o.json ? j.dump() : j.dump(2)) << "\n";
    return kYes;
  } catch (const NotDecomposable& e) {
    if (o.json) {
      out << json{{"decomposable", false}, {"level", e.level()}, {"reason", e.what()}}.dump()
          << "\n";
    } else {
      out << "no: " << e.what() << "\n";
    }
    return kNo;
  }
}

int cmd_dual(const Options& o, const Inputs& in, const Limits& limits, std::ostream& out) {
  if (!in.algebras.empty()) {
    if (in.algebras.size() != 1) throw InputError("dual needs exactly one --algebra");
    return emit_poset(prime_spectrum(in.algebras.front()), o, out);
  }
  HeytingAlgebra a = HeytingAlgebra::from_upsets(only_poset(in.posets, "dual"), limits);
  out << algebra_to_json(a).dump() << "\n";
  return kYes;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  Case c = case_from_string(o.word);
  TruncationWitness w = truncated_counterexample(c, o.n.value_or(4));
  if (o.dot) {
    out << to_dot(w.poset);
    return kYes;
  }
  json map = json::array();
  for (std::size_t i = 0; i < w.domain.size(); ++i) {
    map.push_back({i / case_poset(c).size(), w.domain.label(i), w.poset.label(w.morphism(i))});
  }
  json j = {{"case", to_string(c)},
            {"poset", poset_to_json(w.poset)},
            {"copies", w.copies},
            {"morphism", std::move(map)},
            {"verified", verify_truncation(w)}};
  out << j.dump(o.json ? -1 : 2) << "\n";
  return kYes;
}

void add_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--poset", o.posets, "Poset JSON file, or named:<NAME>");
  sub->add_option("--algebra", o.algebras, "Algebra JSON file");
  sub->add_option("--budget", o.budget, "Cap on search nodes and assignments");
  sub->add_flag("--json", o.json, "Machine-readable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite Heyting algebras, Esakia duality and Jankov formulas", "heyting"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a poset");
  gen->add_option("kind", o.word, "named | diamond | random")->required();
  gen->add_option("name", o.name, "Registry name for 'named'");
  gen->add_option("--levels", o.levels, "Comma-separated levels for 'diamond', top first");
  gen->add_option("--n", o.n, "Size for 'random'");
  gen->add_option("--p", o.p, "Edge probability for 'random'");
  gen->add_option("--seed", o.seed, "Seed for 'random'");
  gen->add_flag("--json", o.json, "Compact JSON");
  gen->add_flag("--dot", o.dot, "Graphviz output");

  auto* show = app.add_subcommand("show", "Size, depth, width and spectrum");
  add_inputs(show, o);

  auto* check = app.add_subcommand("check", "Run a classifier");
  check->add_option("property", o.word,
                    "diamond | cascade | root-system | three-point | width-cascade")
      ->required();
  check->add_option("--n", o.n, "Width bound for width-cascade");
  add_inputs(check, o);

  auto* valid = app.add_subcommand("valid", "Validity of a formula");
  valid->add_option("--formula", o.formula, "Formula text")->required();
  add_inputs(valid, o);

  auto* jankov = app.add_subcommand("jankov", "Jankov formula of --target in --poset/--algebra");
  jankov->add_option("--target", o.target, "Rooted poset file or named:<NAME>")->required();
  jankov->add_flag("--print", o.print, "Print the diagram formula of Up(target)");
  add_inputs(jankov, o);

  auto* decide = app.add_subcommand("decide", "Decision procedures");
  decide->add_option("kind", o.word, "equations | generated | representable | primitive")
      ->required();
  decide->add_option("--axioms", o.axioms, "Equation, repeatable");
  add_inputs(decide, o);

  auto* decompose = app.add_subcommand("decompose", "Block decomposition of a rooted poset");
  add_inputs(decompose, o);

  auto* dual = app.add_subcommand("dual", "Spectrum of an algebra or Up of a poset");
  dual->add_flag("--dot", o.dot, "Graphviz output for spectra");
  add_inputs(dual, o);

  auto* cex = app.add_subcommand("counterexample", "Truncated counterexample poset");
  cex->add_option("case", o.word, "P1 | P2 | P3 | P4")->required();
  cex->add_option("--n", o.n, "Top-row size, at least 4");
  cex->add_flag("--json", o.json, "Compact JSON");
  cex->add_flag("--dot", o.dot, "Graphviz output");

  std::vector<const char*> argv{"heyting"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  std::ostringstream buf;
  int code = kInternal;
  try {
    const Limits limits = limits_of(o);
    if (*gen) {
      code = cmd_gen(o, buf);
    } else if (*cex) {
      code = cmd_counterexample(o, buf);
    } else {
      Inputs in = load_inputs(o, limits);
      if (*show) code = cmd_show(o, in, limits, buf);
      if (*check) code = cmd_check(o, in, limits, buf);
      if (*valid) code = cmd_valid(o, in, limits, buf);
      if (*jankov) code = cmd_jankov(o, in, limits, buf);
      if (*decide) code = cmd_decide(o, in, limits, buf);
      if (*decompose) code = cmd_decompose(o, in, buf);
      if (*dual) code = cmd_dual(o, in, limits, buf);
    }
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  out << buf.str();
  return code;
}

}  // namespace heyting::cli
