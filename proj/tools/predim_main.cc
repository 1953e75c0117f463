// Copyright 2026 The Authors.
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

// Command-line front end for the predimension/closure library.
//
// Exit codes: 0 success, 1 negative verdict or failed precondition (the
// witness is printed), 2 usage or parse error, 3 guardrail exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "predim/closure.h"
#include "predim/errors.h"
#include "predim/exterior.h"
#include "predim/fp_linalg.h"
#include "predim/free_case.h"
#include "predim/literals.h"
#include "predim/propcheck.h"
#include "predim/structure.h"

namespace {

using namespace predim;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuardrail = 3;

struct Invocation {
  std::string structure_file;
  std::string structure_inline;
  std::optional<std::uint32_t> k_override;
  std::optional<std::uint64_t> guardrail_override;
  bool allow_long_runs = false;
  std::string output = "text";
  std::size_t workers = 1;

  std::string subspace;
  std::string base;
  std::string u, v;
  std::string vectors_a, vectors_b;
  std::string vectors;
  std::string bivector;
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::size_t count = 2;
  std::size_t m = 2;
  std::string lemma = "all";
  std::uint64_t seed = 42;
  std::size_t samples = 25;
  bool no_timing = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t DefaultGuardrail() {
  if (const char* env = std::getenv("PREDIM_GUARDRAIL")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("PREDIM_GUARDRAIL is not a number");
    }
  }
  return kDefaultGuardrail;
}

std::uint64_t Guardrail(const Invocation& inv) {
  if (inv.guardrail_override) {
    if (!inv.allow_long_runs) {
      throw UsageError("--guardrail needs --allow-long-runs");
    }
    return *inv.guardrail_override;
  }
  return DefaultGuardrail();
}

bool Machine(const Invocation& inv) { return inv.output == "machine"; }

BilinearStructure LoadStructure(const Invocation& inv) {
  std::string text;
  if (!inv.structure_file.empty()) {
    std::ifstream in(inv.structure_file, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + inv.structure_file + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (!inv.structure_inline.empty()) {
    text = inv.structure_inline;
    for (char& c : text) {
      if (c == ';') c = '\n';
    }
  } else {
    throw UsageError("a structure is required (--structure or --inline)");
  }
  BilinearStructure s = ParseStructure(text);
  if (inv.k_override) s = s.WithK(*inv.k_override);
  return s;
}

std::string DeltaText(const ScaledDelta& d) {
  return std::to_string(d.value) + " (delta_k = " + d.Rational() + ")";
}

void PrintMachine(const std::vector<std::pair<std::string, std::string>>&
                      fields) {
  std::cout << "format 1\n";
  for (const auto& [key, value] : fields) {
    std::cout << key << " " << value << "\n";
  }
}

int RunDelta(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const Subspace h = ParseSubspace(inv.subspace, s.p(), s.n());
  const ScaledDelta d = Delta(s, h);
  const Subspace rel = NOf(s, h);
  if (Machine(inv)) {
    PrintMachine({{"subspace", FormatSubspace(h)},
                  {"dim", std::to_string(h.dim())},
                  {"relations_dim", std::to_string(rel.dim())},
                  {"delta_scaled", std::to_string(d.value)},
                  {"delta_rational", d.Rational()}});
  } else {
    std::cout << "H: " << FormatSubspace(h) << " (dim " << h.dim()
              << ", dim N(H) " << rel.dim() << ")\n"
              << "delta: " << DeltaText(d) << "\n";
  }
  return kExitOk;
}

int RunNOf(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const Subspace rel = NOf(s, ParseSubspace(inv.subspace, s.p(), s.n()));
  if (Machine(inv)) {
    PrintMachine({{"nof", FormatSubspace(rel)},
                  {"nof_dim", std::to_string(rel.dim())}});
  } else {
    std::cout << "N(H): " << FormatSubspace(rel) << " (dim " << rel.dim()
              << ")\n";
  }
  return kExitOk;
}

int RunBeta(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const Bivector b = BetaMap(s, ParseVector(inv.u, s.p(), s.n()),
                             ParseVector(inv.v, s.p(), s.n()));
  if (Machine(inv)) {
    PrintMachine({{"beta", FormatVector(b.coords())},
                  {"zero", b.IsZero() ? "yes" : "no"}});
  } else {
    std::cout << "beta(u, v): " << FormatVector(b.coords()) << "\n";
  }
  return kExitOk;
}

int RunFewRelations(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const FewRelationsVerdict v = CheckFewRelations(s, Guardrail(inv));
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"holds", v.holds ? "yes" : "no"}, {"k", std::to_string(s.k())}};
    if (v.witness) {
      fields.emplace_back("witness", FormatSubspace(*v.witness));
      fields.emplace_back("witness_dim", std::to_string(v.witness->dim()));
      fields.emplace_back("witness_relations_dim",
                          std::to_string(v.witness_relations_dim));
    }
    PrintMachine(fields);
  } else if (v.holds) {
    std::cout << "few relations: holds (k = " << s.k() << ")\n";
  } else {
    std::cout << "few relations: fails (k = " << s.k() << ")\n"
              << "witness: " << FormatSubspace(*v.witness) << " (dim "
              << v.witness->dim() << ", dim N = " << v.witness_relations_dim
              << " > " << s.k() * v.witness->dim() << ")\n";
  }
  return v.holds ? kExitOk : kExitNegative;
}

int RunSelfsufficient(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const Subspace h = ParseSubspace(inv.subspace, s.p(), s.n());
  const SelfsufficiencyVerdict v = engine.CheckSelfsufficient(h);
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"selfsufficient", v.selfsufficient ? "yes" : "no"},
        {"delta_scaled", std::to_string(engine.Delta(h).value)}};
    if (v.witness) {
      fields.emplace_back("witness", FormatSubspace(*v.witness));
      fields.emplace_back("witness_delta_scaled",
                          std::to_string(engine.Delta(*v.witness).value));
    }
    PrintMachine(fields);
  } else {
    std::cout << "selfsufficient: " << (v.selfsufficient ? "yes" : "no")
              << "\n";
    if (v.witness) {
      std::cout << "witness: " << FormatSubspace(*v.witness) << " with delta "
                << DeltaText(engine.Delta(*v.witness)) << " < "
                << DeltaText(engine.Delta(h)) << "\n";
    }
  }
  return v.selfsufficient ? kExitOk : kExitNegative;
}

int RunCss(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const Subspace css =
      engine.Css(ParseSubspace(inv.subspace, s.p(), s.n()));
  const ScaledDelta d = engine.Delta(css);
  if (Machine(inv)) {
    PrintMachine({{"css", FormatSubspace(css)},
                  {"css_dim", std::to_string(css.dim())},
                  {"delta_scaled", std::to_string(d.value)},
                  {"delta_rational", d.Rational()}});
  } else {
    std::cout << "css: " << FormatSubspace(css) << " (dim " << css.dim()
              << ")\n"
              << "delta: " << DeltaText(d) << "\n";
  }
  return kExitOk;
}

int RunDk(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const ScaledDelta d =
      engine.Dk(ParseVectorList(inv.vectors, s.p(), s.n()));
  if (Machine(inv)) {
    PrintMachine({{"dk_scaled", std::to_string(d.value)},
                  {"dk_rational", d.Rational()}});
  } else {
    std::cout << "d_k: " << DeltaText(d) << "\n";
  }
  return kExitOk;
}

int RunInClosure(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const auto a = ParseVectorList(inv.vectors_a, s.p(), s.n());
  const auto b = ParseVectorList(inv.vectors_b, s.p(), s.n());
  std::vector<FpVector> ab = b;
  ab.insert(ab.end(), a.begin(), a.end());
  const bool in = engine.InClosure(a, b);
  if (Machine(inv)) {
    PrintMachine({{"in_closure", in ? "yes" : "no"},
                  {"dk_b_scaled", std::to_string(engine.Dk(b).value)},
                  {"dk_ab_scaled", std::to_string(engine.Dk(ab).value)}});
  } else {
    std::cout << "in closure: " << (in ? "yes" : "no") << "\n"
              << "d_k(B): " << DeltaText(engine.Dk(b)) << "\n"
              << "d_k(A u B): " << DeltaText(engine.Dk(ab)) << "\n";
  }
  return kExitOk;
}

int RunClosure(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const ClosureSet c =
      engine.ClosureOf(ParseSubspace(inv.subspace, s.p(), s.n()));
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"size", std::to_string(c.members.size())},
        {"subspace", c.subspace ? "yes" : "no"}};
    if (c.subspace) {
      fields.emplace_back("closure", FormatSubspace(*c.subspace));
      fields.emplace_back("closure_dim", std::to_string(c.subspace->dim()));
    }
    PrintMachine(fields);
  } else {
    if (c.subspace) {
      std::cout << "closure: " << FormatSubspace(*c.subspace) << " (dim "
                << c.subspace->dim() << ", " << c.members.size()
                << " vectors)\n";
    } else {
      std::cout << "closure: not a subspace\n";
    }
    std::cout << "members:";
    for (const FpVector& v : c.members) std::cout << " " << FormatVector(v);
    std::cout << "\n";
  }
  return kExitOk;
}

int RunDeltaRel(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const RelativeDelta r =
      engine.DeltaRel(ParseSubspace(inv.subspace, s.p(), s.n()),
                      ParseSubspace(inv.base, s.p(), s.n()));
  if (Machine(inv)) {
    PrintMachine({{"delta_rel_scaled", std::to_string(r.minimum.value)},
                  {"delta_rel_rational", r.minimum.Rational()},
                  {"closed_form_scaled", std::to_string(r.closed_form.value)},
                  {"attained_by", FormatSubspace(r.attained_by)}});
  } else {
    std::cout << "delta_rel: " << DeltaText(r.minimum) << "\n"
              << "closed form: " << DeltaText(r.closed_form) << "\n"
              << "attained by K1 = " << FormatSubspace(r.attained_by) << "\n";
  }
  return kExitOk;
}

int RunMinimalExtensions(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const auto exts =
      engine.MinimalExtensions(ParseSubspace(inv.subspace, s.p(), s.n()));
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"count", std::to_string(exts.size())}};
    for (const Subspace& e : exts) {
      fields.emplace_back("extension", FormatSubspace(e));
    }
    PrintMachine(fields);
  } else {
    std::cout << exts.size() << " minimal extension(s)\n";
    for (const Subspace& e : exts) {
      std::cout << "  " << FormatSubspace(e) << " (dim " << e.dim() << ")\n";
    }
  }
  return kExitOk;
}

int RunChain(const Invocation& inv) {
  const BilinearStructure s = LoadStructure(inv);
  const ClosureEngine engine(s, Guardrail(inv));
  const ClosureReport report =
      engine.Chain(ParseSubspace(inv.subspace, s.p(), s.n()));
  std::cout << (Machine(inv) ? RenderMachine(report) : RenderText(report));
  return kExitOk;
}

int RunBivectorRank(const Invocation& inv) {
  const Bivector w = ParseBivector(inv.bivector, inv.p, inv.n);
  const std::size_t rank = BivectorRank(w);
  if (Machine(inv)) {
    PrintMachine({{"rank", std::to_string(rank)}});
  } else {
    std::cout << rank << "\n";
  }
  return kExitOk;
}

int RunFreeOrbits(const Invocation& inv) {
  const auto witnesses =
      OrbitSeparationWitnesses(inv.count, inv.p, Guardrail(inv));
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"ambient_dim", std::to_string(witnesses.back().w.n())}};
    for (const FreeWitness& w : witnesses) {
      fields.emplace_back("witness", "m=" + std::to_string(w.m) +
                                         " g_index=" +
                                         std::to_string(*w.g_index) +
                                         " rank=" + std::to_string(w.rank));
    }
    PrintMachine(fields);
  } else {
    std::cout << "ambient dimension " << witnesses.back().w.n() << "\n";
    for (const FreeWitness& w : witnesses) {
      std::cout << "  w_" << w.m << " (g(" << *w.g_index << ")): rank "
                << w.rank << "\n";
    }
    std::cout << DescribeOrbitSeparation(witnesses) << "\n";
  }
  return kExitOk;
}

int RunLemma41(const Invocation& inv) {
  const Lemma41Verdict v = VerifyLemma41(inv.m, inv.p, Guardrail(inv),
                                         inv.seed);
  const std::string threshold =
      v.observed_threshold ? std::to_string(*v.observed_threshold) : "none";
  if (Machine(inv)) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"m", std::to_string(v.m)},
        {"p", std::to_string(v.p)},
        {"mode", v.exhaustive ? "exhaustive" : "sampled"},
        {"holds", v.holds ? "yes" : "no"},
        {"sharp_bound_holds", v.sharp_bound_holds ? "yes" : "no"},
        {"observed_threshold", threshold},
        {"subspaces_checked", std::to_string(v.subspaces_checked)}};
    if (v.counterexample) {
      fields.emplace_back("counterexample", FormatSubspace(*v.counterexample));
    }
    PrintMachine(fields);
  } else {
    std::cout << "w_" << v.m << " over F_" << v.p << ", "
              << (v.exhaustive ? "exhaustive" : "sampled") << " ("
              << v.subspaces_checked << " subspaces)\n"
              << "no support of dim < " << v.m << ": "
              << (v.holds ? "confirmed" : "FAILS") << "\n"
              << "no support of dim < " << 2 * v.m << ": "
              << (v.sharp_bound_holds ? "observed" : "not observed") << "\n"
              << "least support dimension seen: " << threshold << "\n";
    if (v.counterexample) {
      std::cout << "counterexample E = " << FormatSubspace(*v.counterexample)
                << "\n";
    }
  }
  return v.holds ? kExitOk : kExitNegative;
}

int RunVerify(const Invocation& inv) {
  std::vector<std::string> ids;
  if (inv.lemma == "all") {
    ids.assign(kLemmaIds.begin(), kLemmaIds.end());
  } else if (IsKnownLemma(inv.lemma)) {
    ids.push_back(inv.lemma);
  } else {
    throw UsageError("unknown lemma id '" + inv.lemma + "'");
  }
  CatalogConfig config = CatalogConfig::Default(inv.seed, inv.samples);
  config.guardrail = Guardrail(inv);
  const std::vector<CatalogEntry> catalog = GenerateCatalog(config);
  SuiteOptions options;
  options.workers = inv.workers;
  bool all_pass = true;
  if (Machine(inv)) std::cout << "format 1\n";
  for (const std::string& id : ids) {
    const SuiteResult r = RunSuite(id, config, catalog, options);
    all_pass = all_pass && r.pass;
    std::cout << (Machine(inv) ? RenderSuiteMachine(r, !inv.no_timing)
                               : RenderSuiteText(r, !inv.no_timing));
    std::cout.flush();
  }
  return all_pass ? kExitOk : kExitNegative;
}

int RunFmt(const Invocation& inv) {
  std::cout << SerializeStructure(LoadStructure(inv));
  return kExitOk;
}

void AddStructureOptions(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--structure,-s", inv.structure_file, "Structure file");
  cmd->add_option("--inline", inv.structure_inline,
                  "Structure literal, lines separated by ';'");
  cmd->add_option("--k", inv.k_override, "Override k");
}

}  // namespace

int main(int argc, char** argv) {
  Invocation inv;
  CLI::App app{"Predimension and closure calculus of alternating bilinear "
               "maps over F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--guardrail", inv.guardrail_override,
                 "Enumeration limit (needs --allow-long-runs)");
  app.add_flag("--allow-long-runs", inv.allow_long_runs,
               "Acknowledge that raising the guardrail may run for long");
  app.add_option("--output,-o", inv.output, "Output form")
      ->check(CLI::IsMember({"text", "machine"}));

  struct Command {
    CLI::App* app;
    int (*run)(const Invocation&);
  };
  std::vector<Command> commands;
  auto sub = [&](const char* name, const char* help,
                 int (*run)(const Invocation&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    commands.push_back({cmd, run});
    return cmd;
  };

  CLI::App* cmd = sub("delta", "Scaled predimension of a subspace", RunDelta);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("nof", "Relations N(H) visible inside H", RunNOf);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("beta", "beta(u, v) as a coset representative", RunBeta);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--u", inv.u, "Vector literal")->required();
  cmd->add_option("--v", inv.v, "Vector literal")->required();

  cmd = sub("few-relations", "Exhaustive few-relations check",
            RunFewRelations);
  AddStructureOptions(cmd, inv);

  cmd = sub("selfsufficient", "Selfsufficiency of a subspace",
            RunSelfsufficient);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("css", "Selfsufficient closure", RunCss);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("dk", "Dimension function d_k of a vector set", RunDk);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--vectors", inv.vectors, "Vector list literal");

  cmd = sub("in-closure", "Is A inside cl_k(B)", RunInClosure);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--a", inv.vectors_a, "Vector list literal")->required();
  cmd->add_option("--b", inv.vectors_b, "Vector list literal");

  cmd = sub("closure", "The combinatorial closure of a subspace", RunClosure);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("delta-rel", "Relative predimension of K over H", RunDeltaRel);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "K, subspace literal")
      ->required();
  cmd->add_option("--base", inv.base, "H, selfsufficient subspace literal")
      ->required();

  cmd = sub("minimal-extensions", "Minimal extensions of a subspace",
            RunMinimalExtensions);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("chain", "Closure chain of a selfsufficient subspace", RunChain);
  AddStructureOptions(cmd, inv);
  cmd->add_option("--subspace", inv.subspace, "Subspace literal")->required();

  cmd = sub("bivector-rank", "Rank of a bivector", RunBivectorRank);
  cmd->add_option("--p", inv.p, "Prime")->required();
  cmd->add_option("--n", inv.n, "Ambient dimension")->required();
  cmd->add_option("--bivector", inv.bivector, "Bivector literal")
      ->required();

  cmd = sub("free-orbits", "Rank-separated witnesses w_g(i)", RunFreeOrbits);
  cmd->add_option("--count", inv.count, "Number of witnesses");
  cmd->add_option("--p", inv.p, "Prime");

  cmd = sub("lemma41", "Check that w_m has no small support", RunLemma41);
  cmd->add_option("--m", inv.m, "m")->required();
  cmd->add_option("--p", inv.p, "Prime");
  cmd->add_option("--seed", inv.seed, "Seed for sampled mode");

  cmd = sub("verify", "Run lemma suites on the default catalog", RunVerify);
  cmd->add_option("lemma", inv.lemma, "Lemma id or 'all'");
  cmd->add_option("--seed", inv.seed, "Catalog seed");
  cmd->add_option("--samples", inv.samples, "Samples per sampled point");
  cmd->add_option("--workers", inv.workers, "Worker threads")
      ->check(CLI::Range(1, 256));
  cmd->add_flag("--no-timing", inv.no_timing,
                "Print time_ms=- for byte-stable output");

  cmd = sub("fmt", "Parse and canonically re-serialize a structure", RunFmt);
  AddStructureOptions(cmd, inv);
  cmd->add_option("file", inv.structure_file, "Structure file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const Command& c : commands) {
      if (c.app->parsed()) return c.run(inv);
    }
    return kExitUsage;
  } catch (const GuardrailExceeded& e) {
    std::cerr << "guardrail exceeded: " << e.what() << "\n"
              << "required " << e.required() << "\n";
    return kExitGuardrail;
  } catch (const NotSelfsufficient& e) {
    std::cout << "not selfsufficient: " << FormatSubspace(e.subspace())
              << "\n"
              << "witness: " << FormatSubspace(e.witness()) << "\n";
    return kExitNegative;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
