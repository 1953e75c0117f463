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

#include "predim/propcheck.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "predim/errors.h"
#include "predim/exterior.h"
#include "predim/free_case.h"
#include "predim/lattice.h"
#include "predim/literals.h"

namespace predim {
namespace {

struct Outcome {
  std::uint64_t instances = 0;
  bool counted = false;
  std::optional<std::string> failure;
  std::string coverage;
};

using Named = std::initializer_list<std::pair<const char*, std::size_t>>;

std::string Describe(const ClosureEngine& e, Named named,
                     std::string_view detail) {
  std::ostringstream out;
  out << "structure:\n";
  std::istringstream lines(SerializeStructure(e.structure()));
  for (std::string line; std::getline(lines, line);) {
    out << "  " << line << "\n";
  }
  for (const auto& [name, index] : named) {
    out << name << " = " << FormatSubspace(e.lattice().at(index)) << "\n";
  }
  out << detail;
  return out.str();
}

// All vectors of at(i), as a predicate on vector codes.
bool VectorsInside(const SubspaceLattice& lat, std::size_t i,
                   const std::vector<bool>& members) {
  for (std::size_t code = 0; code < members.size(); ++code) {
    if (!members[code] && lat.Contains(i, lat.LineOf(code))) return false;
  }
  return true;
}

// --- L3.1 ------------------------------------------------------------------

Outcome CheckSubmodularity(const ClosureEngine& e, const CatalogEntry& entry) {
  const SubspaceLattice& lat = e.lattice();
  Outcome out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    for (std::size_t k = 0; k < lat.size(); ++k) {
      ++out.instances;
      const std::int64_t dh = e.delta_at(h);
      const std::int64_t dk = e.delta_at(k);
      const std::int64_t ds = e.delta_at(lat.Join(h, k));
      const std::int64_t dm = e.delta_at(lat.Meet(h, k));
      const char* clause = nullptr;
      if (ds > dh + dk - dm) {
        clause = "(i) delta(H+K) <= delta(H) + delta(K) - delta(H n K)";
      } else if (ds > dk && !(dm < dh)) {
        clause = "(ii) delta(H+K) > delta(K) implies delta(H n K) < delta(H)";
      } else if (ds >= dk && !(dm <= dh)) {
        clause =
            "(iii) delta(H+K) >= delta(K) implies delta(H n K) <= delta(H)";
      }
      if (clause != nullptr) {
        std::ostringstream detail;
        detail << "violates " << clause << ": scaled delta(H)=" << dh
               << " delta(K)=" << dk << " delta(H+K)=" << ds
               << " delta(H n K)=" << dm;
        out.failure = Describe(e, {{"H", h}, {"K", k}}, detail.str());
        return out;
      }
    }
  }
  if (entry.few_relations) {
    for (std::size_t h = 0; h < lat.size(); ++h) {
      ++out.instances;
      if (e.delta_at(h) < 0) {
        out.failure = Describe(e, {{"H", h}},
                               "few relations hold but delta(H) < 0");
        return out;
      }
    }
  }
  return out;
}

// --- L3.2 ------------------------------------------------------------------

Outcome CheckIntersection(const ClosureEngine& e, const CatalogEntry&) {
  const SubspaceLattice& lat = e.lattice();
  Outcome out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!e.selfsufficient_at(h)) continue;
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (!e.selfsufficient_at(k)) continue;
      ++out.instances;
      if (!e.selfsufficient_at(lat.Meet(h, k))) {
        out.failure = Describe(e, {{"H", h}, {"K", k}},
                               "H and K selfsufficient, H n K is not");
        return out;
      }
    }
  }
  return out;
}

// --- L3.3 ------------------------------------------------------------------

Outcome CheckClosureOperator(const ClosureEngine& e, const CatalogEntry&) {
  const SubspaceLattice& lat = e.lattice();
  const std::size_t vectors = lat.vectors().size();
  std::vector<std::vector<bool>> members(lat.size());
  for (std::size_t b = 0; b < lat.size(); ++b) {
    members[b] = e.ClosureMembersAt(b);
  }
  Outcome out;
  auto fail = [&](Named named, std::size_t code, std::string_view what) {
    out.failure = Describe(
        e, named,
        std::string(what) + ", c = " + FormatVector(lat.vectors()[code]));
  };
  // Extensive: A <= cl(A).
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t code = 0; code < vectors; ++code) {
      if (!lat.Contains(a, lat.LineOf(code))) continue;
      ++out.instances;
      if (!members[a][code]) {
        fail({{"A", a}}, code, "extensivity: c in <A> but not in cl(A)");
        return out;
      }
    }
  }
  // Monotone: A <= B and c in cl(A) give c in cl(B).
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b : lat.Superspaces(a)) {
      for (std::size_t code = 0; code < vectors; ++code) {
        ++out.instances;
        if (members[a][code] && !members[b][code]) {
          fail({{"A", a}, {"B", b}}, code,
               "monotonicity: A <= B, c in cl(A), c not in cl(B)");
          return out;
        }
      }
    }
  }
  // Idempotent: B <= cl(A) and c in cl(B) give c in cl(A).
  for (std::size_t a = 0; a < lat.size(); ++a) {
    const std::int64_t base = e.delta_at(e.css_at(a));
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (e.delta_at(e.css_at(lat.Join(a, b))) != base) continue;
      for (std::size_t code = 0; code < vectors; ++code) {
        ++out.instances;
        if (members[b][code] && !members[a][code]) {
          fail({{"A", a}, {"B", b}}, code,
               "idempotence: B <= cl(A), c in cl(B), c not in cl(A)");
          return out;
        }
      }
    }
  }
  return out;
}

// --- CSS-oracle ------------------------------------------------------------

Outcome CheckCssOracle(const ClosureEngine& e, const CatalogEntry&) {
  const SubspaceLattice& lat = e.lattice();
  const std::size_t size = lat.size();
  // Selfsufficiency recomputed from the definition, by full lattice scans.
  std::vector<bool> selfsufficient(size, true);
  for (std::size_t h = 0; h < size; ++h) {
    for (std::size_t k = 0; k < size; ++k) {
      if (lat.Contains(k, h) && e.delta_at(k) < e.delta_at(h)) {
        selfsufficient[h] = false;
        break;
      }
    }
  }
  Outcome out;
  for (std::size_t h = 0; h < size; ++h) {
    ++out.instances;
    if (selfsufficient[h] != e.selfsufficient_at(h)) {
      out.failure = Describe(e, {{"H", h}},
                             "selfsufficiency disagrees with brute force");
      return out;
    }
    if (!e.css_unique_at(h)) {
      out.failure = Describe(e, {{"H", h}},
                             "minimum-dimension delta minimizer not unique");
      return out;
    }
    std::int64_t brute_min = std::numeric_limits<std::int64_t>::max();
    std::size_t literal = lat.full_index();
    for (std::size_t k = 0; k < size; ++k) {
      if (!lat.Contains(k, h)) continue;
      brute_min = std::min(brute_min, e.delta_at(k));
      if (selfsufficient[k]) literal = lat.Meet(literal, k);
    }
    const std::size_t css = e.css_at(h);
    const char* problem = nullptr;
    if (css != literal) {
      problem = "css differs from the intersection of selfsufficient "
                "superspaces";
    } else if (e.delta_at(css) != brute_min) {
      problem = "delta(css(H)) is not the minimum over superspaces";
    } else if (!lat.Contains(css, h)) {
      problem = "css(H) does not contain H";
    } else if (!selfsufficient[css]) {
      problem = "css(H) is not selfsufficient";
    } else if (e.css_at(css) != css) {
      problem = "css is not idempotent";
    }
    if (problem != nullptr) {
      out.failure = Describe(e, {{"H", h}, {"css(H)", css}, {"oracle",
                                                             literal}},
                             problem);
      return out;
    }
    for (std::size_t k : lat.Superspaces(h)) {
      ++out.instances;
      if (!lat.Contains(e.css_at(k), css)) {
        out.failure = Describe(e, {{"H", h}, {"K", k}},
                               "css is not monotone: H <= K but css(H) is "
                               "not inside css(K)");
        return out;
      }
    }
  }
  return out;
}

// --- DREL ------------------------------------------------------------------

Outcome CheckRelativeDelta(const ClosureEngine& e, const CatalogEntry& entry) {
  const SubspaceLattice& lat = e.lattice();
  const std::int64_t k = entry.structure.k();
  Outcome out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!e.selfsufficient_at(h)) continue;
    const auto minima = e.DeltaRelMinimaAt(h);
    for (std::size_t kk = 0; kk < lat.size(); ++kk) {
      ++out.instances;
      const std::size_t target = lat.Join(kk, h);
      const std::int64_t closed =
          k * static_cast<std::int64_t>(lat.at(target).dim() -
                                        lat.at(h).dim()) -
          static_cast<std::int64_t>(e.relations_dim_at(target) -
                                    e.relations_dim_at(h));
      if (!minima[target] || *minima[target] != closed) {
        std::ostringstream detail;
        detail << "min formula "
               << (minima[target] ? std::to_string(*minima[target]) : "none")
               << " vs closed form " << closed;
        out.failure = Describe(e, {{"K", kk}, {"H", h}}, detail.str());
        return out;
      }
    }
  }
  return out;
}

// --- L5.1 ------------------------------------------------------------------

Outcome CheckMinimalExtensionDichotomy(const ClosureEngine& e,
                                       const CatalogEntry& entry) {
  Outcome out;
  if (!entry.few_relations) return out;
  out.counted = true;
  const SubspaceLattice& lat = e.lattice();
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!e.selfsufficient_at(h)) continue;
    for (std::size_t k : e.MinimalExtensionsAt(h)) {
      for (std::size_t l : lat.Superspaces(h)) {
        if (!e.selfsufficient_at(l)) continue;
        ++out.instances;
        if (!lat.Contains(l, k) && lat.Meet(k, l) != h) {
          out.failure = Describe(
              e, {{"H", h}, {"K", k}, {"L", l}},
              "minimal extension K neither inside L nor independent of L "
              "over H");
          return out;
        }
      }
    }
  }
  return out;
}

// --- L5.2 ------------------------------------------------------------------

Outcome CheckRelationAdditivity(const ClosureEngine& e,
                                const CatalogEntry& entry) {
  Outcome out;
  if (!entry.few_relations) return out;
  out.counted = true;
  const SubspaceLattice& lat = e.lattice();
  std::vector<std::optional<Subspace>> n_of(lat.size());
  auto relations = [&](std::size_t i) -> const Subspace& {
    if (!n_of[i]) n_of[i] = e.NOfAt(i);
    return *n_of[i];
  };
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!e.selfsufficient_at(h)) continue;
    const std::vector<bool> closure = e.ClosureMembersAt(h);
    std::vector<std::size_t> candidates;
    for (std::size_t k : lat.Superspaces(h)) {
      if (e.selfsufficient_at(k) && VectorsInside(lat, k, closure)) {
        candidates.push_back(k);
      }
    }
    for (std::size_t k : candidates) {
      for (std::size_t l : candidates) {
        if (lat.Meet(k, l) != h) continue;
        ++out.instances;
        if (Sum(relations(l), relations(k)) != relations(lat.Join(k, l))) {
          out.failure = Describe(e, {{"H", h}, {"K", k}, {"L", l}},
                                 "N(L+K) != N(L) + N(K)");
          return out;
        }
      }
    }
  }
  return out;
}

// --- T6.1-chain ------------------------------------------------------------

Outcome CheckClosureChain(const ClosureEngine& e, const CatalogEntry&) {
  const SubspaceLattice& lat = e.lattice();
  Outcome out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!e.selfsufficient_at(h)) continue;
    ++out.instances;
    const ClosureReport report = e.Chain(lat.at(h));
    const char* problem = nullptr;
    std::size_t culprit = h;
    if (!report.closure.subspace) {
      problem = "cl_k(H) is not a subspace";
    } else if (!report.reaches_closure) {
      problem = "chain stops before cl_k(H)";
    } else if (*report.closure.subspace != report.input &&
               report.steps.front().extensions.empty()) {
      problem = "cl_k(H) strictly exceeds H but H has no minimal extension "
                "inside it";
    }
    for (std::size_t i = 0; problem == nullptr && i < report.chain.size();
         ++i) {
      const std::size_t member = lat.IndexOf(report.chain[i]);
      culprit = member;
      if (i > 0 && (report.chain[i].dim() <= report.chain[i - 1].dim() ||
                    !report.chain[i].Contains(report.chain[i - 1]))) {
        problem = "chain is not strictly increasing";
      } else if (!e.selfsufficient_at(member)) {
        problem = "chain member is not selfsufficient";
      } else if (e.delta_at(member) != report.dk.value) {
        problem = "chain member predimension differs from d_k(H)";
      }
    }
    if (problem != nullptr) {
      out.failure = Describe(e, {{"H", h}, {"member", culprit}}, problem);
      return out;
    }
  }
  return out;
}

using EntryCheck = Outcome (*)(const ClosureEngine&, const CatalogEntry&);

EntryCheck CheckFor(std::string_view id) {
  if (id == "L3.1") return CheckSubmodularity;
  if (id == "L3.2") return CheckIntersection;
  if (id == "L3.3") return CheckClosureOperator;
  if (id == "L5.1") return CheckMinimalExtensionDichotomy;
  if (id == "L5.2") return CheckRelationAdditivity;
  if (id == "DREL") return CheckRelativeDelta;
  if (id == "T6.1-chain") return CheckClosureChain;
  if (id == "CSS-oracle") return CheckCssOracle;
  return nullptr;
}

// Runs tasks[i] for every i on `workers` threads (strided assignment) and
// returns the outcomes in task order.
std::vector<Outcome> RunParallel(
    std::size_t count, std::size_t workers,
    const std::function<Outcome(std::size_t)>& task) {
  std::vector<Outcome> outcomes(count);
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        outcomes[i] = task(i);
      } catch (const std::exception& ex) {
        outcomes[i].failure = std::string("exception: ") + ex.what();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    run(0, 1);
    return outcomes;
  }
  std::vector<std::jthread> threads;
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w,
                                                                  workers);
  threads.clear();
  return outcomes;
}

void Merge(const std::vector<Outcome>& outcomes, SuiteResult& result) {
  for (const Outcome& o : outcomes) {
    result.instances += o.instances;
    result.structures += o.counted ? 1 : 0;
    if (!o.coverage.empty()) result.coverage.push_back(o.coverage);
    if (o.failure && result.pass) {
      result.pass = false;
      result.counterexample = o.failure;
    }
  }
}

void RunLemma41(const CatalogConfig& config, const SuiteOptions& options,
                SuiteResult& result) {
  std::vector<std::function<Outcome()>> tasks;
  tasks.push_back([] {
    Outcome o;
    o.instances = 1;
    if (GSequence(3) != std::vector<std::uint64_t>{1, 3, 7}) {
      o.failure = "g_sequence(3) != [1, 3, 7]";
    }
    return o;
  });
  for (std::size_t count : {2, 3}) {
    tasks.push_back([count] {
      Outcome o;
      std::ostringstream ranks;
      const auto witnesses = OrbitSeparationWitnesses(count, 2);
      const auto g = GSequence(count);
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        ++o.instances;
        ranks << (i ? "," : "") << witnesses[i].rank;
        if (witnesses[i].rank != 2 * g[i]) {
          o.failure = "orbit witness w_" + std::to_string(g[i]) +
                      " has rank " + std::to_string(witnesses[i].rank);
        }
      }
      o.coverage = "orbit witnesses count=" + std::to_string(count) +
                   " ranks=[" + ranks.str() + "]";
      return o;
    });
  }
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t m = 1; m <= 5; ++m) {
      tasks.push_back([p, m, &config] {
        Outcome o;
        const FreeWitness w = MakeFreeWitness(m, p, 2 * m);
        ++o.instances;
        if (w.rank != 2 * m) {
          o.failure = "rank(w_" + std::to_string(m) + ") = " +
                      std::to_string(w.rank) + " over F_" +
                      std::to_string(p);
          return o;
        }
        std::ostringstream cov;
        cov << "p=" << p << " m=" << m << " rank=" << w.rank;
        try {
          const std::size_t oracle =
              MinSupportDimOracle(w.w, config.guardrail);
          ++o.instances;
          cov << " oracle=" << oracle;
          if (oracle != w.rank) {
            o.failure = "min-support oracle " + std::to_string(oracle) +
                        " != rank " + std::to_string(w.rank);
          }
        } catch (const GuardrailExceeded&) {
          cov << " oracle=skipped(guardrail)";
        }
        {
          const Lemma41Verdict v =
              VerifyLemma41(m, p, config.guardrail, config.seed);
          o.instances += v.subspaces_checked;
          cov << " lemma=" << (v.exhaustive ? "exhaustive" : "sampled")
              << " subspaces=" << v.subspaces_checked << " threshold="
              << (v.observed_threshold ? std::to_string(*v.observed_threshold)
                                       : "none");
          if (!v.holds && !o.failure) {
            o.failure = "w_" + std::to_string(m) + " lies in Lambda^2 E for E = " +
                        FormatSubspace(*v.counterexample);
          }
        }
        o.coverage = cov.str();
        return o;
      });
    }
  }
  Merge(RunParallel(tasks.size(), options.workers,
                    [&](std::size_t i) { return tasks[i](); }),
        result);
}

}  // namespace

std::string_view ModeName(CatalogMode mode) {
  return mode == CatalogMode::kExhaustive ? "exhaustive" : "sampled";
}

CatalogConfig CatalogConfig::Default(std::uint64_t seed, std::size_t samples) {
  CatalogConfig config;
  config.seed = seed;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      config.points.push_back({CatalogMode::kExhaustive, 2, n, k, 0});
    }
  }
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      config.points.push_back({CatalogMode::kSampled, p, 4, k, samples});
    }
  }
  return config;
}

CatalogConfig CatalogConfig::Exhaustive(std::uint32_t p, std::size_t max_n) {
  CatalogConfig config;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      config.points.push_back({CatalogMode::kExhaustive, p, n, k, 0});
    }
  }
  return config;
}

std::vector<CatalogEntry> GenerateCatalog(const CatalogConfig& config) {
  std::vector<CatalogEntry> out;
  std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<Ambient>>
      ambients;
  for (std::size_t index = 0; index < config.points.size(); ++index) {
    const CatalogPoint& point = config.points[index];
    CheckPrime(point.p);
    if (point.k == 0) throw InvalidArgument("catalog k must be at least 1");
    auto& ambient = ambients[{point.p, point.n}];
    if (!ambient) {
      ambient = std::make_shared<Ambient>(point.n, point.p, config.guardrail);
    }
    const std::size_t wedge_dim = WedgeDim(point.n);
    std::vector<Subspace> relations;
    if (point.mode == CatalogMode::kExhaustive) {
      relations = EnumerateSubspaces(wedge_dim, point.p, config.guardrail);
    } else {
      std::seed_seq seq{config.seed, static_cast<std::uint64_t>(index)};
      std::mt19937_64 rng(seq);
      for (std::size_t s = 0; s < point.samples; ++s) {
        const std::size_t gens = rng() % (wedge_dim + 1);
        std::vector<FpVector> vectors;
        for (std::size_t g = 0; g < gens; ++g) {
          std::vector<std::uint32_t> coords(wedge_dim);
          for (auto& c : coords) {
            c = static_cast<std::uint32_t>(rng() % point.p);
          }
          vectors.emplace_back(point.p, std::move(coords));
        }
        relations.push_back(Subspace::Span(vectors, point.p, wedge_dim));
      }
    }
    for (Subspace& rel : relations) {
      BilinearStructure s(point.p, point.n, point.k, std::move(rel));
      const bool few = CheckFewRelations(s, *ambient).holds;
      out.push_back({std::move(s), few, index});
    }
  }
  return out;
}

bool IsKnownLemma(std::string_view id) {
  return std::find(kLemmaIds.begin(), kLemmaIds.end(), id) != kLemmaIds.end();
}

SuiteResult RunSuite(std::string_view lemma_id, const CatalogConfig& config,
                     const std::vector<CatalogEntry>& catalog,
                     const SuiteOptions& options) {
  if (!IsKnownLemma(lemma_id)) {
    throw InvalidArgument("unknown lemma id '" + std::string(lemma_id) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.lemma_id = std::string(lemma_id);
  result.seed = config.seed;

  if (lemma_id == "L4.1") {
    RunLemma41(config, options, result);
  } else {
    const bool few_only = lemma_id == "L5.1" || lemma_id == "L5.2";
    for (std::size_t index = 0; index < config.points.size(); ++index) {
      const CatalogPoint& point = config.points[index];
      std::size_t structures = 0, few = 0;
      for (const CatalogEntry& entry : catalog) {
        if (entry.point != index) continue;
        ++structures;
        few += entry.few_relations ? 1 : 0;
      }
      std::ostringstream line;
      line << "p=" << point.p << " n=" << point.n << " k=" << point.k << " "
           << ModeName(point.mode) << " structures=" << structures
           << " few-relations=" << few;
      if (few_only) line << " (suite restricted to few-relations)";
      result.coverage.push_back(line.str());
    }

    std::map<std::pair<std::uint32_t, std::size_t>,
             std::shared_ptr<const Ambient>>
        ambients;
    for (const CatalogEntry& entry : catalog) {
      auto& ambient = ambients[{entry.structure.p(), entry.structure.n()}];
      if (!ambient) {
        ambient = std::make_shared<const Ambient>(
            entry.structure.n(), entry.structure.p(), config.guardrail);
      }
    }
    const EntryCheck check = CheckFor(lemma_id);
    Merge(RunParallel(catalog.size(), options.workers,
                      [&](std::size_t i) {
                        const CatalogEntry& entry = catalog[i];
                        const ClosureEngine engine(
                            entry.structure,
                            ambients.at({entry.structure.p(),
                                         entry.structure.n()}),
                            options.delta_fault);
                        Outcome o = check(engine, entry);
                        if (!few_only) o.counted = true;
                        return o;
                      }),
          result);
  }
  result.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::string RenderSuiteMachine(const SuiteResult& result, bool timing) {
  std::ostringstream out;
  out << "SUITE " << result.lemma_id << " " << (result.pass ? "pass" : "fail")
      << " instances=" << result.instances << " seed=" << result.seed
      << " time_ms=" << (timing ? std::to_string(result.time_ms) : "-")
      << "\n";
  if (result.counterexample) {
    std::istringstream lines(*result.counterexample);
    for (std::string line; std::getline(lines, line);) {
      out << "  " << line << "\n";
    }
  }
  return out.str();
}

std::string RenderSuiteText(const SuiteResult& result, bool timing) {
  std::ostringstream out;
  out << result.lemma_id << ": " << (result.pass ? "PASS" : "FAIL")
      << " (instances " << result.instances << ", structures "
      << result.structures << ", seed " << result.seed;
  if (timing) out << ", " << result.time_ms << " ms";
  out << ")\n";
  for (const std::string& line : result.coverage) {
    out << "  " << line << "\n";
  }
  if (result.counterexample) {
    out << "  counterexample:\n";
    std::istringstream lines(*result.counterexample);
    for (std::string line; std::getline(lines, line);) {
      out << "    " << line << "\n";
    }
  }
  return out.str();
}

}  // namespace predim
