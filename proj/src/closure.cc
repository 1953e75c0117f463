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

#include "predim/closure.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "predim/exterior.h"
#include "predim/literals.h"

namespace predim {

Ambient::Ambient(std::size_t n, std::uint32_t p, std::uint64_t guardrail)
    : lattice_(n, p, guardrail) {
  lambda2_.reserve(lattice_.size());
  for (const Subspace& h : lattice_.subspaces()) {
    lambda2_.push_back(Lambda2Embed(h));
  }
}

ClosureEngine::ClosureEngine(const BilinearStructure& s,
                             std::uint64_t guardrail)
    : ClosureEngine(s, std::make_shared<Ambient>(s.n(), s.p(), guardrail)) {}

ClosureEngine::ClosureEngine(const BilinearStructure& s,
                             std::shared_ptr<const Ambient> ambient,
                             const DeltaAdjust& adjust)
    : structure_(s), ambient_(std::move(ambient)) {
  const SubspaceLattice& lat = ambient_->lattice();
  if (lat.p() != s.p() || lat.n() != s.n()) {
    throw DimensionMismatch("ambient lattice does not match the structure");
  }
  const std::size_t size = lat.size();
  const Subspace& rel = s.relations();
  relations_dim_.resize(size);
  delta_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    // dim(R n L) = dim R + dim L - dim(R + L).
    const Subspace& l2 = ambient_->Lambda2(i);
    relations_dim_[i] = rel.dim() + l2.dim() - Sum(rel, l2).dim();
    delta_[i] = static_cast<std::int64_t>(s.k()) *
                    static_cast<std::int64_t>(lat.at(i).dim()) -
                static_cast<std::int64_t>(relations_dim_[i]);
    if (adjust) delta_[i] = adjust(i, delta_[i]);
  }

  min_super_delta_.resize(size);
  selfsufficient_.resize(size);
  css_.resize(size);
  css_unique_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j : lat.Superspaces(i)) best = std::min(best, delta_[j]);
    min_super_delta_[i] = best;
    selfsufficient_[i] = delta_[i] <= best;
    // Superspaces are listed dimension-major, so the first minimizer has
    // least dimension; a second one of the same dimension breaks uniqueness.
    std::optional<std::size_t> first;
    bool unique = true;
    for (std::size_t j : lat.Superspaces(i)) {
      if (delta_[j] != best) continue;
      if (!first) {
        first = j;
      } else if (lat.at(j).dim() == lat.at(*first).dim()) {
        unique = false;
      }
    }
    css_[i] = *first;
    css_unique_[i] = unique;
  }
}

Subspace ClosureEngine::NOfAt(std::size_t i) const {
  return Intersect(structure_.relations(), ambient_->Lambda2(i));
}

void ClosureEngine::RequireSelfsufficient(std::size_t h) const {
  if (selfsufficient_[h]) return;
  const SubspaceLattice& lat = lattice();
  for (std::size_t j : lat.Superspaces(h)) {
    if (delta_[j] == min_super_delta_[h]) {
      throw NotSelfsufficient(lat.at(h), lat.at(j));
    }
  }
}

ScaledDelta ClosureEngine::Delta(const Subspace& h) const {
  return Scaled(delta_[lattice().IndexOf(h)]);
}

SelfsufficiencyVerdict ClosureEngine::CheckSelfsufficient(
    const Subspace& h) const {
  const std::size_t i = lattice().IndexOf(h);
  SelfsufficiencyVerdict verdict;
  if (selfsufficient_[i]) return verdict;
  verdict.selfsufficient = false;
  for (std::size_t j : lattice().Superspaces(i)) {
    if (delta_[j] == min_super_delta_[i]) {
      verdict.witness = lattice().at(j);
      break;
    }
  }
  return verdict;
}

bool ClosureEngine::IsSelfsufficient(const Subspace& h) const {
  return selfsufficient_[lattice().IndexOf(h)];
}

Subspace ClosureEngine::Css(const Subspace& h) const {
  const std::size_t i = lattice().IndexOf(h);
  if (!css_unique_[i]) {
    throw InternalError("minimum-dimension delta minimizer is not unique");
  }
  return lattice().at(css_[i]);
}

ScaledDelta ClosureEngine::Dk(std::span<const FpVector> a) const {
  const Subspace span = Subspace::Span(a, structure_.p(), structure_.n());
  return Scaled(delta_[css_[lattice().IndexOf(span)]]);
}

bool ClosureEngine::InClosure(std::span<const FpVector> a,
                              std::span<const FpVector> b) const {
  std::vector<FpVector> both(b.begin(), b.end());
  both.insert(both.end(), a.begin(), a.end());
  return Dk(b) == Dk(both);
}

bool ClosureEngine::InClosureAt(std::size_t code, std::size_t b) const {
  const std::size_t joined = lattice().Join(b, lattice().LineOf(code));
  return delta_[css_[joined]] == delta_[css_[b]];
}

std::vector<bool> ClosureEngine::ClosureMembersAt(std::size_t b) const {
  std::vector<bool> members(lattice().vectors().size());
  for (std::size_t code = 0; code < members.size(); ++code) {
    members[code] = InClosureAt(code, b);
  }
  return members;
}

std::optional<std::size_t> ClosureEngine::ClosureIndexAt(
    std::size_t b) const {
  const SubspaceLattice& lat = lattice();
  const std::vector<bool> members = ClosureMembersAt(b);
  std::size_t span = lat.zero_index();
  std::uint64_t count = 0;
  for (std::size_t code = 0; code < members.size(); ++code) {
    if (!members[code]) continue;
    ++count;
    span = lat.Join(span, lat.LineOf(code));
  }
  // The members lie in their span, so equal sizes mean equal sets.
  if (count != CountVectors(lat.at(span).dim(), lat.p())) return std::nullopt;
  return span;
}

ClosureSet ClosureEngine::ClosureOf(const Subspace& b) const {
  const std::size_t i = lattice().IndexOf(b);
  ClosureSet out;
  const std::vector<bool> members = ClosureMembersAt(i);
  for (std::size_t code = 0; code < members.size(); ++code) {
    if (members[code]) out.members.push_back(lattice().vectors()[code]);
  }
  if (const auto idx = ClosureIndexAt(i)) out.subspace = lattice().at(*idx);
  return out;
}

std::vector<std::optional<std::int64_t>> ClosureEngine::DeltaRelMinimaAt(
    std::size_t h) const {
  RequireSelfsufficient(h);
  const SubspaceLattice& lat = lattice();
  std::vector<std::optional<std::int64_t>> best(lat.size());
  for (std::size_t k1 = 0; k1 < lat.size(); ++k1) {
    const std::size_t meet = lat.Meet(k1, h);
    if (!selfsufficient_[meet]) continue;
    const std::size_t target = lat.Join(k1, h);
    const std::int64_t value = delta_[k1] - delta_[meet];
    if (!best[target] || value < *best[target]) best[target] = value;
  }
  return best;
}

RelativeDelta ClosureEngine::DeltaRel(const Subspace& k,
                                      const Subspace& h) const {
  const SubspaceLattice& lat = lattice();
  const std::size_t hi = lat.IndexOf(h);
  const std::size_t ki = lat.IndexOf(k);
  RequireSelfsufficient(hi);
  const std::size_t target = lat.Join(ki, hi);

  std::optional<std::int64_t> minimum;
  std::size_t attained_by = target;
  for (std::size_t k1 = 0; k1 < lat.size(); ++k1) {
    if (lat.Join(k1, hi) != target) continue;
    const std::size_t meet = lat.Meet(k1, hi);
    if (!selfsufficient_[meet]) continue;
    const std::int64_t value = delta_[k1] - delta_[meet];
    if (!minimum || value < *minimum) {
      minimum = value;
      attained_by = k1;
    }
  }
  // K1 = K + H always qualifies since H itself is selfsufficient.
  const std::int64_t k_scale = structure_.k();
  const std::int64_t closed =
      k_scale * static_cast<std::int64_t>(lat.at(target).dim() -
                                          lat.at(hi).dim()) -
      static_cast<std::int64_t>(relations_dim_[target] - relations_dim_[hi]);
  if (*minimum != closed) {
    throw FormulaMismatch("relative predimension: minimum " +
                          std::to_string(*minimum) + " vs closed form " +
                          std::to_string(closed) + " for K = " +
                          FormatSubspace(k) + ", H = " + FormatSubspace(h));
  }
  return {Scaled(*minimum), Scaled(closed), lat.at(attained_by)};
}

std::vector<std::size_t> ClosureEngine::MinimalExtensionsAt(
    std::size_t h) const {
  RequireSelfsufficient(h);
  const SubspaceLattice& lat = lattice();
  // Proper superspaces with vanishing relative predimension, which for a
  // selfsufficient base is delta(K) - delta(H).
  std::vector<std::size_t> zero;
  for (std::size_t j : lat.Superspaces(h)) {
    if (j != h && delta_[j] == delta_[h]) zero.push_back(j);
  }
  // Dimension-major order: any zero-delta space strictly inside a candidate
  // contains an earlier minimal one, so checking found minima suffices.
  std::vector<std::size_t> minimal;
  for (std::size_t j : zero) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(),
                    [&](std::size_t m) { return lat.Contains(j, m); });
    if (!dominated) minimal.push_back(j);
  }
  std::erase_if(minimal, [&](std::size_t j) { return !selfsufficient_[j]; });
  return minimal;
}

std::vector<Subspace> ClosureEngine::MinimalExtensions(
    const Subspace& h) const {
  std::vector<Subspace> out;
  for (std::size_t j : MinimalExtensionsAt(lattice().IndexOf(h))) {
    out.push_back(lattice().at(j));
  }
  return out;
}

ClosureReport ClosureEngine::Chain(const Subspace& h) const {
  const SubspaceLattice& lat = lattice();
  const std::size_t hi = lat.IndexOf(h);
  RequireSelfsufficient(hi);

  ClosureReport report{h, Css(h), Scaled(delta_[css_[hi]]), ClosureOf(h),
                       {}, {}, false};
  const std::vector<bool> members = ClosureMembersAt(hi);
  auto inside_closure = [&](std::size_t e) {
    for (std::size_t code = 0; code < members.size(); ++code) {
      if (!members[code] && lat.Contains(e, lat.LineOf(code))) return false;
    }
    return true;
  };

  std::size_t current = hi;
  report.chain.push_back(lat.at(current));
  while (true) {
    ChainStep step{lat.at(current), {}};
    std::size_t next = current;
    for (std::size_t e : MinimalExtensionsAt(current)) {
      if (!inside_closure(e)) continue;
      step.extensions.push_back(lat.at(e));
      next = lat.Join(next, e);
    }
    report.steps.push_back(std::move(step));
    if (next == current) break;
    current = next;
    report.chain.push_back(lat.at(current));
  }
  report.reaches_closure =
      report.closure.subspace && *report.closure.subspace == lat.at(current);
  return report;
}

FewRelationsVerdict CheckFewRelations(const BilinearStructure& s,
                                      const Ambient& ambient) {
  const SubspaceLattice& lat = ambient.lattice();
  if (lat.p() != s.p() || lat.n() != s.n()) {
    throw DimensionMismatch("ambient lattice does not match the structure");
  }
  FewRelationsVerdict verdict;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Subspace& l2 = ambient.Lambda2(i);
    const std::size_t rel =
        s.relations().dim() + l2.dim() - Sum(s.relations(), l2).dim();
    if (rel > static_cast<std::size_t>(s.k()) * lat.at(i).dim()) {
      verdict.holds = false;
      verdict.witness = lat.at(i);
      verdict.witness_relations_dim = rel;
      break;
    }
  }
  return verdict;
}

std::string RenderText(const ClosureReport& report) {
  std::ostringstream out;
  out << "input: " << FormatSubspace(report.input) << "\n"
      << "css: " << FormatSubspace(report.css) << " (dim "
      << report.css.dim() << ")\n"
      << "d_k: " << report.dk.value << "/k = " << report.dk.Rational()
      << "\n";
  if (report.closure.subspace) {
    out << "closure: " << FormatSubspace(*report.closure.subspace)
        << " (dim " << report.closure.subspace->dim() << ")\n";
  } else {
    out << "closure: not a subspace (" << report.closure.members.size()
        << " vectors)\n";
  }
  out << "chain:\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const ChainStep& step = report.steps[i];
    out << "  H_" << i << " = " << FormatSubspace(step.base) << " (dim "
        << step.base.dim() << ")\n";
    out << "    minimal extensions:";
    if (step.extensions.empty()) out << " none";
    for (const Subspace& e : step.extensions) {
      out << " [" << FormatSubspace(e) << "]";
    }
    out << "\n";
  }
  out << "reaches closure: " << (report.reaches_closure ? "yes" : "no")
      << "\n";
  return out.str();
}

std::string RenderMachine(const ClosureReport& report) {
  std::ostringstream out;
  out << "format 1\n"
      << "input " << FormatSubspace(report.input) << "\n"
      << "css " << FormatSubspace(report.css) << "\n"
      << "dk_scaled " << report.dk.value << "\n"
      << "dk_rational " << report.dk.Rational() << "\n";
  if (report.closure.subspace) {
    out << "closure_subspace yes\n"
        << "closure_dim " << report.closure.subspace->dim() << "\n"
        << "closure " << FormatSubspace(*report.closure.subspace) << "\n";
  } else {
    out << "closure_subspace no\n"
        << "closure_size " << report.closure.members.size() << "\n";
  }
  out << "chain_length " << report.chain.size() << "\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const ChainStep& step = report.steps[i];
    out << "chain " << i << " " << FormatSubspace(step.base) << "\n";
    out << "extensions " << i;
    if (step.extensions.empty()) out << " -";
    for (const Subspace& e : step.extensions) out << " " << FormatSubspace(e);
    out << "\n";
  }
  out << "reaches_closure " << (report.reaches_closure ? "yes" : "no")
      << "\n";
  return out.str();
}

}  // namespace predim
