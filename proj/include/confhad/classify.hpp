// Copyright 2026 The confhad Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "confhad/constructions.hpp"
#include "confhad/equivalence.hpp"
#include "confhad/fingerprint.hpp"
#include "confhad/verify.hpp"

namespace confhad {

struct EquivalenceClass {
  ButsonMatrix representative;
  std::vector<std::size_t> members;  // indices into the assignment list
  bool unresolved = false;           // some comparison ran out of budget
};

struct Classification {
  std::vector<EquivalenceClass> classes;
  std::vector<std::size_t> not_hadamard;  // assignments whose specialization failed the exact check
  std::size_t evaluated = 0;
};

/// Every assignment of the given symbols to m-th roots of unity, in
/// odometer order (first symbol varies fastest).
inline std::vector<ExactAssignment> root_assignments(std::span<const Symbol> symbols, int m) {
  std::vector<ExactAssignment> out;
  std::vector<int> k(symbols.size(), 0);
  while (true) {
    ExactAssignment a;
    for (std::size_t s = 0; s < symbols.size(); ++s) a.emplace(symbols[s], CycValue::root(m, k[s]));
    out.push_back(std::move(a));
    std::size_t t = 0;
    while (t < k.size() && ++k[t] == m) k[t++] = 0;
    if (t == k.size()) break;
  }
  return out;
}

/// Specializes an inverse orthogonal family at each assignment, keeps the
/// exact Hadamard specializations and groups them into monomial equivalence
/// classes (fingerprint buckets refined by the equivalence search).
inline Classification specialize_and_classify(const SymbolicMatrix &family, std::span<const ExactAssignment> assignments,
                                              int m, std::uint64_t budget = kDefaultSearchBudget) {
  if (!check_inverse_orthogonal(family)) throw Error("specialize_and_classify: input is not inverse orthogonal");
  Classification out;
  std::map<Fingerprint, std::vector<std::size_t>> buckets;  // fingerprint -> class indices
  for (std::size_t idx = 0; idx < assignments.size(); ++idx) {
    for (const auto &[s, v] : assignments[idx])
      if (v.is_zero()) throw Error(std::string("specialize_and_classify: parameter '") + s.name() + "' assigned zero");
    ButsonMatrix h = evaluate_butson(family, assignments[idx], m);
    ++out.evaluated;
    if (!check_hadamard(h)) {
      out.not_hadamard.push_back(idx);
      continue;
    }
    auto &bucket = buckets[fingerprint(h)];
    bool placed = false, undecided = false;
    for (std::size_t ci : bucket) {
      EquivalenceVerdict v = are_equivalent(out.classes[ci].representative, h, budget);
      if (v.equivalent()) {
        out.classes[ci].members.push_back(idx);
        placed = true;
        break;
      }
      if (v.kind == EquivalenceVerdict::Kind::unknown) undecided = true;
    }
    if (!placed) {
      bucket.push_back(out.classes.size());
      out.classes.push_back({std::move(h), {idx}, undecided});
    }
  }
  return out;
}

}  // namespace confhad
