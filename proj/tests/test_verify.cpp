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


#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace confhad;
using namespace confhad::test;

namespace {

const char *const kConference[] = {"C6a", "C6b", "C6c", "C6d", "C6e", "C6f", "C6g"};
const char *const kOrthogonal[] = {"O12a", "O12b", "O12c", "O12d", "O12e", "O12f", "O12g", "O12h"};
const char *const kHadamard[] = {"H12a", "H12b", "H12c", "H12d", "H12e", "H12f", "H12g"};

}  // namespace

TEST_CASE("check_inverse_orthogonal examples") {
  const VerificationResult o = check_inverse_orthogonal(catalog().build_symbolic("O12a"));
  CHECK(o.passed());
  CHECK(reciprocal_inner_product(catalog().build_symbolic("O12a"), 3, 3) == LaurentPoly::constant(GaussianInt(12)));

  const VerificationResult ones = check_inverse_orthogonal(sym({{"1", "1"}, {"1", "1"}}));
  REQUIRE_FALSE(ones.passed());
  CHECK(ones.witness()->row == 0);
  CHECK(ones.witness()->col == 1);
  CHECK(*ones.witness()->sum == LaurentPoly::constant(GaussianInt(2)));
  CHECK(ones.describe() == "fail at rows 1,2: inner product 2, expected 0");

  CHECK(check_inverse_orthogonal(sym({{"1", "1"}, {"1", "-1"}})).passed());
  CHECK_THROWS_AS(check_inverse_orthogonal(sym({{"0", "1"}, {"1", "1"}})), Error);
}

TEST_CASE("check_conference examples") {
  const auto &cat = catalog();
  CHECK(check_conference(corrected_c6pq()).passed());
  const SymbolicMatrix c6c = cat.build_symbolic("C6c");
  CHECK(check_conference(c6c).passed());
  for (std::size_t i = 0; i < 6; ++i) CHECK(reciprocal_inner_product(c6c, i, i, true) == LaurentPoly::constant(GaussianInt(5)));

  const SymbolicMatrix bad = bordered_circulant(entries({"0", "1", "1", "1", "1"}));
  const VerificationResult r = check_conference(bad);
  CHECK_FALSE(r.passed());
  CHECK(oracle_conference_residual(oracle_matrix(bad, {})) > 1.0);

  CHECK(check_conference(sym({{"1", "1"}, {"1", "0"}})).describe() == "fail at (1,1): diagonal entry is not zero");
  CHECK(check_conference(sym({{"0", "0"}, {"1", "0"}})).describe() == "fail at (1,2): off-diagonal entry is zero");
}

TEST_CASE("the printed two-parameter conference matrix fails at rows 1,2") {
  // Row 2 of the transcription reads (1, 0, p, p, -q, -q); its reciprocal
  // inner product with row 1 does not vanish.
  const VerificationResult r = check_conference(catalog().build_symbolic("C6pq"));
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness()->row_pair);
  CHECK(r.witness()->row == 0);
  CHECK(r.witness()->col == 1);
  // Independent float check at a random point agrees that the identity fails.
  Rng rng(20);
  CHECK(oracle_conference_residual(oracle_matrix(catalog().build_symbolic("C6pq"), random_unit_assignment(rng))) > 1e-3);
}

TEST_CASE("catalog conference matrices pass exactly") {
  for (const char *name : kConference) {
    INFO(name);
    const SymbolicMatrix c = catalog().build_symbolic(name);
    CHECK(check_conference(c).passed());
    CHECK(check_conference(butson_of(c)).passed());
    CHECK(check_conference(butson_of(c).to_complex(), 1e-12).passed());
    CHECK(oracle_conference_residual(oracle_matrix(c, {})) < 1e-12);
  }
}

TEST_CASE("check_hadamard examples") {
  const auto &cat = catalog();
  // The doubled real Hadamard passes exactly; the printed H12b transcription
  // does not (see the catalog reconciliation tests).
  CHECK(check_hadamard(butson_of(double_hadamard(cat.build_symbolic("C6b")))).passed());
  CHECK_FALSE(check_hadamard(butson_of(cat.build_symbolic("H12b"))).passed());

  std::map<Symbol, double> ph;
  const double values[] = {0.3, 1.1, -0.7, 2.0, 0.5, -1.9};
  for (int k = 0; k < 6; ++k) ph[Symbol(static_cast<char>('a' + k))] = values[k];
  const ComplexMatrix d12c = eval_exponent_form(cat.build_symbolic("H12c"), std::get<ExponentMatrix>(cat.build("R12_6")), ph);
  const VerificationResult r = check_hadamard(d12c, 1e-10);
  CHECK(r.passed());
  CHECK(r.max_residual() < 1e-12);
  CHECK(oracle_hadamard_residual(to_rows(d12c)) < 1e-10);

  ButsonMatrix id(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) id.set(i, j, i == j ? 0 : ButsonMatrix::kZero);
  CHECK(check_hadamard(id).describe() == "fail at (1,2): entry is zero");
  CHECK_FALSE(check_hadamard(id.to_complex()).passed());
  CHECK_THROWS_AS(check_hadamard(id.to_complex(), 0.0), Error);
}

TEST_CASE("property: float and exact Hadamard checks agree on the catalog") {
  for (const char *name : kHadamard) {
    INFO(name);
    const ButsonMatrix b = butson_of(catalog().build_symbolic(name));
    const bool exact = check_hadamard(b).passed();
    CHECK(check_hadamard(b.to_complex(), 1e-10).passed() == exact);
    CHECK((oracle_hadamard_residual(to_rows(b)) < 1e-10) == exact);
    for (int m : {4, 8, 12}) CHECK(check_hadamard(b.lifted(m)).passed() == exact);
  }
}

TEST_CASE("property: symbolic identity at ones implies the evaluated matrix is Hadamard") {
  const auto &cat = catalog();
  for (const char *name : kOrthogonal) {
    for (const SymbolicMatrix &o : {cat.build_symbolic(name), cat.derive(name)}) {
      INFO(name);
      if (!check_inverse_orthogonal(o).passed()) continue;
      CHECK(check_hadamard(butson_of(at_ones(o))).passed());
    }
  }
}

TEST_CASE("property: symbolic and float inverse orthogonality agree at random points") {
  Rng rng(21);
  const auto &cat = catalog();
  for (const char *name : kOrthogonal) {
    for (const SymbolicMatrix &o : {cat.build_symbolic(name), cat.derive(name)}) {
      INFO(name);
      const bool exact = check_inverse_orthogonal(o).passed();
      for (int t = 0; t < 5; ++t) {
        const double res = oracle_inverse_orthogonal_residual(oracle_matrix(o, random_complex_assignment(rng)));
        if (exact) CHECK(res < 1e-8);
        else CHECK(res > 1e-6);
      }
    }
  }
}

TEST_CASE("property: conference check is invariant under unit monomial scalings") {
  Rng rng(22);
  std::vector<SymbolicMatrix> inputs{catalog().build_symbolic("C6pq"), corrected_c6pq(), bordered_circulant(entries({"0", "1", "1", "1", "1"}))};
  for (const char *name : kConference) inputs.push_back(catalog().build_symbolic(name));
  for (const auto &c : inputs) {
    const bool base = check_conference(c).passed();
    for (int t = 0; t < 20; ++t) {
      const SymbolicMatrix s = scale_rows(scale_columns(c, random_unit_diagonal(rng, 6)), random_unit_diagonal(rng, 6));
      CHECK(check_conference(s).passed() == base);
    }
  }
}

TEST_CASE("property: random unimodular perturbations are caught") {
  Rng rng(23);
  const ButsonMatrix h = butson_of(catalog().build_symbolic("H12f"));
  for (int t = 0; t < 50; ++t) {
    ButsonMatrix m = h;
    const std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, 11)), j = static_cast<std::size_t>(uniform_int(rng, 0, 11));
    m.set(i, j, m.exponent(i, j) + uniform_int(rng, 1, 3));
    const VerificationResult r = check_hadamard(m);
    REQUIRE_FALSE(r.passed());
    CHECK(r.witness()->row_pair);
    CHECK((r.witness()->row == i || r.witness()->col == i));
    CHECK_FALSE(check_hadamard(m.to_complex()).passed());
  }
}
