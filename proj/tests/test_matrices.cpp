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

SymbolicMatrix core_of(const SymbolicMatrix &m) {
  SymbolicMatrix out(m.size() - 1);
  for (std::size_t i = 1; i < m.size(); ++i)
    for (std::size_t j = 1; j < m.size(); ++j) out(i - 1, j - 1) = m(i, j);
  return out;
}

std::vector<Entry> abcdef() { return entries({"a", "b", "c", "d", "e", "f"}); }

}  // namespace

TEST_CASE("circulant examples") {
  const auto &cat = catalog();
  CHECK(circulant(entries({"0", "1", "-1", "-1", "1"})) == core_of(cat.build_symbolic("C6c")));
  CHECK(circulant(entries({"0", "1", "i", "-i", "-1"})) == core_of(cat.build_symbolic("C6f")));
  const SymbolicMatrix one = circulant(entries({"a"}));
  REQUIRE(one.size() == 1);
  CHECK(one(0, 0) == parse_entry("a"));
  CHECK_THROWS_AS(circulant(std::vector<Entry>{}), Error);
}

TEST_CASE("property: circulant rows are right shifts") {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 9));
    std::vector<Entry> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(uniform_int(rng, 0, 4) == 0 ? Entry::zero() : Entry(random_monomial(rng)));
    const SymbolicMatrix c = circulant(row);
    for (std::size_t j = 0; j < n; ++j) CHECK(c(0, j) == row[j]);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(c(i, j) == c(i - 1, (j + n - 1) % n));
  }
}

TEST_CASE("bordered_circulant examples") {
  const auto &cat = catalog();
  CHECK(bordered_circulant(entries({"0", "1", "-1", "-1", "1"})) == cat.build_symbolic("C6c"));
  CHECK(bordered_circulant(entries({"0", "1", "i", "-i", "-1"})) == cat.build_symbolic("C6f"));
  CHECK(bordered_circulant(entries({"0"})) == sym({{"0", "1"}, {"1", "0"}}));
  CHECK_THROWS_AS(bordered_circulant(entries({"1", "0"})), Error);
}

TEST_CASE("reciprocal_transpose examples") {
  const SymbolicMatrix ones = sym({{"1", "1"}, {"1", "1"}});
  CHECK(reciprocal_transpose(ones) == ones);
  CHECK(reciprocal_transpose(sym({{"1", "a"}, {"-a", "1"}})) == sym({{"1", "-a^-1"}, {"a^-1", "1"}}));
  CHECK_THROWS_AS(reciprocal_transpose(sym({{"0", "1"}, {"1", "1"}})), Error);

  // O12a times its reciprocal transpose is 12 I at a random complex point.
  Rng rng(11);
  const SymbolicMatrix o = catalog().build_symbolic("O12a");
  const auto at = random_complex_assignment(rng);
  const auto a = oracle_matrix(o, at), r = oracle_matrix(reciprocal_transpose(o), at);
  double worst = 0;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      cplx s = 0;
      for (std::size_t k = 0; k < 12; ++k) s += a[i][k] * r[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? 12.0 : 0.0)));
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("conference_inverse examples") {
  const auto &cat = catalog();
  CHECK(conference_inverse(cat.build_symbolic("C6a")) == cat.build_symbolic("C6a"));
  const SymbolicMatrix inv = conference_inverse(cat.build_symbolic("C6pq"));
  CHECK(inv(1, 2) == parse_entry("p^-1"));     // row 2, column 3
  CHECK(inv(2, 4) == parse_entry("p^-1*q^-1"));  // row 3, column 5: 1 / (p q)
  CHECK(inv(4, 2) == parse_entry("q*p^-1"));     // row 5, column 3: 1 / (p / q)
  const SymbolicMatrix swap = sym({{"0", "1"}, {"1", "0"}});
  CHECK(conference_inverse(swap) == swap);
  CHECK_THROWS_AS(conference_inverse(sym({{"1", "1"}, {"1", "0"}})), Error);
  CHECK_THROWS_AS(conference_inverse(sym({{"0", "0"}, {"1", "0"}})), Error);
}

TEST_CASE("double_hadamard on the 2x2 conference matrix") {
  const SymbolicMatrix h = double_hadamard(sym({{"0", "1"}, {"1", "0"}}));
  // Block formula [[C+I, C*-I], [C-I, -C*-I]].
  CHECK(h == sym({{"1", "1", "-1", "1"}, {"1", "1", "1", "-1"}, {"-1", "1", "-1", "-1"}, {"1", "-1", "-1", "-1"}}));
  // The same rows as the commonly quoted form, up to row order.
  const SymbolicMatrix quoted =
      sym({{"1", "1", "1", "-1"}, {"1", "1", "-1", "1"}, {"1", "-1", "-1", "-1"}, {"-1", "1", "-1", "-1"}});
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < 4; ++i) {
    std::string ra, rb;
    for (std::size_t j = 0; j < 4; ++j) {
      ra += h(i, j).to_string() + " ";
      rb += quoted(i, j).to_string() + " ";
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(check_hadamard(butson_of(h)).passed());
  CHECK(oracle_hadamard_residual(oracle_matrix(h, {})) < 1e-12);
}

TEST_CASE("double_hadamard of catalog conference matrices") {
  const auto &cat = catalog();
  const ButsonMatrix ha = butson_of(double_hadamard(cat.build_symbolic("C6a")));
  CHECK(check_hadamard(ha).passed());
  CHECK(are_equivalent(ha, butson_of(cat.build_symbolic("H12a"))).equivalent());
  const ButsonMatrix hf = butson_of(double_hadamard(cat.build_symbolic("C6f")));
  CHECK(check_hadamard(hf).passed());
  CHECK(are_equivalent(hf, butson_of(cat.build_symbolic("H12f"))).equivalent());
  CHECK_THROWS_AS(double_hadamard(cat.build_symbolic("C6pq")), Error);
}

TEST_CASE("double_orthogonal examples") {
  const auto &cat = catalog();
  const SymbolicMatrix o = double_orthogonal(scale_columns(cat.build_symbolic("C6a"), abcdef()));
  CHECK(check_inverse_orthogonal(o).passed());
  CHECK(are_equivalent(butson_of(at_ones(dephase(o))), butson_of(at_ones(cat.build_symbolic("O12a")))).equivalent());

  const SymbolicMatrix h = cat.derive("O12h");
  CHECK(free_symbols(h).size() == 7);
  CHECK(free_symbols(double_orthogonal(scale_columns(cat.build_symbolic("C6pq"), abcdef()))).size() == 8);

  const SymbolicMatrix swap = sym({{"0", "1"}, {"1", "0"}});
  CHECK(double_orthogonal(swap) == double_hadamard(swap));
  CHECK_THROWS_AS(double_orthogonal(sym({{"1", "1"}, {"1", "0"}})), Error);
}

TEST_CASE("property: double_hadamard equals double_orthogonal for constant input") {
  for (const char *name : {"C6a", "C6b", "C6c", "C6d", "C6e", "C6f", "C6g"}) {
    const SymbolicMatrix c = catalog().build_symbolic(name);
    CHECK(double_hadamard(c) == double_orthogonal(c));
  }
}

TEST_CASE("scale_columns and scale_rows examples") {
  const auto &cat = catalog();
  const SymbolicMatrix c6a = cat.build_symbolic("C6a");
  CHECK(scale_columns(c6a, entries({"1", "1", "1", "1", "1", "1"})) == c6a);
  CHECK(check_conference(scale_columns(c6a, abcdef())).passed());
  const SymbolicMatrix swap = sym({{"0", "1"}, {"1", "0"}});
  CHECK(scale_columns(swap, entries({"a", "b"})) == sym({{"0", "b"}, {"a", "0"}}));
  CHECK(scale_rows(swap, entries({"a", "b"})) == sym({{"0", "a"}, {"b", "0"}}));
  CHECK_THROWS_AS(scale_columns(swap, entries({"a", "0"})), Error);
  CHECK_THROWS_AS(scale_rows(swap, entries({"a"})), Error);
}

TEST_CASE("property: scalings preserve the identities") {
  Rng rng(12);
  const auto &cat = catalog();
  for (const char *name : {"C6pq", "C6a", "C6b", "C6c", "C6d", "C6e", "C6f", "C6g"}) {
    const SymbolicMatrix c = cat.build_symbolic(name);
    const bool base = check_conference(c).passed();
    for (int t = 0; t < 10; ++t) {
      CHECK(check_conference(scale_columns(c, random_unit_diagonal(rng, 6))).passed() == base);
      CHECK(check_conference(scale_rows(c, random_unit_diagonal(rng, 6))).passed() == base);
    }
  }
  for (const char *name : {"O12a", "O12b", "O12c", "O12d", "O12e", "O12f", "O12g", "O12h"}) {
    const SymbolicMatrix o = cat.build_symbolic(name);
    const bool base = check_inverse_orthogonal(o).passed();
    for (int t = 0; t < 3; ++t) {
      CHECK(check_inverse_orthogonal(scale_columns(o, random_unit_diagonal(rng, 12))).passed() == base);
      CHECK(check_inverse_orthogonal(scale_rows(o, random_unit_diagonal(rng, 12))).passed() == base);
    }
  }
}

TEST_CASE("property: doubling a verified conference matrix gives an inverse orthogonal matrix") {
  Rng rng(13);
  std::vector<SymbolicMatrix> inputs{sym({{"0", "1"}, {"1", "0"}})};
  for (const char *name : {"C6a", "C6b", "C6c", "C6d", "C6e", "C6f", "C6g"}) inputs.push_back(catalog().build_symbolic(name));
  inputs.push_back(corrected_c6pq());
  for (const auto &c : inputs) {
    REQUIRE(check_conference(c).passed());
    for (int t = 0; t < 5; ++t) {
      const SymbolicMatrix o = double_orthogonal(scale_columns(c, random_unit_diagonal(rng, c.size())));
      CHECK(check_inverse_orthogonal(o).passed());
    }
  }
}

TEST_CASE("dephase examples and properties") {
  const auto &cat = catalog();
  CHECK(dephase(cat.build_symbolic("O12a")) == cat.build_symbolic("O12a"));
  CHECK(dephase(sym({{"a", "a"}, {"a", "-a"}})) == sym({{"1", "1"}, {"1", "-1"}}));
  CHECK_THROWS_AS(dephase(sym({{"0", "1"}, {"1", "1"}})), Error);
  for (const char *name : {"O12a", "O12b", "O12c", "O12d", "O12e", "O12f", "O12g", "O12h"}) {
    for (const SymbolicMatrix &o : {cat.build_symbolic(name), double_orthogonal(scale_columns(cat.build_symbolic("C6c"), abcdef()))}) {
      const SymbolicMatrix d = dephase(o);
      CHECK(dephase(d) == d);
      CHECK(check_inverse_orthogonal(d).passed() == check_inverse_orthogonal(o).passed());
      for (std::size_t k = 0; k < 12; ++k) {
        CHECK(d(0, k) == Entry::one());
        CHECK(d(k, 0) == Entry::one());
      }
    }
  }
  const ButsonMatrix b = butson_of(cat.build_symbolic("H12f"));
  CHECK(dephase(dephase(b)) == dephase(b));
  const ComplexMatrix z = b.to_complex();
  CHECK(max_abs_diff(to_rows(dephase(z)), to_rows(dephase(b).to_complex())) < 1e-12);
}

TEST_CASE("eval_exponent_form examples") {
  const auto &cat = catalog();
  const SymbolicMatrix h12a = cat.build_symbolic("H12a");
  const ExponentMatrix r6 = std::get<ExponentMatrix>(cat.build("R12_6"));
  const ExponentMatrix r7 = std::get<ExponentMatrix>(cat.build("R12_7"));
  std::map<Symbol, double> zero;
  for (char c : std::string("abcdefg")) zero[Symbol(c)] = 0.0;
  CHECK(max_abs_diff(to_rows(eval_exponent_form(h12a, r6, zero)), oracle_matrix(h12a, {})) == 0.0);

  Rng rng(14);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int t = 0; t < 20; ++t) {
    std::map<Symbol, double> ph;
    for (char c : std::string("abcdef")) ph[Symbol(c)] = angle(rng);
    const ComplexMatrix m = eval_exponent_form(h12a, r6, ph);
    CHECK(oracle_hadamard_residual(to_rows(m)) < 1e-10);
    // g = 0 in the seven-parameter phases reproduces the six-parameter family.
    ph[Symbol('g')] = 0.0;
    CHECK(max_abs_diff(to_rows(eval_exponent_form(h12a, r7, ph)), to_rows(m)) < 1e-12);
  }

  CHECK_THROWS_AS(eval_exponent_form(cat.build_symbolic("C6a"), r6, zero), Error);
  CHECK_THROWS_AS(eval_exponent_form(h12a, r6, {{Symbol('a'), 0.0}}), Error);
  CHECK_THROWS_AS(eval_exponent_form(cat.build_symbolic("O12a"), r6, zero), Error);
}

TEST_CASE("exp_form agrees with eval_exponent_form on the unit circle") {
  Rng rng(15);
  const auto &cat = catalog();
  const SymbolicMatrix h = cat.build_symbolic("H12f");
  const ExponentMatrix r = std::get<ExponentMatrix>(cat.build("R12_6"));
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::map<Symbol, double> ph;
  ComplexAssignment unit;
  for (char c : std::string("abcdef")) {
    ph[Symbol(c)] = angle(rng);
    unit[Symbol(c)] = std::polar(1.0, ph[Symbol(c)]);
  }
  CHECK(max_abs_diff(oracle_matrix(exp_form(h, r), unit), to_rows(eval_exponent_form(h, r, ph))) < 1e-12);
}

TEST_CASE("Butson conversions") {
  const SymbolicMatrix c = catalog().build_symbolic("C6f");
  CHECK(ButsonMatrix::natural_order(c) == 4);
  CHECK(ButsonMatrix::natural_order(catalog().build_symbolic("C6a")) == 2);
  CHECK(ButsonMatrix::natural_order(sym({{"1"}})) == 1);
  const ButsonMatrix b = ButsonMatrix::from_symbolic(c, 4);
  CHECK(b.to_symbolic() == c);
  CHECK(b.lifted(12).lifted(12) == b.lifted(12));
  CHECK_THROWS_AS(ButsonMatrix::from_symbolic(c, 2), Error);
  CHECK_THROWS_AS(b.lifted(6), Error);
  CHECK_THROWS_AS(ButsonMatrix::from_symbolic(catalog().build_symbolic("O12a"), 4), Error);
  CHECK_THROWS_AS(ButsonMatrix(2, 0), Error);
  const auto [x, y] = lift_to_common_order(ButsonMatrix(2, 4), ButsonMatrix(2, 6));
  CHECK(x.order() == 12);
  CHECK(y.order() == 12);
  CHECK_THROWS_AS(SymbolicMatrix::from_rows({{Entry::one(), Entry::one()}, {Entry::one()}}), Error);
}
