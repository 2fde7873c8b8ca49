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

// Generators and floating point oracles shared by the tests. The oracles do
// not use the library's exact arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "confhad.hpp"

#ifndef CONFHAD_TEST_CATALOG_DIR
#define CONFHAD_TEST_CATALOG_DIR "catalog"
#endif

namespace confhad::test {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

inline const Catalog &catalog() {
  static const Catalog cat = Catalog::load(CONFHAD_TEST_CATALOG_DIR);
  return cat;
}

inline int uniform_int(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Monomial random_monomial(Rng &rng, const std::string &letters = "abcdefg", int max_exp = 3) {
  Monomial m = Monomial::unit(uniform_int(rng, 0, 3));
  const int factors = uniform_int(rng, 0, 3);
  for (int k = 0; k < factors; ++k) {
    const char c = letters[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(letters.size()) - 1))];
    int e = uniform_int(rng, -max_exp, max_exp);
    if (e == 0) e = 1;
    m *= Monomial::symbol(c, e);
  }
  return m;
}

inline std::vector<Entry> random_unit_diagonal(Rng &rng, std::size_t n, const std::string &letters = "abcdefg") {
  std::vector<Entry> d;
  for (std::size_t k = 0; k < n; ++k) d.emplace_back(random_monomial(rng, letters, 2));
  return d;
}

inline LaurentPoly random_poly(Rng &rng, int terms = 4) {
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) {
    Monomial m = random_monomial(rng, "abc", 2);
    const int scale = uniform_int(rng, 1, 3);
    for (int s = 0; s < scale; ++s) p.add(m);
  }
  return p;
}

/// Symbols -> random points on the unit circle.
inline ComplexAssignment random_unit_assignment(Rng &rng, const std::string &letters = "abcdefgpq") {
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  ComplexAssignment a;
  for (char c : letters) a[Symbol(c)] = std::polar(1.0, angle(rng));
  return a;
}

/// Symbols -> random nonzero complex values off the unit circle.
inline ComplexAssignment random_complex_assignment(Rng &rng, const std::string &letters = "abcdefgpq") {
  std::uniform_real_distribution<double> r(0.5, 2.0), angle(-3.14159, 3.14159);
  ComplexAssignment a;
  for (char c : letters) a[Symbol(c)] = std::polar(r(rng), angle(rng));
  return a;
}

/// Independent monomial evaluation by repeated multiplication.
inline cplx oracle_eval(const Monomial &m, const ComplexAssignment &values) {
  static const cplx units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx v = units[m.coeff().ipow()];
  for (const auto &[s, e] : m.exponents().terms()) {
    const cplx x = values.at(s);
    for (int k = 0; k < std::abs(e); ++k) v = e > 0 ? v * x : v / x;
  }
  return v;
}

inline std::vector<std::vector<cplx>> oracle_matrix(const SymbolicMatrix &a, const ComplexAssignment &values) {
  std::vector<std::vector<cplx>> out(a.size(), std::vector<cplx>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      out[i][j] = a(i, j).is_zero() ? cplx{} : oracle_eval(a(i, j).monomial(), values);
  return out;
}

/// max |A (1/A)^t - n I| at a numeric point; A has no zeros.
inline double oracle_inverse_orthogonal_residual(const std::vector<std::vector<cplx>> &a) {
  const std::size_t n = a.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] / a[j][k];
      if (i == j) s -= static_cast<double>(n);
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

/// max over row pairs of |sum_{k not in {i,j}} C_ik / C_jk - (n-1) delta_ij|.
inline double oracle_conference_residual(const std::vector<std::vector<cplx>> &c) {
  const std::size_t n = c.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) s += c[i][k] / c[j][k];
      if (i == j) s -= static_cast<double>(n - 1);
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

/// max |M M* - n I| computed in floating point.
inline double oracle_hadamard_residual(const std::vector<std::vector<cplx>> &m) {
  const std::size_t n = m.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0;
      for (std::size_t k = 0; k < n; ++k) s += m[i][k] * std::conj(m[j][k]);
      if (i == j) s -= static_cast<double>(n);
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

inline std::vector<std::vector<cplx>> to_rows(const ComplexMatrix &m) {
  std::vector<std::vector<cplx>> out(m.size(), std::vector<cplx>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

inline std::vector<std::vector<cplx>> to_rows(const ButsonMatrix &m) {
  std::vector<std::vector<cplx>> out(m.size(), std::vector<cplx>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i][j] = m.is_zero(i, j) ? cplx{} : std::polar(1.0, 2 * M_PI * m.exponent(i, j) / m.order());
  return out;
}

/// Haagerup multiset in floating point, with phases rounded to multiples of
/// 2 pi / m and printed as "k/m" keys, for comparing against the exact one.
inline std::map<std::pair<long, long>, long> oracle_haagerup(const std::vector<std::vector<cplx>> &h, int m,
                                                               bool skip_zeros) {
  std::map<std::pair<long, long>, long> out;
  // All ordered row pairs i != k and column pairs j != l; each unordered
  // quadruple then appears twice as q and twice as conj(q).
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          if (i == k || j == l) continue;
          const cplx q = h[i][j] * h[k][l] * std::conj(h[i][l]) * std::conj(h[k][j]);
          if (std::abs(q) < 0.5) {
            if (!skip_zeros) throw std::runtime_error("zero quadruple");
            continue;
          }
          long step = std::lround(std::arg(q) / (2 * M_PI) * m);
          step = ((step % m) + m) % m;
          const long g = std::gcd(step, static_cast<long>(m));
          out[{step / g, step == 0 ? 1 : m / g}]++;
        }
  for (auto &kv : out) kv.second /= 2;
  return out;
}

inline MonomialTransform random_transform(Rng &rng, std::size_t n, int order) {
  MonomialTransform t = MonomialTransform::identity(n);
  std::shuffle(t.row_perm.begin(), t.row_perm.end(), rng);
  std::shuffle(t.col_perm.begin(), t.col_perm.end(), rng);
  for (auto &p : t.row_phase) p = uniform_int(rng, 0, order - 1);
  for (auto &p : t.col_phase) p = uniform_int(rng, 0, order - 1);
  return t;
}

/// Independent application of a monomial transform in floating point.
inline std::vector<std::vector<cplx>> oracle_apply(const MonomialTransform &t, const std::vector<std::vector<cplx>> &m,
                                                   int order) {
  const std::size_t n = m.size();
  std::vector<std::vector<cplx>> out(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = std::polar(1.0, 2 * M_PI * (t.row_phase[i] + t.col_phase[j]) / order) * m[t.row_perm[i]][t.col_perm[j]];
  return out;
}

inline double max_abs_diff(const std::vector<std::vector<cplx>> &a, const std::vector<std::vector<cplx>> &b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

inline std::vector<Entry> entries(std::initializer_list<const char *> cells) {
  std::vector<Entry> out;
  for (const char *c : cells) out.push_back(parse_entry(c));
  return out;
}

inline SymbolicMatrix sym(std::initializer_list<std::initializer_list<const char *>> rows) {
  std::vector<std::vector<Entry>> r;
  for (auto row : rows) r.push_back(entries(row));
  return SymbolicMatrix::from_rows(r);
}

/// The printed two-parameter family with row 2 read as (1, 0, p, p, -p, -p).
/// Used only to show that the identity holds once that cell is corrected.
inline SymbolicMatrix corrected_c6pq() {
  SymbolicMatrix m = catalog().build_symbolic("C6pq");
  m(1, 4) = parse_entry("-p");
  m(1, 5) = parse_entry("-p");
  return m;
}

}  // namespace confhad::test
