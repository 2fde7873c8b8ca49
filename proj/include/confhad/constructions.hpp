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

// Matrix constructions: circulants, reciprocal inverses, the two doubling
// formulas, diagonal scalings, dephasing and exponent-form evaluation.

#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "confhad/evaluate.hpp"
#include "confhad/matrix.hpp"

namespace confhad {

namespace detail {

inline std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

inline void require_conference_shape(const SymbolicMatrix &c, const char *op) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j && !c(i, j).is_zero())
        throw Error(std::string(op) + ": diagonal entry " + cell_name(i, j) + " is not zero");
      if (i != j && c(i, j).is_zero())
        throw Error(std::string(op) + ": off-diagonal entry " + cell_name(i, j) + " is zero");
    }
  }
}

}  // namespace detail

/// result(i, j) = first_row[(j - i) mod n]
inline SymbolicMatrix circulant(std::span<const Entry> first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw Error("circulant: empty first row");
  SymbolicMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = first_row[(j + n - i) % n];
  return out;
}

/// Circulant core framed by a first row and column of ones, with a zero corner.
inline SymbolicMatrix bordered_circulant(std::span<const Entry> core_row) {
  if (core_row.empty()) throw Error("bordered_circulant: empty core row");
  if (!core_row[0].is_zero()) throw Error("bordered_circulant: core row must start with 0");
  const SymbolicMatrix core = circulant(core_row);
  const std::size_t n = core.size() + 1;
  SymbolicMatrix out(n, Entry::one());
  out(0, 0) = Entry::zero();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) out(i, j) = core(i - 1, j - 1);
  return out;
}

/// (1/a_ji): the inverse of an inverse orthogonal matrix, up to the factor n.
inline SymbolicMatrix reciprocal_transpose(const SymbolicMatrix &a) {
  SymbolicMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(j, i).is_zero()) throw Error("reciprocal_transpose: zero entry at " + detail::cell_name(j, i));
      out(i, j) = a(j, i).reciprocal();
    }
  }
  return out;
}

/// (1/(C + I) - I)^t for a matrix with zero diagonal and nonzero off-diagonal.
inline SymbolicMatrix conference_inverse(const SymbolicMatrix &c) {
  detail::require_conference_shape(c, "conference_inverse");
  SymbolicMatrix out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (i != j) out(i, j) = c(j, i).reciprocal();
  return out;
}

/// [[C + I, C' - I], [C - I, -C' - I]] with C' = conference_inverse(C).
inline SymbolicMatrix double_orthogonal(const SymbolicMatrix &c) {
  detail::require_conference_shape(c, "double_orthogonal");
  const std::size_t n = c.size();
  const SymbolicMatrix inv = conference_inverse(c);
  SymbolicMatrix out(2 * n);
  const Entry one = Entry::one();
  const Entry minus_one = -one;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = one;
        out(i, j + n) = minus_one;
        out(i + n, j) = minus_one;
        out(i + n, j + n) = minus_one;
      } else {
        out(i, j) = c(i, j);
        out(i, j + n) = inv(i, j);
        out(i + n, j) = c(i, j);
        out(i + n, j + n) = -inv(i, j);
      }
    }
  }
  return out;
}

/// Hadamard doubling for constant unimodular C. For such C the Hermitian
/// conjugate equals conference_inverse(C), so this is double_orthogonal
/// restricted to parameter-free input.
inline SymbolicMatrix double_hadamard(const SymbolicMatrix &c) {
  if (!is_constant(c)) throw Error("double_hadamard: matrix has free parameters; use double_orthogonal");
  return double_orthogonal(c);
}

inline SymbolicMatrix scale_columns(const SymbolicMatrix &a, std::span<const Entry> d) {
  if (d.size() != a.size()) throw Error("scale_columns: expected " + std::to_string(a.size()) + " factors");
  for (const auto &x : d)
    if (x.is_zero()) throw Error("scale_columns: zero scale factor");
  SymbolicMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) * d[j];
  return out;
}

inline SymbolicMatrix scale_rows(const SymbolicMatrix &a, std::span<const Entry> d) {
  if (d.size() != a.size()) throw Error("scale_rows: expected " + std::to_string(a.size()) + " factors");
  for (const auto &x : d)
    if (x.is_zero()) throw Error("scale_rows: zero scale factor");
  SymbolicMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = d[i] * a(i, j);
  return out;
}

/// result(i, j) = M(i, j) M(0, 0) / (M(i, 0) M(0, j))
inline SymbolicMatrix dephase(const SymbolicMatrix &m) {
  for (std::size_t k = 0; k < m.cells().size(); ++k)
    if (m.cells()[k].is_zero())
      throw Error("dephase: zero entry at " + detail::cell_name(k / m.size(), k % m.size()));
  SymbolicMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out(i, j) = m(i, j) * m(0, 0) * m(i, 0).reciprocal() * m(0, j).reciprocal();
  out.set_label(m.label());
  return out;
}

inline ComplexMatrix dephase(const ComplexMatrix &m) {
  ComplexMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, 0) == 0.0 || m(0, j) == 0.0) throw Error("dephase: zero entry in first row or column");
      out(i, j) = m(i, j) * m(0, 0) / (m(i, 0) * m(0, j));
    }
  }
  out.set_label(m.label());
  return out;
}

inline ButsonMatrix dephase(const ButsonMatrix &m) {
  if (m.has_zero()) throw Error("dephase: matrix has zero entries");
  ButsonMatrix out(m.size(), m.order());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out.set(i, j, m.exponent(i, j) + m.exponent(0, 0) - m.exponent(i, 0) - m.exponent(0, j));
  out.set_label(m.label());
  return out;
}

inline SymbolicMatrix substitute(const SymbolicMatrix &a, const std::map<Symbol, Monomial> &values) {
  return a.map([&](const Entry &e) { return e.substitute(values); });
}

/// H o EXP(i R) as a symbolic matrix whose parameters are unit-circle values
/// (phase x becomes the symbol x standing for exp(i x)).
inline SymbolicMatrix exp_form(const SymbolicMatrix &h, const ExponentMatrix &r) {
  if (h.size() != r.size()) throw Error("exp_form: dimension mismatch");
  SymbolicMatrix out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      out(i, j) = r(i, j).is_bullet() ? h(i, j) : h(i, j) * Entry(r(i, j).as_monomial());
  return out;
}

/// Numeric H o EXP(i R(phases)) for constant H.
inline ComplexMatrix eval_exponent_form(const SymbolicMatrix &h, const ExponentMatrix &r,
                                        const std::map<Symbol, double> &phases) {
  if (h.size() != r.size()) throw Error("eval_exponent_form: dimension mismatch");
  if (!is_constant(h)) throw Error("eval_exponent_form: base matrix has free parameters");
  ComplexMatrix out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      const std::complex<double> base = entry_eval(h(i, j), ComplexAssignment{});
      out(i, j) = r(i, j).is_bullet() ? base : base * std::polar(1.0, r(i, j).evaluate(phases));
    }
  }
  return out;
}

inline ComplexMatrix evaluate(const SymbolicMatrix &a, const ComplexAssignment &values) {
  ComplexMatrix out = a.map([&](const Entry &e) { return entry_eval(e, values); });
  return out;
}

/// Exact evaluation at roots of unity of order m; every entry must come out
/// as zero or an m-th root of unity.
inline ButsonMatrix evaluate_butson(const SymbolicMatrix &a, const ExactAssignment &values, int m) {
  ButsonMatrix out(a.size(), m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).is_zero()) {
        out.set(i, j, ButsonMatrix::kZero);
        continue;
      }
      const CycValue v = monomial_eval(a(i, j).monomial(), values, m);
      const auto k = v.root_exponent();
      if (!k) throw Error("entry " + detail::cell_name(i, j) + " does not evaluate to a root of unity");
      out.set(i, j, *k);
    }
  }
  out.set_label(a.label());
  return out;
}

}  // namespace confhad
