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

// Defining identities: A (1/A)^t = n I proven symbolically, the conference
// identity, and Hadamard checks (exact for Butson matrices, toleranced for
// floating point).

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "confhad/constructions.hpp"
#include "confhad/cyclotomic.hpp"
#include "confhad/laurent_poly.hpp"
#include "confhad/matrix.hpp"

namespace confhad {

/// Failing cell (0-based) and what went wrong there.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
  std::optional<LaurentPoly> sum;  // symbolic inner product, when applicable
  double residual = 0.0;           // numeric residual, when applicable
  bool row_pair = false;           // (row, col) names two rows whose inner product failed
};

class VerificationResult {
 public:
  static VerificationResult pass(double max_residual = 0.0) {
    VerificationResult r;
    r.max_residual_ = max_residual;
    return r;
  }
  static VerificationResult fail(Witness w) {
    VerificationResult r;
    r.residual_from(w);
    r.witness_ = std::move(w);
    return r;
  }

  bool passed() const { return !witness_.has_value(); }
  explicit operator bool() const { return passed(); }
  const std::optional<Witness> &witness() const { return witness_; }
  /// Largest numeric residual seen (floating point checks only).
  double max_residual() const { return max_residual_; }

  /// One line; cells are reported 1-based.
  std::string describe() const {
    if (passed()) return "pass";
    const Witness &w = *witness_;
    const std::string where = w.row_pair ? "rows " + std::to_string(w.row + 1) + "," + std::to_string(w.col + 1)
                                         : "(" + std::to_string(w.row + 1) + "," + std::to_string(w.col + 1) + ")";
    return "fail at " + where + ": " + w.detail;
  }

 private:
  void residual_from(const Witness &w) { max_residual_ = w.residual; }

  std::optional<Witness> witness_;
  double max_residual_ = 0.0;
};

/// sum_k a(i, k) / a(j, k), skipping k in {i, j} when `skip_ij` is set.
inline LaurentPoly reciprocal_inner_product(const SymbolicMatrix &a, std::size_t i, std::size_t j,
                                            bool skip_ij = false) {
  LaurentPoly sum;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (skip_ij && (k == i || k == j)) continue;
    sum.add(a(i, k).monomial() * a(j, k).monomial().reciprocal());
  }
  return sum;
}

/// A (1/A)^t == n I as an identity of Laurent polynomials.
inline VerificationResult check_inverse_orthogonal(const SymbolicMatrix &a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < a.cells().size(); ++k)
    if (a.cells()[k].is_zero())
      throw Error("check_inverse_orthogonal: zero entry at " + detail::cell_name(k / n, k % n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      LaurentPoly sum = reciprocal_inner_product(a, i, j);
      const GaussianInt expected = i == j ? GaussianInt(static_cast<std::int64_t>(n)) : GaussianInt(0);
      if (sum != LaurentPoly::constant(expected))
        return VerificationResult::fail(
            {i, j, "inner product " + sum.to_string() + ", expected " + expected.to_string(), sum, 0.0, true});
    }
  }
  return VerificationResult::pass();
}

/// Zero diagonal, nonzero off-diagonal, and
/// sum_{k not in {i,j}} C(i,k) / C(j,k) == (n-1) delta_ij.
inline VerificationResult check_conference(const SymbolicMatrix &c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !c(i, j).is_zero()) return VerificationResult::fail({i, j, "diagonal entry is not zero", {}, 0.0});
      if (i != j && c(i, j).is_zero()) return VerificationResult::fail({i, j, "off-diagonal entry is zero", {}, 0.0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      LaurentPoly sum = reciprocal_inner_product(c, i, j, true);
      const GaussianInt expected = i == j ? GaussianInt(static_cast<std::int64_t>(n) - 1) : GaussianInt(0);
      if (sum != LaurentPoly::constant(expected))
        return VerificationResult::fail(
            {i, j, "inner product " + sum.to_string() + ", expected " + expected.to_string(), sum, 0.0, true});
    }
  }
  return VerificationResult::pass();
}

namespace detail {

/// sum_k zeta^(e(i,k) - e(j,k)) over k with both entries nonzero (and k not in
/// {i,j} when skip_ij), in exact arithmetic.
inline CycValue butson_inner_product(const ButsonMatrix &m, std::size_t i, std::size_t j, bool skip_ij,
                                     std::vector<std::int64_t> &counts) {
  const int order = m.order();
  counts.assign(static_cast<std::size_t>(order), 0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (skip_ij && (k == i || k == j)) continue;
    if (m.is_zero(i, k) || m.is_zero(j, k)) continue;
    ++counts[static_cast<std::size_t>(CycValue::mod(m.exponent(i, k) - m.exponent(j, k), order))];
  }
  return CycValue::from_root_counts(order, counts);
}

}  // namespace detail

/// Exact: no zero entries and M M* == n I in Z[zeta_m].
inline VerificationResult check_hadamard(const ButsonMatrix &m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.is_zero(i, j)) return VerificationResult::fail({i, j, "entry is zero", {}, 1.0});
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      CycValue sum = detail::butson_inner_product(m, i, j, false, counts);
      const auto expected = CycValue::integer(m.order(), i == j ? static_cast<std::int64_t>(n) : 0);
      if (sum != expected)
        return VerificationResult::fail({i, j, "inner product " + sum.to_string() + ", expected " + expected.to_string(),
                                         {}, std::abs(sum.to_complex() - expected.to_complex()), true});
    }
  }
  return VerificationResult::pass();
}

/// Exact conference identity for matrices of roots of unity and zeros. Stops
/// at the first failing row pair.
inline VerificationResult check_conference(const ButsonMatrix &m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !m.is_zero(i, j)) return VerificationResult::fail({i, j, "diagonal entry is not zero", {}, 1.0});
      if (i != j && m.is_zero(i, j)) return VerificationResult::fail({i, j, "off-diagonal entry is zero", {}, 1.0});
    }
  }
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      CycValue sum = detail::butson_inner_product(m, i, j, true, counts);
      if (!sum.is_zero())
        return VerificationResult::fail(
            {i, j, "inner product " + sum.to_string() + ", expected 0", {}, std::abs(sum.to_complex()), true});
    }
  }
  return VerificationResult::pass();
}

/// Floating point: |m_ij| = 1 and max |(M M*)_ij - n delta_ij| <= tol.
inline VerificationResult check_hadamard(const ComplexMatrix &m, double tol = 1e-10) {
  if (!(tol > 0.0)) throw Error("check_hadamard: tolerance must be positive");
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dev = std::abs(std::abs(m(i, j)) - 1.0);
      if (dev > tol) return VerificationResult::fail({i, j, "entry modulus deviates from 1 by " + std::to_string(dev), {}, dev});
    }
  }
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) sum += m(i, k) * std::conj(m(j, k));
      if (i == j) sum -= static_cast<double>(n);
      const double r = std::abs(sum);
      if (r > worst) {
        worst = r;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", worst);
    return VerificationResult::fail({wi, wj, std::string("residual ") + buf + " exceeds tolerance", {}, worst, true});
  }
  return VerificationResult::pass(worst);
}

/// Floating point conference check: |diagonal| <= tol, off-diagonal moduli 1,
/// and max |(C C*)_ij - (n-1) delta_ij| <= tol.
inline VerificationResult check_conference(const ComplexMatrix &c, double tol) {
  if (!(tol > 0.0)) throw Error("check_conference: tolerance must be positive");
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dev = i == j ? std::abs(c(i, j)) : std::abs(std::abs(c(i, j)) - 1.0);
      if (dev > tol)
        return VerificationResult::fail(
            {i, j, i == j ? "diagonal entry is not zero" : "entry modulus deviates from 1", {}, dev});
    }
  }
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) sum += c(i, k) * std::conj(c(j, k));
      if (i == j) sum -= static_cast<double>(n - 1);
      if (std::abs(sum) > worst) {
        worst = std::abs(sum);
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", worst);
    return VerificationResult::fail({wi, wj, std::string("residual ") + buf + " exceeds tolerance", {}, worst, true});
  }
  return VerificationResult::pass(worst);
}

}  // namespace confhad
