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

// Exact arithmetic in Z[zeta_m], elements stored as integer coefficient
// vectors of length phi(m) reduced modulo the m-th cyclotomic polynomial.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "confhad/error.hpp"

namespace confhad {

namespace detail {

using IntPoly = std::vector<std::int64_t>;  // coefficient of x^k at index k

inline void trim(IntPoly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient num / den for monic den dividing num.
inline IntPoly divide_exact(IntPoly num, const IntPoly &den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    if (c == 0) continue;
    q[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error("internal: inexact cyclotomic division");
  return q;
}

inline IntPoly multiply(const IntPoly &a, const IntPoly &b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Per-order data: Phi_m and the reduced form of x^k for k in [0, m).
struct CycContext {
  int m = 1;
  IntPoly phi;                            // monic, degree = phi(m)
  std::vector<std::vector<std::int64_t>> powers;  // powers[k] has length degree()

  std::size_t degree() const { return phi.size() - 1; }
};

inline IntPoly cyclotomic_polynomial(int m);

inline std::unique_ptr<CycContext> make_context(int m) {
  auto ctx = std::make_unique<CycContext>();
  ctx->m = m;
  ctx->phi = cyclotomic_polynomial(m);
  const std::size_t deg = ctx->degree();
  ctx->powers.assign(static_cast<std::size_t>(m), std::vector<std::int64_t>(deg, 0));
  // x^k mod Phi_m, built incrementally: multiply by x and fold the top coefficient.
  std::vector<std::int64_t> cur(deg, 0);
  if (deg > 0) cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    ctx->powers[static_cast<std::size_t>(k)] = cur;
    std::int64_t top = deg > 0 ? cur[deg - 1] : 0;
    for (std::size_t j = deg; j-- > 1;) cur[j] = cur[j - 1];
    if (deg > 0) cur[0] = 0;
    for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * ctx->phi[j];
  }
  return ctx;
}

inline const CycContext &context(int m) {
  if (m < 1) throw Error("root order must be positive, got " + std::to_string(m));
  // Recursive: building Phi_m consults the contexts of the divisors of m.
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<CycContext>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[m];
  if (!slot) slot = make_context(m);
  return *slot;
}

inline IntPoly cyclotomic_polynomial(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  IntPoly den{1};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = multiply(den, context(d).phi);
  return divide_exact(std::move(num), den);
}

}  // namespace detail

/// Element of Z[zeta_m]. Two values are equal iff their orders and reduced
/// coefficient vectors are equal; zero is the all-zero vector.
class CycValue {
 public:
  CycValue() : CycValue(1) {}
  explicit CycValue(int m) : ctx_(&detail::context(m)), coeffs_(ctx_->degree(), 0) {}

  static CycValue zero(int m) { return CycValue(m); }
  static CycValue integer(int m, std::int64_t v) {
    CycValue out(m);
    out.coeffs_[0] = v;
    return out;
  }
  static CycValue one(int m) { return integer(m, 1); }

  /// zeta_m^k for any integer k.
  static CycValue root(int m, std::int64_t k) {
    CycValue out(m);
    out.coeffs_ = out.ctx_->powers[static_cast<std::size_t>(mod(k, m))];
    return out;
  }

  /// sum_k counts[k] * zeta_m^k, counts.size() == m.
  static CycValue from_root_counts(int m, std::span<const std::int64_t> counts) {
    CycValue out(m);
    if (counts.size() != static_cast<std::size_t>(m)) throw Error("root count vector has wrong length");
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k] != 0) out.axpy(counts[k], out.ctx_->powers[k]);
    return out;
  }

  int order() const { return ctx_->m; }
  const std::vector<std::int64_t> &coeffs() const { return coeffs_; }
  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  CycValue &operator+=(const CycValue &o) {
    check_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  CycValue &operator-=(const CycValue &o) {
    check_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  friend CycValue operator+(CycValue a, const CycValue &b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue &b) { return a -= b; }
  friend CycValue operator-(CycValue a) {
    for (auto &c : a.coeffs_) c = -c;
    return a;
  }

  friend CycValue operator*(const CycValue &a, const CycValue &b) {
    a.check_order(b);
    CycValue out(a.order());
    const int m = a.order();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        out.axpy(a.coeffs_[i] * b.coeffs_[j], out.ctx_->powers[(i + j) % static_cast<std::size_t>(m)]);
      }
    }
    return out;
  }
  CycValue &operator*=(const CycValue &b) { return *this = *this * b; }

  /// Complex conjugate: zeta^k -> zeta^-k.
  CycValue conj() const {
    CycValue out(order());
    const int m = order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) out.axpy(coeffs_[k], ctx_->powers[static_cast<std::size_t>(mod(-static_cast<std::int64_t>(k), m))]);
    return out;
  }

  /// k with this == zeta^k, if this is a root of unity of its order.
  std::optional<int> root_exponent() const {
    for (int k = 0; k < order(); ++k)
      if (ctx_->powers[static_cast<std::size_t>(k)] == coeffs_) return k;
    return std::nullopt;
  }

  /// Exact inverse, defined for roots of unity only.
  CycValue inverse() const {
    if (auto k = root_exponent()) return root(order(), -*k);
    throw Error("exact inverse is only available for roots of unity");
  }

  std::complex<double> to_complex() const {
    std::complex<double> out{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) out += static_cast<double>(coeffs_[k]) * unit_root(order(), static_cast<std::int64_t>(k));
    return out;
  }

  friend bool operator==(const CycValue &a, const CycValue &b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      std::string term = std::to_string(coeffs_[k]);
      if (k > 0) term += "*z" + std::to_string(order()) + (k > 1 ? "^" + std::to_string(k) : "");
      out += out.empty() ? term : (coeffs_[k] < 0 ? " - " + term.substr(1) : " + " + term);
    }
    return out.empty() ? "0" : out;
  }

  static std::complex<double> unit_root(int m, std::int64_t k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(k, m)) / m);
  }

  static std::int64_t mod(std::int64_t k, std::int64_t m) { return ((k % m) + m) % m; }

 private:
  void check_order(const CycValue &o) const {
    if (order() != o.order())
      throw Error("cyclotomic order mismatch: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
  }

  void axpy(std::int64_t a, const std::vector<std::int64_t> &x) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += a * x[j];
  }

  const detail::CycContext *ctx_;
  std::vector<std::int64_t> coeffs_;
};

inline std::ostream &operator<<(std::ostream &os, const CycValue &v) { return os << v.to_string(); }

inline CycValue cyc_add(const CycValue &x, const CycValue &y) { return x + y; }
inline CycValue cyc_mul(const CycValue &x, const CycValue &y) { return x * y; }
inline CycValue cyc_conj(const CycValue &x) { return x.conj(); }

}  // namespace confhad
