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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confhad/cyclotomic.hpp"
#include "confhad/error.hpp"
#include "confhad/monomial.hpp"

namespace confhad {

/// Dense square matrix, row-major. The label is metadata and does not take
/// part in equality.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const T &fill = T{}) : n_(n), cells_(n * n, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>> &rows) {
    Matrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw Error("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                    " entries, expected " + std::to_string(rows.size()));
      for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  std::size_t size() const { return n_; }
  T &operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::span<const T> row(std::size_t i) const { return {cells_.data() + i * n_, n_}; }
  std::span<const T> cells() const { return cells_; }

  const std::string &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  template <class F>
  auto map(F &&f) const {
    using U = std::decay_t<decltype(f(std::declval<const T &>()))>;
    Matrix<U> out(n_);
    for (std::size_t k = 0; k < cells_.size(); ++k) out(k / n_, k % n_) = f(cells_[k]);
    out.set_label(label_);
    return out;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
  std::string label_;
};

template <class T>
Matrix<T> transpose(const Matrix<T> &a) {
  Matrix<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(j, i);
  out.set_label(a.label());
  return out;
}

using SymbolicMatrix = Matrix<Entry>;
using ComplexMatrix = Matrix<std::complex<double>>;

inline std::set<Symbol> free_symbols(const SymbolicMatrix &a) {
  std::set<Symbol> out;
  for (const auto &e : a.cells())
    if (!e.is_zero())
      for (Symbol s : e.monomial().symbols()) out.insert(s);
  return out;
}

inline bool is_constant(const SymbolicMatrix &a) { return free_symbols(a).empty(); }

/// Matrix whose nonzero entries are m-th roots of unity, stored by exponent:
/// cell k means zeta_m^k, kZero means 0.
class ButsonMatrix {
 public:
  static constexpr int kZero = -1;

  ButsonMatrix() = default;
  ButsonMatrix(std::size_t n, int order) : order_(order), log_(n, 0) {
    if (order < 1) throw Error("root order must be positive");
  }

  std::size_t size() const { return log_.size(); }
  int order() const { return order_; }

  int exponent(std::size_t i, std::size_t j) const { return log_(i, j); }
  bool is_zero(std::size_t i, std::size_t j) const { return log_(i, j) == kZero; }
  void set(std::size_t i, std::size_t j, int k) {
    log_(i, j) = k == kZero ? kZero : static_cast<int>(CycValue::mod(k, order_));
  }
  const Matrix<int> &exponents() const { return log_; }

  bool has_zero() const {
    for (int k : log_.cells())
      if (k == kZero) return true;
    return false;
  }

  CycValue value(std::size_t i, std::size_t j) const {
    return is_zero(i, j) ? CycValue::zero(order_) : CycValue::root(order_, log_(i, j));
  }

  ComplexMatrix to_complex() const {
    ComplexMatrix out(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        out(i, j) = is_zero(i, j) ? std::complex<double>{} : CycValue::unit_root(order_, log_(i, j));
    out.set_label(label());
    return out;
  }

  /// Same matrix viewed with roots of order new_order (a multiple of order()).
  ButsonMatrix lifted(int new_order) const {
    if (new_order % order_ != 0)
      throw Error("cannot lift roots of order " + std::to_string(order_) + " to order " + std::to_string(new_order));
    ButsonMatrix out(size(), new_order);
    const int f = new_order / order_;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out.set(i, j, is_zero(i, j) ? kZero : log_(i, j) * f);
    out.set_label(label());
    return out;
  }

  /// Constant symbolic matrix as roots of order m (i needs 4 | m, -1 needs 2 | m).
  static ButsonMatrix from_symbolic(const SymbolicMatrix &a, int m) {
    ButsonMatrix out(a.size(), m);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const Entry &e = a(i, j);
        if (e.is_zero()) {
          out.set(i, j, kZero);
          continue;
        }
        if (!e.is_constant()) throw Error("matrix has free parameters; evaluate it first");
        const int ipow = e.monomial().coeff().ipow();
        if ((ipow * m) % 4 != 0)
          throw Error("entry " + e.to_string() + " is not a root of unity of order " + std::to_string(m));
        out.set(i, j, ipow * m / 4);
      }
    }
    out.set_label(a.label());
    return out;
  }

  /// Smallest order among {1, 2, 4} that represents a constant symbolic matrix.
  static int natural_order(const SymbolicMatrix &a) {
    int m = 1;
    for (const auto &e : a.cells()) {
      if (e.is_zero()) continue;
      int ipow = e.monomial().coeff().ipow();
      if (ipow % 2 == 1) return 4;
      if (ipow == 2) m = 2;
    }
    return m;
  }

  SymbolicMatrix to_symbolic() const {
    if (4 % order_ != 0) throw Error("only orders 1, 2, 4 are representable symbolically");
    SymbolicMatrix out(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        out(i, j) = is_zero(i, j) ? Entry::zero() : Entry::unit(log_(i, j) * (4 / order_));
    out.set_label(label());
    return out;
  }

  const std::string &label() const { return log_.label(); }
  void set_label(std::string label) { log_.set_label(std::move(label)); }

  friend bool operator==(const ButsonMatrix &a, const ButsonMatrix &b) {
    return a.order_ == b.order_ && a.log_ == b.log_;
  }

 private:
  int order_ = 1;
  Matrix<int> log_;
};

/// Common order of two Butson matrices (their lcm) and both lifted to it.
inline std::pair<ButsonMatrix, ButsonMatrix> lift_to_common_order(const ButsonMatrix &a, const ButsonMatrix &b) {
  int x = a.order(), y = b.order();
  while (y != 0) {
    int t = x % y;
    x = y;
    y = t;
  }
  const int lcm = a.order() / x * b.order();
  return {a.lifted(lcm), b.lifted(lcm)};
}

/// Real affine phase c0 + sum_k c_k * symbol_k, or the placeholder "." that
/// stands for phase 0 and is kept distinct from the written "0".
class AffinePhase {
 public:
  struct Term {
    std::optional<Symbol> symbol;  // nullopt: constant term
    std::int64_t coeff = 0;
    friend bool operator==(const Term &, const Term &) = default;
  };

  AffinePhase() : terms_{Term{std::nullopt, 0}} {}

  static AffinePhase bullet() {
    AffinePhase p;
    p.bullet_ = true;
    p.terms_.clear();
    return p;
  }

  static AffinePhase parse(std::string_view text, int line = 0, int column = 0);

  bool is_bullet() const { return bullet_; }
  const std::vector<Term> &written_terms() const { return terms_; }

  std::int64_t constant() const {
    std::int64_t c = 0;
    for (const auto &t : terms_)
      if (!t.symbol) c += t.coeff;
    return c;
  }

  /// Canonical symbol coefficients (zero coefficients dropped).
  std::map<Symbol, std::int64_t> coefficients() const {
    std::map<Symbol, std::int64_t> out;
    for (const auto &t : terms_)
      if (t.symbol) out[*t.symbol] += t.coeff;
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
  }

  double evaluate(const std::map<Symbol, double> &phases) const {
    double v = static_cast<double>(constant());
    for (const auto &[s, c] : coefficients()) {
      auto it = phases.find(s);
      if (it == phases.end()) throw Error(std::string("unassigned phase '") + s.name() + "'");
      v += static_cast<double>(c) * it->second;
    }
    return v;
  }

  /// exp(i * phase) as a unit monomial in unit-circle symbols; needs a zero constant.
  Monomial as_monomial() const {
    if (constant() != 0) throw Error("phase with a nonzero constant has no monomial form");
    Monomial m;
    for (const auto &[s, c] : coefficients())
      m *= Monomial(UnitCoeff::one(), ExponentVector::single(s, static_cast<int>(c)));
    return m;
  }

  std::string to_string() const {
    if (bullet_) return ".";
    std::string out;
    for (const auto &t : terms_) {
      const bool neg = t.coeff < 0;
      const std::int64_t mag = neg ? -t.coeff : t.coeff;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? "-" : "+";
      if (!t.symbol) out += std::to_string(mag);
      else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += t.symbol->name();
      }
    }
    return out;
  }

  friend bool operator==(const AffinePhase &a, const AffinePhase &b) {
    return a.bullet_ == b.bullet_ && a.constant() == b.constant() && a.coefficients() == b.coefficients();
  }

 private:
  bool bullet_ = false;
  std::vector<Term> terms_;
};

inline AffinePhase AffinePhase::parse(std::string_view text, int line, int column) {
  if (text == ".") return bullet();
  AffinePhase out;
  out.terms_.clear();
  std::size_t pos = 0;
  auto fail = [&](const std::string &msg) {
    return ParseError(msg + " in '" + std::string(text) + "'", line, column + static_cast<int>(pos));
  };
  if (text.empty()) throw fail("empty phase");
  while (pos < text.size()) {
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!out.terms_.empty()) {
      throw fail("expected '+' or '-'");
    }
    std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    std::optional<std::int64_t> magnitude;
    if (pos > digits) magnitude = std::stoll(std::string(text.substr(digits, pos - digits)));
    if (magnitude && pos < text.size() && text[pos] == '*') ++pos;
    if (pos < text.size() && Symbol::is_valid(text[pos])) {
      out.terms_.push_back({Symbol(text[pos]), sign * magnitude.value_or(1)});
      ++pos;
    } else if (magnitude && (pos == text.size() || text[pos] == '+' || text[pos] == '-')) {
      out.terms_.push_back({std::nullopt, sign * *magnitude});
    } else {
      throw fail("expected a parameter or an integer");
    }
  }
  return out;
}

using ExponentMatrix = Matrix<AffinePhase>;

}  // namespace confhad
