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

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "confhad/gaussian_int.hpp"
#include "confhad/monomial.hpp"

namespace confhad {

/// Sparse Laurent polynomial with Gaussian-integer coefficients. Zero
/// coefficients are never stored, so equality is map equality.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, GaussianInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Monomial &m) { add(m); }
  static LaurentPoly constant(GaussianInt c) {
    LaurentPoly p;
    p.add_term(ExponentVector{}, c);
    return p;
  }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the constant term when the polynomial is constant.
  std::optional<GaussianInt> constant_value() const {
    if (terms_.empty()) return GaussianInt{};
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
  }

  LaurentPoly &add_term(const ExponentVector &e, GaussianInt c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  LaurentPoly &add(const Monomial &m) { return add_term(m.exponents(), m.coeff().value()); }

  LaurentPoly &operator+=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly &operator-=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly out;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) out.add_term(ea.plus(eb), ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[e, c] : terms_) {
      std::string mono = Monomial(UnitCoeff::one(), e).to_string();
      std::string coeff = c.to_string();
      bool compound = c.re != 0 && c.im != 0;
      std::string term;
      if (e.empty()) term = compound ? "(" + coeff + ")" : coeff;
      else if (c == GaussianInt{1}) term = mono;
      else if (c == GaussianInt{-1}) term = "-" + mono;
      else term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
      if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
      else out = term;
    }
    return out;
  }

 private:
  TermMap terms_;
};

inline std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

inline LaurentPoly laurent_accumulate(LaurentPoly p, const Monomial &m) { return p.add(m), p; }

}  // namespace confhad
