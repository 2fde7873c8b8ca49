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

// Evaluation of monomials at parameter values: exactly in Z[zeta_m], or in
// floating point.

#include <complex>
#include <map>
#include <string>

#include "confhad/cyclotomic.hpp"
#include "confhad/monomial.hpp"

namespace confhad {

using ComplexAssignment = std::map<Symbol, std::complex<double>>;
using ExactAssignment = std::map<Symbol, CycValue>;

/// i^k as an element of Z[zeta_m]; odd powers need 4 | m.
inline CycValue unit_value(UnitCoeff c, int m) {
  switch (c.ipow()) {
    case 0: return CycValue::one(m);
    case 2: return CycValue::integer(m, -1);
    default:
      if (m % 4 != 0) throw Error("i is not representable with roots of order " + std::to_string(m));
      return CycValue::root(m, c.ipow() * (m / 4));
  }
}

inline std::complex<double> monomial_eval(const Monomial &x, const ComplexAssignment &values) {
  static constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> out = units[x.coeff().ipow()];
  for (const auto &[s, e] : x.exponents().terms()) {
    auto it = values.find(s);
    if (it == values.end()) throw Error(std::string("unassigned parameter '") + s.name() + "'");
    if (it->second == std::complex<double>{}) throw Error(std::string("parameter '") + s.name() + "' assigned zero");
    out *= std::pow(it->second, e);
  }
  return out;
}

/// Exact evaluation; every assigned value must have order m, and values of
/// symbols with negative exponent must be roots of unity.
inline CycValue monomial_eval(const Monomial &x, const ExactAssignment &values, int m) {
  CycValue out = unit_value(x.coeff(), m);
  for (const auto &[s, e] : x.exponents().terms()) {
    auto it = values.find(s);
    if (it == values.end()) throw Error(std::string("unassigned parameter '") + s.name() + "'");
    if (it->second.is_zero()) throw Error(std::string("parameter '") + s.name() + "' assigned zero");
    CycValue base = e < 0 ? it->second.inverse() : it->second;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  }
  return out;
}

inline std::complex<double> entry_eval(const Entry &x, const ComplexAssignment &values) {
  return x.is_zero() ? std::complex<double>{} : monomial_eval(x.monomial(), values);
}

inline CycValue entry_eval(const Entry &x, const ExactAssignment &values, int m) {
  return x.is_zero() ? CycValue::zero(m) : monomial_eval(x.monomial(), values, m);
}

}  // namespace confhad
