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
#include <ostream>
#include <string>

namespace confhad {

/// Exact element of Z[i].
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr GaussianInt conj() const { return {re, -im}; }

  constexpr GaussianInt &operator+=(const GaussianInt &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr GaussianInt &operator-=(const GaussianInt &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend constexpr GaussianInt operator+(GaussianInt a, const GaussianInt &b) { return a += b; }
  friend constexpr GaussianInt operator-(GaussianInt a, const GaussianInt &b) { return a -= b; }
  friend constexpr GaussianInt operator-(const GaussianInt &a) { return {-a.re, -a.im}; }
  friend constexpr GaussianInt operator*(const GaussianInt &a, const GaussianInt &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(const GaussianInt &, const GaussianInt &) = default;

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  std::string to_string() const {
    if (im == 0) return std::to_string(re);
    std::string imag;
    if (im == 1) imag = "i";
    else if (im == -1) imag = "-i";
    else imag = std::to_string(im) + "i";
    if (re == 0) return imag;
    return std::to_string(re) + (im > 0 ? "+" : "") + imag;
  }

  friend std::ostream &operator<<(std::ostream &os, const GaussianInt &g) {
    return os << g.to_string();
  }
};

}  // namespace confhad
