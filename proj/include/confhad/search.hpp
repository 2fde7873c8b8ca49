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

// Exhaustive search for circulant and bordered-circulant conference matrices
// whose entries are m-th roots of unity. Rows are in log form: entry k is
// zeta_m^k and ButsonMatrix::kZero is the zero.

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "confhad/matrix.hpp"
#include "confhad/verify.hpp"

namespace confhad {

using LogRow = std::vector<int>;

inline ButsonMatrix circulant_butson(const LogRow &row, int m) {
  const std::size_t n = row.size();
  ButsonMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, row[(j + n - i) % n]);
  return out;
}

inline ButsonMatrix bordered_circulant_butson(const LogRow &core, int m) {
  const std::size_t n = core.size() + 1;
  ButsonMatrix out(n, m);
  out.set(0, 0, ButsonMatrix::kZero);
  for (std::size_t k = 1; k < n; ++k) {
    out.set(0, k, 0);
    out.set(k, 0, 0);
  }
  const std::size_t c = core.size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) out.set(i + 1, j + 1, core[(j + c - i) % c]);
  return out;
}

namespace detail {

/// Rows of length len with row[0] = 0 (the zero) and roots elsewhere, in
/// lexicographic order; keeps those accepted by `keep`.
template <class Pred>
std::vector<LogRow> enumerate_zero_led_rows(std::size_t len, int m, Pred keep) {
  std::vector<LogRow> out;
  if (len == 0) return out;
  LogRow row(len, 0);
  row[0] = ButsonMatrix::kZero;
  while (true) {
    if (keep(row)) out.push_back(row);
    std::size_t t = len;  // increment, last position fastest
    while (t-- > 1) {
      if (++row[t] < m) break;
      row[t] = 0;
    }
    if (t == 0 || t == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace detail

/// Core rows (c0 = 0, c1..c_{n-2} roots) whose bordered circulant of size n
/// is a conference matrix. Sorted lexicographically.
inline std::vector<LogRow> search_bordered_circulant(std::size_t n, int m) {
  if (n < 2) throw Error("search_bordered_circulant: n must be at least 2");
  if (m < 1) throw Error("search_bordered_circulant: root order must be positive");
  return detail::enumerate_zero_led_rows(n - 1, m, [m](const LogRow &core) {
    return check_conference(bordered_circulant_butson(core, m)).passed();
  });
}

/// First rows (c0 = 0) whose circulant of size n is a conference matrix.
inline std::vector<LogRow> search_circulant(std::size_t n, int m) {
  if (n < 2) throw Error("search_circulant: n must be at least 2");
  if (m < 1) throw Error("search_circulant: root order must be positive");
  return detail::enumerate_zero_led_rows(n, m, [m](const LogRow &row) {
    return check_conference(circulant_butson(row, m)).passed();
  });
}

/// Images of a zero-led row under the declared symmetries: multiplier maps
/// c_k -> c_{tk mod L} for t coprime to L (t = -1 is reversal) composed with
/// a global scaling by an m-th root.
inline std::vector<LogRow> symmetry_orbit(const LogRow &row, int m) {
  const std::size_t len = row.size();
  std::vector<LogRow> out;
  for (std::size_t t = 1; t <= std::max<std::size_t>(len, 1); ++t) {
    if (len > 0 && std::gcd(t, len) != 1) continue;
    for (int s = 0; s < m; ++s) {
      LogRow img(len);
      for (std::size_t k = 0; k < len; ++k) {
        const int v = row[(t * k) % len];
        img[k] = v == ButsonMatrix::kZero ? v : (v + s) % m;
      }
      out.push_back(std::move(img));
    }
  }
  return out;
}

/// One representative (the lexicographic minimum) per symmetry orbit, sorted.
inline std::vector<LogRow> symmetry_reduce(std::span<const LogRow> rows, int m) {
  std::vector<LogRow> reps;
  for (const auto &row : rows) {
    auto orbit = symmetry_orbit(row, m);
    reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

/// "z 0 2 2 0"
inline std::string format_log_row(const LogRow &row) {
  std::string out;
  for (int v : row) {
    if (!out.empty()) out += ' ';
    out += v == ButsonMatrix::kZero ? "z" : std::to_string(v);
  }
  return out;
}

}  // namespace confhad
