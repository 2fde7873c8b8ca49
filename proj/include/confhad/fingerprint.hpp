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

// Haagerup fingerprint: the multiset of quadruple products
// m_ij m_kl conj(m_il) conj(m_kj) over i < k, j < l, each counted together
// with its conjugate. Without the conjugates a column swap changes the
// multiset whenever it is not already closed under conjugation. Invariant
// under row and column permutations and unit diagonal scalings.

#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "confhad/matrix.hpp"

namespace confhad {

/// A root of unity exp(2 pi i num/den), num/den reduced into [0, 1).
struct RootPhase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RootPhase of(std::int64_t k, std::int64_t m) {
    k = ((k % m) + m) % m;
    const std::int64_t g = std::gcd(k, m);
    return k == 0 ? RootPhase{0, 1} : RootPhase{k / g, m / g};
  }

  friend bool operator==(const RootPhase &, const RootPhase &) = default;
  friend bool operator<(const RootPhase &a, const RootPhase &b) { return a.num * b.den < b.num * a.den; }

  std::string to_string() const {
    return num == 0 ? "e(0)" : "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
};

class Fingerprint {
 public:
  const std::map<RootPhase, std::uint64_t> &counts() const { return counts_; }
  bool skips_zeros() const { return skips_zeros_; }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto &kv : counts_) t += kv.second;
    return t;
  }

  /// One `value:count` line per distinct value, in increasing phase order.
  std::string to_string() const {
    std::string out;
    for (const auto &[phase, count] : counts_) out += phase.to_string() + ":" + std::to_string(count) + "\n";
    return out;
  }

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
  friend bool operator<(const Fingerprint &a, const Fingerprint &b) {
    if (a.skips_zeros_ != b.skips_zeros_) return a.skips_zeros_ < b.skips_zeros_;
    return a.counts_ < b.counts_;
  }

 private:
  friend Fingerprint compute_fingerprint(const ButsonMatrix &, bool);

  std::map<RootPhase, std::uint64_t> counts_;
  bool skips_zeros_ = false;
};

inline Fingerprint compute_fingerprint(const ButsonMatrix &m, bool skip_zeros) {
  const std::size_t n = m.size();
  const int order = m.order();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(order), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          if (m.is_zero(i, j) || m.is_zero(k, l) || m.is_zero(i, l) || m.is_zero(k, j)) {
            if (!skip_zeros) throw Error("fingerprint: zero entry; use fingerprint_conference");
            continue;
          }
          const int v = m.exponent(i, j) + m.exponent(k, l) - m.exponent(i, l) - m.exponent(k, j);
          // Swapping j and l conjugates the product, so both values go in.
          ++hist[static_cast<std::size_t>(CycValue::mod(v, order))];
          ++hist[static_cast<std::size_t>(CycValue::mod(-v, order))];
        }
      }
    }
  }
  Fingerprint fp;
  fp.skips_zeros_ = skip_zeros;
  for (int v = 0; v < order; ++v)
    if (hist[static_cast<std::size_t>(v)] != 0) fp.counts_[RootPhase::of(v, order)] += hist[static_cast<std::size_t>(v)];
  return fp;
}

/// Fingerprint of a zero-free matrix.
inline Fingerprint fingerprint(const ButsonMatrix &m) { return compute_fingerprint(m, false); }

/// Fingerprint that skips every quadruple touching a zero entry.
inline Fingerprint fingerprint_conference(const ButsonMatrix &m) { return compute_fingerprint(m, true); }

inline std::ostream &operator<<(std::ostream &os, const Fingerprint &fp) { return os << fp.to_string(); }

}  // namespace confhad
