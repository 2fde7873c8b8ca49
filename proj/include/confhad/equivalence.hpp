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

// Monomial equivalence M2 = D1 P1 M1 P2 D2 for matrices of roots of unity
// (zeros allowed), decided by pivot normalization plus row-by-row
// backtracking with column partition refinement.
//
// For a pivot (r, c) with M(r, c) != 0 the normalized matrix
//   N(i, j) = M(i, j) M(r, c) / (M(i, c) M(r, j))
// is invariant under diagonal scalings. Rows i with M(i, c) == 0 and columns j
// with M(r, j) == 0 ("free" lines) keep one residual scalar each, which the
// search enumerates over the m-th roots of unity.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "confhad/fingerprint.hpp"
#include "confhad/matrix.hpp"

namespace confhad {

/// result(i, j) = zeta^(row_phase[i] + col_phase[j]) * source(row_perm[i], col_perm[j])
struct MonomialTransform {
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::vector<int> row_phase;
  std::vector<int> col_phase;

  static MonomialTransform identity(std::size_t n) {
    MonomialTransform t;
    t.row_perm.resize(n);
    t.col_perm.resize(n);
    std::iota(t.row_perm.begin(), t.row_perm.end(), std::size_t{0});
    std::iota(t.col_perm.begin(), t.col_perm.end(), std::size_t{0});
    t.row_phase.assign(n, 0);
    t.col_phase.assign(n, 0);
    return t;
  }
};

inline ButsonMatrix apply(const MonomialTransform &t, const ButsonMatrix &m) {
  const std::size_t n = m.size();
  if (t.row_perm.size() != n || t.col_perm.size() != n || t.row_phase.size() != n || t.col_phase.size() != n)
    throw Error("apply: transform size does not match matrix");
  ButsonMatrix out(n, m.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t si = t.row_perm[i], sj = t.col_perm[j];
      out.set(i, j, m.is_zero(si, sj) ? ButsonMatrix::kZero : m.exponent(si, sj) + t.row_phase[i] + t.col_phase[j]);
    }
  }
  return out;
}

struct EquivalenceVerdict {
  enum class Kind { equivalent, inequivalent, unknown };

  Kind kind = Kind::unknown;
  std::optional<MonomialTransform> witness;  // maps the first matrix onto the second
  std::string reason;
  std::uint64_t nodes = 0;

  bool equivalent() const { return kind == Kind::equivalent; }
  bool inequivalent() const { return kind == Kind::inequivalent; }

  std::string describe() const {
    switch (kind) {
      case Kind::equivalent: return "equivalent";
      case Kind::inequivalent: return "inequivalent (" + reason + ")";
      default: return "unknown (" + reason + ")";
    }
  }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

namespace detail {

struct Normalized {
  Matrix<int> v;
  std::vector<char> free_row;
  std::vector<char> free_col;
};

inline Normalized normalize(const ButsonMatrix &m, std::size_t r, std::size_t c) {
  const std::size_t n = m.size();
  const int order = m.order();
  Normalized out{Matrix<int>(n), std::vector<char>(n, 0), std::vector<char>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) out.free_row[i] = m.is_zero(i, c);
  for (std::size_t j = 0; j < n; ++j) out.free_col[j] = m.is_zero(r, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.is_zero(i, j)) {
        out.v(i, j) = ButsonMatrix::kZero;
        continue;
      }
      const int ri = out.free_row[i] ? 0 : m.exponent(i, c);
      const int cj = out.free_col[j] ? 0 : m.exponent(r, j);
      out.v(i, j) = static_cast<int>(CycValue::mod(m.exponent(i, j) + m.exponent(r, c) - ri - cj, order));
    }
  }
  return out;
}

/// Row/column permutation matcher between a target and a source normalized
/// matrix, both with fixed pivot lines.
class PermutationMatcher {
 public:
  PermutationMatcher(const Matrix<int> &target, const std::vector<char> &target_free_row,
                     const std::vector<char> &target_free_col, std::size_t target_pivot_row,
                     std::size_t target_pivot_col, int order, std::uint64_t &nodes, std::uint64_t budget)
      : b_(target),
        b_free_row_(target_free_row),
        b_free_col_(target_free_col),
        rb_(target_pivot_row),
        cb_(target_pivot_col),
        order_(order),
        nodes_(nodes),
        budget_(budget) {
    const std::size_t n = b_.size();
    row_order_.push_back(rb_);
    for (std::size_t i = 0; i < n; ++i)
      if (i != rb_) row_order_.push_back(i);
    b_sig_ = signatures(b_);
  }

  bool budget_exhausted() const { return exhausted_; }

  /// Finds row map target->source and column map target->source, or nullopt.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> match(
      const Matrix<int> &source, const std::vector<char> &source_free_row, const std::vector<char> &source_free_col,
      std::size_t ra, std::size_t ca) {
    const std::size_t n = b_.size();
    a_ = &source;
    a_free_row_ = &source_free_row;
    a_sig_ = signatures(source);
    ra_ = ra;

    // Initial column classes: pivot column, free columns, remaining columns.
    std::vector<ColumnClass> classes;
    classes.push_back({{cb_}, {ca}});
    ColumnClass free_cls, rest_cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != cb_) (b_free_col_[j] ? free_cls.target : rest_cls.target).push_back(j);
      if (j != ca) (source_free_col[j] ? free_cls.source : rest_cls.source).push_back(j);
    }
    if (free_cls.target.size() != free_cls.source.size()) return std::nullopt;
    if (!free_cls.target.empty()) classes.push_back(std::move(free_cls));
    if (!rest_cls.target.empty()) classes.push_back(std::move(rest_cls));

    row_map_.assign(n, n);
    used_.assign(n, 0);
    if (!extend(0, classes)) return std::nullopt;

    std::vector<std::size_t> col_map(n, n);
    for (const auto &cls : final_classes_)
      for (std::size_t k = 0; k < cls.target.size(); ++k) col_map[cls.target[k]] = cls.source[k];
    return std::make_pair(row_map_, col_map);
  }

 private:
  struct ColumnClass {
    std::vector<std::size_t> target;
    std::vector<std::size_t> source;
  };

  static std::vector<std::vector<int>> signatures(const Matrix<int> &m) {
    std::vector<std::vector<int>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      out[i].assign(m.row(i).begin(), m.row(i).end());
      std::sort(out[i].begin(), out[i].end());
    }
    return out;
  }

  bool extend(std::size_t depth, const std::vector<ColumnClass> &classes) {
    const std::size_t n = b_.size();
    if (depth == n) {
      final_classes_ = classes;
      return true;
    }
    const std::size_t ib = row_order_[depth];
    for (std::size_t ia = 0; ia < n; ++ia) {
      if (depth == 0 ? ia != ra_ : (used_[ia] || ia == ra_)) continue;
      if ((*a_free_row_)[ia] != b_free_row_[ib] || a_sig_[ia] != b_sig_[ib]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      std::vector<ColumnClass> refined;
      if (!refine(ib, ia, classes, refined)) continue;
      row_map_[ib] = ia;
      used_[ia] = 1;
      if (extend(depth + 1, refined)) return true;
      used_[ia] = 0;
      row_map_[ib] = n;
      if (exhausted_) return false;
    }
    return false;
  }

  /// Splits every class by the values of target row ib / source row ia;
  /// fails if some class sees different value multisets.
  bool refine(std::size_t ib, std::size_t ia, const std::vector<ColumnClass> &classes,
              std::vector<ColumnClass> &out) const {
    const std::size_t slots = static_cast<std::size_t>(order_) + 1;  // value + 1, kZero -> 0
    std::vector<ColumnClass> buckets(slots);
    for (const auto &cls : classes) {
      for (auto &b : buckets) {
        b.target.clear();
        b.source.clear();
      }
      for (std::size_t j : cls.target) buckets[static_cast<std::size_t>(b_(ib, j) + 1)].target.push_back(j);
      for (std::size_t j : cls.source) buckets[static_cast<std::size_t>((*a_)(ia, j) + 1)].source.push_back(j);
      for (auto &b : buckets) {
        if (b.target.size() != b.source.size()) return false;
        if (!b.target.empty()) out.push_back(b);
      }
    }
    return true;
  }

  const Matrix<int> &b_;
  const std::vector<char> &b_free_row_;
  const std::vector<char> &b_free_col_;
  std::size_t rb_, cb_;
  int order_;
  std::uint64_t &nodes_;
  std::uint64_t budget_;
  bool exhausted_ = false;

  std::vector<std::size_t> row_order_;
  std::vector<std::vector<int>> b_sig_;

  const Matrix<int> *a_ = nullptr;
  const std::vector<char> *a_free_row_ = nullptr;
  std::vector<std::vector<int>> a_sig_;
  std::size_t ra_ = 0;
  std::vector<std::size_t> row_map_;
  std::vector<char> used_;
  std::vector<ColumnClass> final_classes_;
};

/// Diagonal phases turning the permuted source into the target, found by
/// propagation over the nonzero pattern; nullopt if inconsistent.
inline std::optional<MonomialTransform> solve_phases(const ButsonMatrix &source, const ButsonMatrix &target,
                                                      std::vector<std::size_t> row_perm,
                                                      std::vector<std::size_t> col_perm) {
  const std::size_t n = source.size();
  const int order = source.order();
  std::vector<int> x(n, 0), y(n, 0);
  std::vector<char> xs(n, 0), ys(n, 0);
  auto rel = [&](std::size_t i, std::size_t j) {  // target - source at (i, j)
    return target.exponent(i, j) - source.exponent(row_perm[i], col_perm[j]);
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (xs[start]) continue;
    xs[start] = 1;
    std::vector<std::pair<bool, std::size_t>> stack{{true, start}};  // (is_row, index)
    while (!stack.empty()) {
      auto [is_row, k] = stack.back();
      stack.pop_back();
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t i = is_row ? k : t, j = is_row ? t : k;
        if (target.is_zero(i, j)) continue;
        if (is_row && !ys[j]) {
          y[j] = static_cast<int>(CycValue::mod(rel(i, j) - x[i], order));
          ys[j] = 1;
          stack.push_back({false, j});
        } else if (!is_row && !xs[i]) {
          x[i] = static_cast<int>(CycValue::mod(rel(i, j) - y[j], order));
          xs[i] = 1;
          stack.push_back({true, i});
        }
      }
    }
  }
  MonomialTransform t{std::move(row_perm), std::move(col_perm), x, y};
  if (apply(t, source) != target) return std::nullopt;
  return t;
}

}  // namespace detail

/// Decides whether b = D1 P1 a P2 D2 with m-th root diagonals. Equivalent
/// verdicts carry a witness that has been checked entrywise; Inequivalent is
/// returned only on an invariant mismatch or an exhausted search.
inline EquivalenceVerdict are_equivalent(const ButsonMatrix &a, const ButsonMatrix &b,
                                         std::uint64_t budget = kDefaultSearchBudget) {
  using Kind = EquivalenceVerdict::Kind;
  if (a.size() != b.size()) throw Error("are_equivalent: dimension mismatch");
  if (a.order() != b.order()) throw Error("are_equivalent: root order mismatch");
  const std::size_t n = a.size();
  const int order = a.order();

  auto zeros = [n](const ButsonMatrix &m) {
    std::size_t z = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z += m.is_zero(i, j);
    return z;
  };
  const std::size_t za = zeros(a);
  if (za != zeros(b)) return {Kind::inequivalent, std::nullopt, "different number of zero entries", 0};
  if (za == n * n) return {Kind::equivalent, MonomialTransform::identity(n), "", 0};
  if (compute_fingerprint(a, za != 0) != compute_fingerprint(b, za != 0))
    return {Kind::inequivalent, std::nullopt, "fingerprint mismatch", 0};

  std::size_t r2 = 0, c2 = 0;
  while (b.is_zero(r2, c2)) {
    if (++c2 == n) {
      c2 = 0;
      ++r2;
    }
  }
  const detail::Normalized nb = detail::normalize(b, r2, c2);
  const auto count = [](const std::vector<char> &v) { return std::count(v.begin(), v.end(), 1); };

  std::uint64_t nodes = 0;
  bool unverified = false;
  detail::PermutationMatcher matcher(nb.v, nb.free_row, nb.free_col, r2, c2, order, nodes, budget);

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a.is_zero(r, c)) continue;
      detail::Normalized na = detail::normalize(a, r, c);
      if (count(na.free_row) != count(nb.free_row) || count(na.free_col) != count(nb.free_col)) continue;

      std::vector<std::pair<bool, std::size_t>> lines;  // free rows and columns of a
      for (std::size_t i = 0; i < n; ++i)
        if (na.free_row[i]) lines.push_back({true, i});
      for (std::size_t j = 0; j < n; ++j)
        if (na.free_col[j]) lines.push_back({false, j});

      // Odometer over residual scalars of the free lines.
      std::vector<int> scale(lines.size(), 0);
      while (true) {
        Matrix<int> v = na.v;
        for (std::size_t t = 0; t < lines.size(); ++t) {
          for (std::size_t k = 0; k < n; ++k) {
            int &cell = lines[t].first ? v(lines[t].second, k) : v(k, lines[t].second);
            if (cell != ButsonMatrix::kZero) cell = static_cast<int>(CycValue::mod(cell + scale[t], order));
          }
        }
        if (auto maps = matcher.match(v, na.free_row, na.free_col, r, c)) {
          if (auto t = detail::solve_phases(a, b, maps->first, maps->second))
            return {Kind::equivalent, std::move(t), "", nodes};
          unverified = true;
        }
        if (matcher.budget_exhausted()) return {Kind::unknown, std::nullopt, "search budget exhausted", nodes};
        std::size_t t = 0;
        while (t < scale.size() && ++scale[t] == order) scale[t++] = 0;
        if (t == scale.size()) break;
      }
    }
  }
  if (unverified) return {Kind::unknown, std::nullopt, "candidate maps failed verification", nodes};
  return {Kind::inequivalent, std::nullopt, "exhausted search", nodes};
}

}  // namespace confhad
