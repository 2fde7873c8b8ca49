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

// Unit monomials: i^k times a Laurent monomial in named parameters, plus the
// Entry type (zero or a unit monomial) used as a matrix cell.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confhad/error.hpp"
#include "confhad/gaussian_int.hpp"

namespace confhad {

/// A formal parameter. Names are single lowercase letters other than 'i',
/// which is reserved for the imaginary unit. Ordering is alphabetical.
class Symbol {
 public:
  constexpr explicit Symbol(char name) : name_(name) {
    if (!is_valid(name)) throw Error(std::string("invalid parameter name '") + name + "'");
  }

  static constexpr bool is_valid(char c) { return c >= 'a' && c <= 'z' && c != 'i'; }

  constexpr char name() const { return name_; }
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  char name_;
};

inline std::ostream &operator<<(std::ostream &os, Symbol s) { return os << s.name(); }

/// i^ipow, ipow in [0, 4).
class UnitCoeff {
 public:
  constexpr UnitCoeff() = default;
  constexpr explicit UnitCoeff(int ipow) : ipow_(static_cast<std::uint8_t>(((ipow % 4) + 4) % 4)) {}

  static constexpr UnitCoeff one() { return UnitCoeff(0); }
  static constexpr UnitCoeff i() { return UnitCoeff(1); }
  static constexpr UnitCoeff minus_one() { return UnitCoeff(2); }

  constexpr int ipow() const { return ipow_; }
  constexpr UnitCoeff reciprocal() const { return UnitCoeff(-ipow_); }
  constexpr UnitCoeff conj() const { return reciprocal(); }

  constexpr GaussianInt value() const {
    constexpr GaussianInt table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[ipow_];
  }

  friend constexpr UnitCoeff operator*(UnitCoeff a, UnitCoeff b) { return UnitCoeff(a.ipow_ + b.ipow_); }
  friend constexpr bool operator==(UnitCoeff, UnitCoeff) = default;

 private:
  std::uint8_t ipow_ = 0;
};

/// Sparse integer exponent per symbol, sorted by symbol, zero exponents never stored.
class ExponentVector {
 public:
  using Term = std::pair<Symbol, int>;

  ExponentVector() = default;

  static ExponentVector single(Symbol s, int exponent) {
    ExponentVector v;
    if (exponent != 0) v.terms_.emplace_back(s, exponent);
    return v;
  }

  const std::vector<Term> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int exponent(Symbol s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term &t, Symbol key) { return t.first < key; });
    return (it != terms_.end() && it->first == s) ? it->second : 0;
  }

  /// this + scale * other
  ExponentVector plus(const ExponentVector &other, int scale = 1) const {
    ExponentVector out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        if (b->second * scale != 0) out.terms_.emplace_back(b->first, b->second * scale);
        ++b;
      } else {
        int e = a->second + scale * b->second;
        if (e != 0) out.terms_.emplace_back(a->first, e);
        ++a;
        ++b;
      }
    }
    return out;
  }

  ExponentVector scaled(int k) const {
    ExponentVector out;
    if (k == 0) return out;
    out.terms_ = terms_;
    for (auto &t : out.terms_) t.second *= k;
    return out;
  }

  friend bool operator==(const ExponentVector &, const ExponentVector &) = default;
  friend auto operator<=>(const ExponentVector &a, const ExponentVector &b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

/// Nonzero unit monomial: i^k * prod_s s^e_s.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(UnitCoeff c, ExponentVector e = {}) : coeff_(c), exps_(std::move(e)) {}

  static Monomial one() { return Monomial(); }
  static Monomial unit(int ipow) { return Monomial(UnitCoeff(ipow)); }
  static Monomial symbol(char name, int exponent = 1) {
    return Monomial(UnitCoeff::one(), ExponentVector::single(Symbol(name), exponent));
  }

  UnitCoeff coeff() const { return coeff_; }
  const ExponentVector &exponents() const { return exps_; }
  int exponent(Symbol s) const { return exps_.exponent(s); }
  bool is_constant() const { return exps_.empty(); }

  std::vector<Symbol> symbols() const {
    std::vector<Symbol> out;
    for (const auto &t : exps_.terms()) out.push_back(t.first);
    return out;
  }

  friend Monomial operator*(const Monomial &x, const Monomial &y) {
    return Monomial(x.coeff_ * y.coeff_, x.exps_.plus(y.exps_));
  }
  Monomial &operator*=(const Monomial &y) { return *this = *this * y; }
  friend Monomial operator-(const Monomial &x) { return Monomial(x.coeff_ * UnitCoeff::minus_one(), x.exps_); }

  Monomial reciprocal() const { return Monomial(coeff_.reciprocal(), exps_.scaled(-1)); }

  Monomial pow(int k) const {
    if (k < 0) return reciprocal().pow(-k);
    return Monomial(UnitCoeff(coeff_.ipow() * (k % 4)), exps_.scaled(k));
  }

  /// Replace each mapped symbol by a monomial; unmapped symbols are kept.
  Monomial substitute(const std::map<Symbol, Monomial> &values) const {
    Monomial out(coeff_);
    for (const auto &[s, e] : exps_.terms()) {
      auto it = values.find(s);
      if (it == values.end()) out *= Monomial(UnitCoeff::one(), ExponentVector::single(s, e));
      else out *= it->second.pow(e);
    }
    return out;
  }

  friend bool operator==(const Monomial &, const Monomial &) = default;

  std::string to_string() const;

 private:
  UnitCoeff coeff_;
  ExponentVector exps_;
};

inline Monomial monomial_mul(const Monomial &x, const Monomial &y) { return x * y; }
inline Monomial monomial_recip(const Monomial &x) { return x.reciprocal(); }

/// A matrix cell: zero or a unit monomial.
class Entry {
 public:
  Entry() = default;  // zero
  Entry(Monomial m) : m_(std::move(m)) {}  // NOLINT(google-explicit-constructor)

  static Entry zero() { return Entry(); }
  static Entry one() { return Entry(Monomial::one()); }
  static Entry unit(int ipow) { return Entry(Monomial::unit(ipow)); }

  bool is_zero() const { return !m_.has_value(); }
  bool is_constant() const { return !m_ || m_->is_constant(); }

  const Monomial &monomial() const {
    if (!m_) throw Error("zero entry has no monomial");
    return *m_;
  }

  Entry reciprocal() const {
    if (!m_) throw Error("reciprocal of a zero entry");
    return Entry(m_->reciprocal());
  }

  Entry substitute(const std::map<Symbol, Monomial> &values) const {
    return m_ ? Entry(m_->substitute(values)) : Entry();
  }

  friend Entry operator*(const Entry &x, const Entry &y) {
    if (x.is_zero() || y.is_zero()) return Entry();
    return Entry(*x.m_ * *y.m_);
  }
  friend Entry operator-(const Entry &x) { return x.m_ ? Entry(-*x.m_) : Entry(); }
  friend bool operator==(const Entry &, const Entry &) = default;

  std::string to_string() const { return m_ ? m_->to_string() : "0"; }

 private:
  std::optional<Monomial> m_;
};

inline std::ostream &operator<<(std::ostream &os, const Monomial &m) { return os << m.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const Entry &e) { return os << e.to_string(); }

// Text syntax: `0` | `[-][i*]factor(*factor)*`, factor = letter [^ signed int];
// the empty product is `1`. Emission lists positive exponents before negative
// ones, each group in symbol order: -i*c*a^-1.

inline std::string Monomial::to_string() const {
  std::string factors;
  auto append = [&factors](Symbol s, int e) {
    if (!factors.empty()) factors += '*';
    factors += s.name();
    if (e != 1) factors += "^" + std::to_string(e);
  };
  for (const auto &[s, e] : exps_.terms())
    if (e > 0) append(s, e);
  for (const auto &[s, e] : exps_.terms())
    if (e < 0) append(s, e);

  static constexpr const char *bare[4] = {"1", "i", "-1", "-i"};
  static constexpr const char *prefix[4] = {"", "i*", "-", "-i*"};
  if (factors.empty()) return bare[coeff_.ipow()];
  return prefix[coeff_.ipow()] + factors;
}

namespace detail {

/// Parses one monomial token; `column` is the 1-based column of text[0] for messages.
inline Entry parse_entry_token(std::string_view text, int line, int column) {
  if (text == "0") return Entry::zero();
  if (text.empty()) throw ParseError("empty monomial", line, column);

  std::size_t pos = 0;
  auto fail = [&](const std::string &msg) -> ParseError {
    return ParseError(msg + " in '" + std::string(text) + "'", line, column + static_cast<int>(pos));
  };

  int ipow = 0;
  if (text[pos] == '-') {
    ipow += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    ipow += 1;
    ++pos;
    if (pos == text.size()) return Entry(Monomial::unit(ipow));
    if (text[pos] != '*') throw fail("expected '*' after 'i'");
    ++pos;
  }

  Monomial m = Monomial::unit(ipow);
  bool any = false;
  while (true) {
    if (pos >= text.size()) throw fail("expected a factor");
    char c = text[pos];
    if (c == '1') {
      ++pos;
    } else if (Symbol::is_valid(c)) {
      ++pos;
      int e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) throw fail("expected an integer exponent");
        e = std::stoi(std::string(text.substr(start, pos - start)));
      }
      m *= Monomial::symbol(c, e);
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
    any = true;
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  if (!any) throw fail("expected a factor");
  return Entry(m);
}

}  // namespace detail

inline Entry parse_entry(std::string_view text) { return detail::parse_entry_token(text, 0, 0); }

inline Monomial parse_monomial(std::string_view text) {
  Entry e = parse_entry(text);
  if (e.is_zero()) throw ParseError("zero is not a monomial");
  return e.monomial();
}

}  // namespace confhad
