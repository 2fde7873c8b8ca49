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

// Text formats. Every format starts with a header line naming the kind and
// dimension, followed by n rows of n whitespace-separated cells:
//
//   SYM n      monomials such as -i*c*a^-1, 1, 0
//   EXP n      affine phases such as b-a, c-a-g, 0, or . for the placeholder
//   BH n m     exponents k of zeta_m^k, or z for zero
//   NUM n      re,im pairs
//
// '#' starts a comment that runs to the end of the line.

#include <charconv>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "confhad/error.hpp"
#include "confhad/matrix.hpp"
#include "confhad/monomial.hpp"

namespace confhad {

namespace detail {

struct Token {
  std::string_view text;
  int line;
  int column;
};

struct TokenLine {
  int line;
  std::vector<Token> tokens;
};

/// Non-empty lines of whitespace-separated tokens; line/column are 1-based.
inline std::vector<TokenLine> tokenize(std::string_view text) {
  std::vector<TokenLine> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view row = text.substr(start, end - start);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    TokenLine tl{line, {}};
    auto blank = [&](std::size_t p) { return row[p] == ' ' || row[p] == '\t' || row[p] == '\r'; };
    std::size_t p = 0;
    while (p < row.size()) {
      while (p < row.size() && blank(p)) ++p;
      std::size_t q = p;
      while (q < row.size() && !blank(q)) ++q;
      if (q > p) tl.tokens.push_back({row.substr(p, q - p), line, static_cast<int>(p + 1)});
      p = q;
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    start = end + 1;
  }
  return out;
}

inline long parse_int(const Token &t, const char *what) {
  long v = 0;
  const char *first = t.text.data();
  const char *last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(std::string("malformed ") + what + " '" + std::string(t.text) + "'", t.line, t.column);
  return v;
}

inline double parse_double(std::string_view text, const Token &t, int offset) {
  double v = 0;
  const char *first = text.data();
  const char *last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed number '" + std::string(text) + "'", t.line, t.column + offset);
  return v;
}

struct Body {
  std::size_t n = 0;
  std::vector<Token> header;  // arguments after the kind keyword
  std::vector<TokenLine> rows;
};

/// Checks the header and the n x n shape.
inline Body split(std::vector<TokenLine> lines, std::string_view kind, std::size_t header_args) {
  if (lines.empty()) throw ParseError("empty input, expected a '" + std::string(kind) + "' header");
  const TokenLine &h = lines.front();
  if (h.tokens[0].text != kind)
    throw ParseError("expected '" + std::string(kind) + "' header, found '" + std::string(h.tokens[0].text) + "'",
                     h.line, h.tokens[0].column);
  if (h.tokens.size() != header_args + 1)
    throw ParseError("'" + std::string(kind) + "' header takes " + std::to_string(header_args) +
                         (header_args == 1 ? " argument" : " arguments"),
                     h.line, h.tokens[0].column);
  Body b;
  b.header.assign(h.tokens.begin() + 1, h.tokens.end());
  const long n = parse_int(b.header[0], "dimension");
  if (n < 1) throw ParseError("dimension must be positive", h.line, b.header[0].column);
  b.n = static_cast<std::size_t>(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    TokenLine &row = lines[k];
    if (b.rows.size() == b.n)
      throw ParseError("unexpected extra row, expected " + std::to_string(b.n), row.line, row.tokens[0].column);
    if (row.tokens.size() != b.n)
      throw ParseError("row " + std::to_string(b.rows.size() + 1) + " has " + std::to_string(row.tokens.size()) +
                           (row.tokens.size() == 1 ? " entry" : " entries") + ", expected " + std::to_string(b.n),
                       row.line, row.tokens.front().column);
    b.rows.push_back(std::move(row));
  }
  if (b.rows.size() != b.n)
    throw ParseError("expected " + std::to_string(b.n) + " rows, found " + std::to_string(b.rows.size()));
  return b;
}

template <class T, class Cell>
Matrix<T> parse_cells(const Body &body, Cell &&cell) {
  Matrix<T> out(body.n);
  for (std::size_t i = 0; i < body.n; ++i)
    for (std::size_t j = 0; j < body.n; ++j) out(i, j) = cell(body.rows[i].tokens[j]);
  return out;
}

template <class T, class Cell>
std::string emit_cells(const std::string &header, const Matrix<T> &m, Cell &&cell) {
  std::string out = header + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += cell(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

inline SymbolicMatrix parse_symbolic(std::string_view text) {
  const auto body = detail::split(detail::tokenize(text), "SYM", 1);
  return detail::parse_cells<Entry>(
      body, [](const detail::Token &t) { return detail::parse_entry_token(t.text, t.line, t.column); });
}

inline std::string emit_symbolic(const SymbolicMatrix &m) {
  return detail::emit_cells("SYM " + std::to_string(m.size()), m, [](const Entry &e) { return e.to_string(); });
}

inline ExponentMatrix parse_exponent(std::string_view text) {
  const auto body = detail::split(detail::tokenize(text), "EXP", 1);
  return detail::parse_cells<AffinePhase>(
      body, [](const detail::Token &t) { return AffinePhase::parse(t.text, t.line, t.column); });
}

inline std::string emit_exponent(const ExponentMatrix &m) {
  return detail::emit_cells("EXP " + std::to_string(m.size()), m,
                            [](const AffinePhase &p) { return p.to_string(); });
}

inline ButsonMatrix parse_butson(std::string_view text) {
  const auto body = detail::split(detail::tokenize(text), "BH", 2);
  const long m = detail::parse_int(body.header[1], "root order");
  if (m < 1) throw ParseError("root order must be positive", body.header[1].line, body.header[1].column);
  ButsonMatrix out(body.n, static_cast<int>(m));
  for (std::size_t i = 0; i < body.n; ++i) {
    for (std::size_t j = 0; j < body.n; ++j) {
      const auto &t = body.rows[i].tokens[j];
      if (t.text == "z") {
        out.set(i, j, ButsonMatrix::kZero);
        continue;
      }
      const long k = detail::parse_int(t, "exponent");
      if (k < 0 || k >= m)
        throw ParseError("exponent " + std::to_string(k) + " outside [0, " + std::to_string(m) + ")", t.line, t.column);
      out.set(i, j, static_cast<int>(k));
    }
  }
  return out;
}

inline std::string emit_butson(const ButsonMatrix &m) {
  return detail::emit_cells("BH " + std::to_string(m.size()) + " " + std::to_string(m.order()), m.exponents(),
                            [](int k) { return k == ButsonMatrix::kZero ? std::string("z") : std::to_string(k); });
}

inline ComplexMatrix parse_numeric(std::string_view text) {
  const auto body = detail::split(detail::tokenize(text), "NUM", 1);
  return detail::parse_cells<std::complex<double>>(body, [](const detail::Token &t) {
    const auto comma = t.text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 're,im'", t.line, t.column);
    return std::complex<double>(detail::parse_double(t.text.substr(0, comma), t, 0),
                                detail::parse_double(t.text.substr(comma + 1), t, static_cast<int>(comma + 1)));
  });
}

inline std::string emit_numeric(const ComplexMatrix &m) {
  return detail::emit_cells("NUM " + std::to_string(m.size()), m, [](const std::complex<double> &z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
    return std::string(buf);
  });
}

using AnyMatrix = std::variant<SymbolicMatrix, ExponentMatrix, ButsonMatrix, ComplexMatrix>;

/// Dispatches on the header keyword.
inline AnyMatrix parse_any(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  const std::string_view kind = lines.front().tokens.front().text;
  if (kind == "SYM") return parse_symbolic(text);
  if (kind == "EXP") return parse_exponent(text);
  if (kind == "BH") return parse_butson(text);
  if (kind == "NUM") return parse_numeric(text);
  throw ParseError("unknown matrix kind '" + std::string(kind) + "'", lines.front().line, 1);
}

inline std::string emit_any(const AnyMatrix &m) {
  return std::visit(
      [](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SymbolicMatrix>) return emit_symbolic(x);
        else if constexpr (std::is_same_v<T, ExponentMatrix>) return emit_exponent(x);
        else if constexpr (std::is_same_v<T, ButsonMatrix>) return emit_butson(x);
        else return emit_numeric(x);
      },
      m);
}

inline std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

/// Reads a matrix file; parse errors are prefixed with the file name.
inline AnyMatrix read_matrix_file(const std::filesystem::path &path) {
  const std::string text = read_text_file(path);
  try {
    return parse_any(text);
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace confhad
