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

// Derivation recipes: `name := op(arg, ...)`. Arguments are nested calls,
// references to other catalog entries (identifiers starting with an upper-case
// letter), substitutions `x=v`, or monomial literals such as -1, i, a.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "confhad/constructions.hpp"
#include "confhad/error.hpp"
#include "confhad/matrix.hpp"
#include "confhad/monomial.hpp"

namespace confhad {

struct RecipeExpr {
  enum class Kind { call, reference, literal, binding };

  Kind kind = Kind::literal;
  std::string name;  // operation or referenced entry
  std::vector<RecipeExpr> args;
  Entry value;                    // literal, or the bound value
  std::optional<Symbol> symbol;   // binding target

  std::string to_string() const {
    switch (kind) {
      case Kind::reference:
        return name;
      case Kind::literal:
        return value.to_string();
      case Kind::binding:
        return std::string(1, symbol->name()) + "=" + value.to_string();
      case Kind::call:
        break;
    }
    std::string out = name + "(";
    for (std::size_t k = 0; k < args.size(); ++k) out += (k ? ", " : "") + args[k].to_string();
    return out + ")";
  }

  /// Names of catalog entries this expression reads.
  void references(std::vector<std::string> &out) const {
    if (kind == Kind::reference) out.push_back(name);
    for (const auto &a : args) a.references(out);
  }
};

struct Recipe {
  std::string name;
  RecipeExpr expr;
  int line = 0;

  std::string to_string() const { return name + " := " + expr.to_string(); }
};

namespace detail {

class RecipeParser {
 public:
  RecipeParser(std::string_view text, int line) : text_(text), line_(line) {}

  RecipeExpr parse_all() {
    RecipeExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw fail("unexpected trailing text");
    return e;
  }

 private:
  ParseError fail(const std::string &msg) const {
    return ParseError(msg + " in recipe '" + std::string(text_) + "'", line_, static_cast<int>(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  static bool word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  RecipeExpr expr() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ' ' && text_[pos_] != '\t')
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) throw fail("expected an argument");
    skip_space();
    RecipeExpr e;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      for (char c : word)
        if (!word_char(c)) throw fail("bad operation name '" + std::string(word) + "'");
      ++pos_;
      e.kind = RecipeExpr::Kind::call;
      e.name = std::string(word);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return e;
      }
      while (true) {
        e.args.push_back(expr());
        skip_space();
        if (pos_ >= text_.size()) throw fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        if (text_[pos_] != ',') throw fail("expected ',' or ')'");
        ++pos_;
      }
    }
    const int column = static_cast<int>(start + 1);
    if (word[0] >= 'A' && word[0] <= 'Z') {
      e.kind = RecipeExpr::Kind::reference;
      e.name = std::string(word);
    } else if (auto eq = word.find('='); eq != std::string_view::npos) {
      if (eq != 1 || !Symbol::is_valid(word[0])) throw fail("bad substitution '" + std::string(word) + "'");
      e.kind = RecipeExpr::Kind::binding;
      e.symbol = Symbol(word[0]);
      e.value = parse_entry_token(word.substr(2), line_, column + 2);
    } else {
      e.kind = RecipeExpr::Kind::literal;
      e.value = parse_entry_token(word, line_, column);
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace detail

inline Recipe parse_recipe_line(std::string_view text, int line = 0) {
  const auto def = text.find(":=");
  if (def == std::string_view::npos) throw ParseError("expected '<name> := <op>(...)'", line, 1);
  std::string_view name = text.substr(0, def);
  while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
  while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.remove_prefix(1);
  if (name.empty()) throw ParseError("missing recipe name", line, 1);
  std::string_view body = text.substr(def + 2);
  return Recipe{std::string(name), detail::RecipeParser(body, line).parse_all(), line};
}

/// Parses a manifest; blank lines and '#' comments are skipped.
inline std::vector<Recipe> parse_recipes(std::string_view text) {
  std::vector<Recipe> out;
  int line = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view row = text.substr(start, end - start);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    if (row.find_first_not_of(" \t\r") != std::string_view::npos) {
      while (row.back() == '\r' || row.back() == ' ' || row.back() == '\t') row.remove_suffix(1);
      out.push_back(parse_recipe_line(row, line));
    }
    start = end + 1;
  }
  return out;
}

using RecipeValue = std::variant<SymbolicMatrix, ExponentMatrix>;
using RecipeResolver = std::function<RecipeValue(const std::string &)>;

namespace detail {

inline const SymbolicMatrix &as_symbolic(const RecipeValue &v, const std::string &op) {
  if (auto *m = std::get_if<SymbolicMatrix>(&v)) return *m;
  throw Error(op + ": expected a symbolic matrix argument");
}

}  // namespace detail

/// Evaluates a recipe expression; references are looked up through `resolve`.
inline RecipeValue execute(const RecipeExpr &e, const RecipeResolver &resolve) {
  using Kind = RecipeExpr::Kind;
  if (e.kind == Kind::reference) return resolve(e.name);
  if (e.kind != Kind::call) throw Error("recipe: '" + e.to_string() + "' is not a matrix");

  const std::string &op = e.name;
  auto matrix_arg = [&](std::size_t k) -> SymbolicMatrix {
    if (k >= e.args.size()) throw Error(op + ": missing matrix argument");
    return detail::as_symbolic(execute(e.args[k], resolve), op);
  };
  auto entries_from = [&](std::size_t first) {
    std::vector<Entry> out;
    for (std::size_t k = first; k < e.args.size(); ++k) {
      if (e.args[k].kind != Kind::literal) throw Error(op + ": expected a monomial, got '" + e.args[k].to_string() + "'");
      out.push_back(e.args[k].value);
    }
    return out;
  };
  auto unary = [&]() {
    if (e.args.size() != 1) throw Error(op + ": takes one argument");
    return matrix_arg(0);
  };

  if (op == "circulant") return circulant(entries_from(0));
  if (op == "bordered_circulant") return bordered_circulant(entries_from(0));
  if (op == "scale_columns") return scale_columns(matrix_arg(0), entries_from(1));
  if (op == "scale_rows") return scale_rows(matrix_arg(0), entries_from(1));
  if (op == "transpose") return transpose(unary());
  if (op == "double_orthogonal") return double_orthogonal(unary());
  if (op == "double_hadamard") return double_hadamard(unary());
  if (op == "conference_inverse") return conference_inverse(unary());
  if (op == "reciprocal_transpose") return reciprocal_transpose(unary());
  if (op == "dephase") return dephase(unary());
  if (op == "substitute") {
    const SymbolicMatrix base = matrix_arg(0);
    std::map<Symbol, Monomial> values;
    for (std::size_t k = 1; k < e.args.size(); ++k) {
      const auto &b = e.args[k];
      if (b.kind != Kind::binding) throw Error("substitute: expected x=value, got '" + b.to_string() + "'");
      if (b.value.is_zero()) throw Error(std::string("substitute: parameter '") + b.symbol->name() + "' set to zero");
      values[*b.symbol] = b.value.monomial();
    }
    return substitute(base, values);
  }
  if (op == "exp_form") {
    if (e.args.size() != 2) throw Error("exp_form: takes a matrix and a phase matrix");
    const SymbolicMatrix h = matrix_arg(0);
    const RecipeValue r = execute(e.args[1], resolve);
    const auto *phases = std::get_if<ExponentMatrix>(&r);
    if (!phases) throw Error("exp_form: second argument must be a phase matrix");
    return exp_form(h, *phases);
  }
  throw Error("recipe: unknown operation '" + op + "'");
}

}  // namespace confhad
