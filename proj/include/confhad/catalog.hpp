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

// The printed matrices as data files plus their derivation recipes, and the
// printed-vs-derived reconciliation.
//
// Directory layout: index.txt (name, kind, companion, citation), one
// <name>.sym or <name>.exp per printed matrix, recipes.txt.

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "confhad/constructions.hpp"
#include "confhad/equivalence.hpp"
#include "confhad/io.hpp"
#include "confhad/recipe.hpp"
#include "confhad/verify.hpp"

#ifndef CONFHAD_DEFAULT_CATALOG_DIR
#define CONFHAD_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace confhad {

enum class EntryKind { conference, orthogonal, hadamard, phases, family };

inline const char *to_string(EntryKind k) {
  switch (k) {
    case EntryKind::conference: return "conference";
    case EntryKind::orthogonal: return "orthogonal";
    case EntryKind::hadamard: return "hadamard";
    case EntryKind::phases: return "phases";
    case EntryKind::family: return "family";
  }
  return "?";
}

inline EntryKind parse_entry_kind(const std::string &s) {
  if (s == "conference") return EntryKind::conference;
  if (s == "orthogonal") return EntryKind::orthogonal;
  if (s == "hadamard") return EntryKind::hadamard;
  if (s == "phases") return EntryKind::phases;
  if (s == "family") return EntryKind::family;
  throw Error("unknown entry kind '" + s + "'");
}

using CatalogMatrix = RecipeValue;

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::conference;
  std::string companion;  // empty if none
  std::string citation;
  std::optional<CatalogMatrix> printed;
  std::optional<Recipe> recipe;

  /// Dimension encoded in the name: the digits after the leading letter.
  std::size_t nominal_size() const {
    std::size_t k = 1, n = 0;
    while (k < name.size() && name[k] >= '0' && name[k] <= '9') n = n * 10 + static_cast<std::size_t>(name[k++] - '0');
    return n;
  }
};

/// One line of a reconciliation report.
struct Finding {
  enum class Level { ok, info, flag };
  std::string topic;
  Level level = Level::ok;
  std::string detail;
};

struct ReconciliationReport {
  std::string name;
  EntryKind kind = EntryKind::conference;
  std::optional<VerificationResult> printed_check;
  std::optional<VerificationResult> derived_check;
  std::optional<EquivalenceVerdict> equivalence;
  std::optional<std::string> first_difference;  // printed vs derived, 1-based cell
  std::vector<Finding> findings;

  bool flagged() const {
    for (const auto &f : findings)
      if (f.level == Finding::Level::flag) return true;
    return false;
  }

  std::string to_string() const {
    std::string out = name + " (" + confhad::to_string(kind) + "): " + (flagged() ? "FLAGGED" : "ok") + "\n";
    for (const auto &f : findings) {
      const char *tag = f.level == Finding::Level::flag ? "FLAG" : f.level == Finding::Level::info ? "info" : "ok";
      std::string topic = f.topic;
      topic.resize(std::max<std::size_t>(topic.size(), 11), ' ');
      out += "  " + std::string(tag) + std::string(5 - std::string(tag).size(), ' ') + topic + " " + f.detail + "\n";
    }
    return out;
  }
};

/// First cell where two symbolic matrices differ, as "(i,j): x vs y".
inline std::optional<std::string> first_difference(const SymbolicMatrix &a, const SymbolicMatrix &b) {
  if (a.size() != b.size())
    return "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a(i, j) == b(i, j)))
        return detail::cell_name(i, j) + ": " + a(i, j).to_string() + " vs " + b(i, j).to_string();
  return std::nullopt;
}

/// Every free parameter set to 1.
inline SymbolicMatrix at_ones(const SymbolicMatrix &a) {
  std::map<Symbol, Monomial> ones;
  for (Symbol s : free_symbols(a)) ones[s] = Monomial::one();
  return substitute(a, ones);
}

/// Parameter-free symbolic matrix as a Butson matrix of order 4.
inline ButsonMatrix butson_of(const SymbolicMatrix &a) { return ButsonMatrix::from_symbolic(a, 4); }

class Catalog {
 public:
  static std::filesystem::path default_directory() {
    if (const char *env = std::getenv("CONFHAD_CATALOG"); env && *env) return env;
    return CONFHAD_DEFAULT_CATALOG_DIR;
  }

  static Catalog load(const std::filesystem::path &dir = default_directory()) {
    Catalog cat;
    cat.dir_ = dir;
    const std::string index_text = read_text_file(dir / "index.txt");
    const auto index = detail::tokenize(index_text);
    for (const auto &line : index) {
      if (line.tokens.size() < 3) throw ParseError("index: expected '<name> <kind> <companion> <citation>'", line.line, 1);
      CatalogEntry e;
      e.name = std::string(line.tokens[0].text);
      e.kind = parse_entry_kind(std::string(line.tokens[1].text));
      if (line.tokens[2].text != "-") e.companion = std::string(line.tokens[2].text);
      for (std::size_t k = 3; k < line.tokens.size(); ++k)
        e.citation += (k > 3 ? " " : "") + std::string(line.tokens[k].text);
      if (cat.entries_.count(e.name)) throw ParseError("index: duplicate entry '" + e.name + "'", line.line, 1);
      for (const char *ext : {".sym", ".exp"}) {
        const auto path = dir / (e.name + ext);
        if (!std::filesystem::exists(path)) continue;
        AnyMatrix m = read_matrix_file(path);
        if (auto *s = std::get_if<SymbolicMatrix>(&m)) e.printed = *s;
        else if (auto *x = std::get_if<ExponentMatrix>(&m)) e.printed = *x;
        else throw Error(path.string() + ": catalog files must be SYM or EXP");
        const std::size_t n = std::visit([](const auto &v) { return v.size(); }, *e.printed);
        if (e.nominal_size() != 0 && n != e.nominal_size())
          throw Error(path.string() + ": expected dimension " + std::to_string(e.nominal_size()) + ", found " +
                      std::to_string(n));
      }
      cat.order_.push_back(e.name);
      cat.entries_.emplace(e.name, std::move(e));
    }
    const auto recipes_path = dir / "recipes.txt";
    if (std::filesystem::exists(recipes_path)) {
      for (auto &r : parse_recipes(read_text_file(recipes_path))) {
        auto it = cat.entries_.find(r.name);
        if (it == cat.entries_.end())
          throw ParseError("recipes: unknown entry '" + r.name + "'", r.line, 1);
        std::vector<std::string> refs;
        r.expr.references(refs);
        for (const auto &ref : refs)
          if (!cat.entries_.count(ref)) throw ParseError("recipes: '" + r.name + "' refers to unknown '" + ref + "'", r.line, 1);
        it->second.recipe = std::move(r);
      }
    }
    for (const auto &name : cat.order_) {
      const auto &e = cat.entries_.at(name);
      if (!e.printed && !e.recipe) throw Error("catalog: '" + name + "' has neither a data file nor a recipe");
      if (!e.companion.empty() && !cat.entries_.count(e.companion))
        throw Error("catalog: '" + name + "' names unknown companion '" + e.companion + "'");
    }
    return cat;
  }

  const std::filesystem::path &directory() const { return dir_; }
  const std::vector<std::string> &names() const { return order_; }
  bool contains(const std::string &name) const { return entries_.count(name) != 0; }

  const CatalogEntry &entry(const std::string &name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw Error("unknown catalog entry '" + name + "'");
    return it->second;
  }

  /// The printed transcription. Families are printed as a formula, so for
  /// them this is the recipe result.
  CatalogMatrix build(const std::string &name) const {
    const auto &e = entry(name);
    if (e.printed) return *e.printed;
    return derive_value(name);
  }

  SymbolicMatrix build_symbolic(const std::string &name) const {
    CatalogMatrix m = build(name);
    if (auto *s = std::get_if<SymbolicMatrix>(&m)) return *s;
    throw Error("'" + name + "' is a phase matrix");
  }

  /// Executes the recipe. References resolve to printed transcriptions.
  SymbolicMatrix derive(const std::string &name) const {
    CatalogMatrix m = derive_value(name);
    if (auto *s = std::get_if<SymbolicMatrix>(&m)) return *s;
    throw Error("'" + name + "' recipe does not produce a symbolic matrix");
  }

  struct FamilyParts {
    SymbolicMatrix carrier;
    ExponentMatrix phases;
    std::string carrier_name;
    std::string phases_name;
  };

  /// Carrier and phase matrix of a family entry (recipe exp_form(H, R)).
  FamilyParts family_parts(const std::string &name) const {
    const auto &e = entry(name);
    if (!e.recipe || e.recipe->expr.kind != RecipeExpr::Kind::call || e.recipe->expr.name != "exp_form" ||
        e.recipe->expr.args.size() != 2 || e.recipe->expr.args[0].kind != RecipeExpr::Kind::reference ||
        e.recipe->expr.args[1].kind != RecipeExpr::Kind::reference)
      throw Error("'" + name + "' is not a family of the form exp_form(H, R)");
    const std::string h = e.recipe->expr.args[0].name, r = e.recipe->expr.args[1].name;
    CatalogMatrix rm = build(r);
    const auto *phases = std::get_if<ExponentMatrix>(&rm);
    if (!phases) throw Error("'" + r + "' is not a phase matrix");
    return {build_symbolic(h), *phases, h, r};
  }

  ComplexMatrix evaluate_family(const std::string &name, const std::map<Symbol, double> &phases) const {
    const auto parts = family_parts(name);
    return eval_exponent_form(parts.carrier, parts.phases, phases);
  }

  ReconciliationReport reconcile(const std::string &name, std::uint64_t budget = kDefaultSearchBudget) const;

  std::vector<ReconciliationReport> reconcile_all(std::uint64_t budget = kDefaultSearchBudget) const {
    std::vector<ReconciliationReport> out;
    for (const auto &name : order_) out.push_back(reconcile(name, budget));
    return out;
  }

 private:
  CatalogMatrix derive_value(const std::string &name) const {
    const auto &e = entry(name);
    if (!e.recipe) throw Error("'" + name + "' is printed-only and has no recipe");
    std::set<std::string> active{name};
    RecipeResolver resolve = [&](const std::string &ref) -> RecipeValue {
      const auto &r = entry(ref);
      if (r.printed) return *r.printed;
      if (!active.insert(ref).second) throw Error("recipe cycle through '" + ref + "'");
      if (!r.recipe) throw Error("'" + ref + "' has no data");
      RecipeValue v = execute(r.recipe->expr, resolve);
      active.erase(ref);
      return v;
    };
    return execute(e.recipe->expr, resolve);
  }

  std::filesystem::path dir_;
  std::vector<std::string> order_;
  std::map<std::string, CatalogEntry> entries_;
};

namespace detail {

inline Finding check_finding(const std::string &topic, const VerificationResult &r) {
  return {topic, r.passed() ? Finding::Level::ok : Finding::Level::flag, r.describe()};
}

inline VerificationResult structural_fail(const std::string &what) {
  return VerificationResult::fail(Witness{0, 0, what, std::nullopt, 0.0});
}

/// Symbolic inverse orthogonality, reporting zero entries as a failure.
inline VerificationResult safe_inverse_orthogonal(const SymbolicMatrix &m) {
  for (std::size_t k = 0; k < m.cells().size(); ++k)
    if (m.cells()[k].is_zero())
      return VerificationResult::fail(Witness{k / m.size(), k % m.size(), "zero entry", std::nullopt, 0.0});
  return check_inverse_orthogonal(m);
}

inline VerificationResult constant_hadamard(const SymbolicMatrix &m) {
  if (!is_constant(m)) return structural_fail("matrix has free parameters");
  return check_hadamard(butson_of(m));
}

inline VerificationResult constant_conference(const SymbolicMatrix &m) {
  return check_conference(m);
}

inline Finding verdict_finding(const std::string &topic, const EquivalenceVerdict &v) {
  return {topic, v.equivalent() ? Finding::Level::ok : Finding::Level::flag, v.describe()};
}

}  // namespace detail

inline ReconciliationReport Catalog::reconcile(const std::string &name, std::uint64_t budget) const {
  using Level = Finding::Level;
  const CatalogEntry &e = entry(name);
  ReconciliationReport rep;
  rep.name = name;
  rep.kind = e.kind;
  auto add = [&](Finding f) { rep.findings.push_back(std::move(f)); };
  auto guarded = [&](const std::string &topic, auto &&fn) {
    try {
      fn();
    } catch (const Error &err) {
      add({topic, Level::flag, std::string("error: ") + err.what()});
    }
  };

  std::optional<SymbolicMatrix> printed, derived;
  if (e.printed)
    if (auto *s = std::get_if<SymbolicMatrix>(&*e.printed)) printed = *s;
  if (e.recipe) {
    guarded("derive", [&] { derived = derive(name); });
    if (derived) add({"recipe", Level::info, e.recipe->to_string()});
  } else {
    add({"recipe", Level::info, "printed-only"});
  }

  auto run_checks = [&](auto &&check) {
    if (printed) guarded("printed", [&] {
        rep.printed_check = check(*printed);
        add(detail::check_finding("printed", *rep.printed_check));
      });
    if (derived) guarded("derived", [&] {
        rep.derived_check = check(*derived);
        add(detail::check_finding("derived", *rep.derived_check));
      });
  };
  auto equivalence_of = [&](const SymbolicMatrix &p, const SymbolicMatrix &d, const char *topic) {
    guarded(topic, [&] {
      rep.equivalence = are_equivalent(butson_of(p), butson_of(d), budget);
      add(detail::verdict_finding(topic, *rep.equivalence));
    });
  };
  auto entrywise = [&](Level level) {
    if (!printed || !derived) return;
    rep.first_difference = first_difference(*printed, *derived);
    if (rep.first_difference) add({"entrywise", level, "printed vs derived differ at " + *rep.first_difference});
    else add({"entrywise", Level::ok, "printed = derived"});
  };

  switch (e.kind) {
    case EntryKind::conference:
      run_checks([](const SymbolicMatrix &m) { return check_conference(m); });
      entrywise(Level::flag);
      if (printed && derived && is_constant(*printed) && is_constant(*derived))
        equivalence_of(*printed, *derived, "equivalent");
      break;

    case EntryKind::orthogonal:
      run_checks(detail::safe_inverse_orthogonal);
      if (printed && derived) {
        add({"entrywise", Level::info, "not applicable (printed form is rearranged)"});
        equivalence_of(at_ones(*printed), at_ones(*derived), "at ones");
      }
      break;

    case EntryKind::hadamard:
      run_checks(detail::constant_hadamard);
      if (printed && derived) {
        entrywise(Level::info);
        equivalence_of(*printed, *derived, "equivalent");
      }
      if (printed && !e.companion.empty()) guarded("companion", [&] {
          const SymbolicMatrix other = at_ones(build_symbolic(e.companion));
          if (auto d = first_difference(*printed, other))
            add({"companion", Level::flag, e.companion + " at ones differs at " + *d + " (printed vs companion)"});
          else
            add({"companion", Level::ok, "equals " + e.companion + " at ones"});
        });
      break;

    case EntryKind::phases: {
      bool any = false;
      for (const auto &other : order_) {
        const auto &o = entry(other);
        if (o.kind != EntryKind::family) continue;
        guarded("carrier", [&] {
          const auto parts = family_parts(other);
          if (parts.phases_name != name) return;
          any = true;
          const auto r = check_inverse_orthogonal(exp_form(parts.carrier, parts.phases));
          add({"with " + parts.carrier_name, r.passed() ? Level::ok : Level::flag, r.describe()});
        });
      }
      if (!any) add({"carrier", Level::info, "no family uses this phase matrix"});
      break;
    }

    case EntryKind::family:
      run_checks(detail::safe_inverse_orthogonal);
      if (derived && !e.companion.empty()) guarded("companion", [&] {
          const SymbolicMatrix other = build_symbolic(e.companion);
          if (auto d = first_difference(*derived, other))
            add({"companion", Level::flag, e.companion + " differs at " + *d + " (derived vs companion)"});
          else
            add({"companion", Level::ok, "equals " + e.companion + " in unit-circle parameters"});
        });
      break;
  }
  return rep;
}

}  // namespace confhad
