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


// confhad: command-line front end for the catalog, the identity checks, the
// equivalence search and the circulant search.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 inequivalent,
// 3 unknown (search budget), 64 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "confhad.hpp"

namespace {

using namespace confhad;

constexpr int kExitFail = 1;
constexpr int kExitInequivalent = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 64;
constexpr std::uint64_t kDefaultSeed = 20260415;

struct Options {
  std::string catalog_dir;
  std::uint64_t seed = kDefaultSeed;
};

class Session {
 public:
  explicit Session(const Options &opt) : opt_(opt) {}

  const Catalog &catalog() {
    if (!catalog_) catalog_ = Catalog::load(opt_.catalog_dir.empty() ? Catalog::default_directory() : std::filesystem::path(opt_.catalog_dir));
    return *catalog_;
  }

  /// A file path if one exists, otherwise a catalog name.
  AnyMatrix resolve(const std::string &arg) {
    if (std::filesystem::is_regular_file(arg)) return read_matrix_file(arg);
    const CatalogMatrix m = catalog().build(arg);
    if (auto *s = std::get_if<SymbolicMatrix>(&m)) return *s;
    return std::get<ExponentMatrix>(m);
  }

  std::uint64_t seed() const { return opt_.seed; }

 private:
  Options opt_;
  std::optional<Catalog> catalog_;
};

ButsonMatrix to_butson(const AnyMatrix &m, const std::string &what) {
  if (auto *b = std::get_if<ButsonMatrix>(&m)) return *b;
  if (auto *s = std::get_if<SymbolicMatrix>(&m)) {
    if (!is_constant(*s)) throw Error(what + " has free parameters; exact comparison needs a constant matrix");
    return ButsonMatrix::from_symbolic(*s, ButsonMatrix::natural_order(*s));
  }
  throw Error(what + " is not an exact matrix (use SYM without parameters or BH)");
}

void write_output(const std::string &text, const std::string &out) {
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
}

std::string join_one_based(const std::vector<std::size_t> &v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
  return s;
}

std::string join(const std::vector<int> &v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::vector<double> parse_phase_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error("--phases: malformed number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_list(Session &s) {
  const Catalog &cat = s.catalog();
  for (const auto &name : cat.names()) {
    const auto &e = cat.entry(name);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-6s %-11s ", name.c_str(), to_string(e.kind));
    std::cout << buf << e.citation << "\n";
  }
  return 0;
}

int cmd_verify(Session &s, const std::string &target, bool numeric, double tol, const std::string &phases_text) {
  const AnyMatrix m = s.resolve(target);
  if (std::holds_alternative<ExponentMatrix>(m))
    throw Error("a phase matrix has no identity of its own; verify a family built from it");

  VerificationResult result = VerificationResult::pass();
  if (auto *b = std::get_if<ButsonMatrix>(&m)) {
    result = b->has_zero() ? check_conference(*b) : check_hadamard(*b);
  } else if (auto *c = std::get_if<ComplexMatrix>(&m)) {
    bool zeros = false;
    for (const auto &z : c->cells()) zeros = zeros || std::abs(z) <= tol;
    result = zeros ? check_conference(*c, tol) : check_hadamard(*c, tol);
  } else {
    const auto &sym = std::get<SymbolicMatrix>(m);
    bool zeros = false;
    for (const auto &e : sym.cells()) zeros = zeros || e.is_zero();
    if (!numeric) {
      result = zeros ? check_conference(sym) : check_inverse_orthogonal(sym);
    } else {
      // Parameters are points on the unit circle: symbol x stands for exp(i x).
      const auto symbols = free_symbols(sym);
      std::vector<double> phases;
      if (!phases_text.empty()) {
        phases = parse_phase_list(phases_text);
        if (phases.size() != symbols.size())
          throw Error("--phases: expected " + std::to_string(symbols.size()) + " values, got " +
                      std::to_string(phases.size()));
      } else {
        std::mt19937_64 rng(s.seed());
        std::uniform_real_distribution<double> angle(-3.141592653589793, 3.141592653589793);
        for (std::size_t k = 0; k < symbols.size(); ++k) phases.push_back(angle(rng));
      }
      ComplexAssignment values;
      std::size_t k = 0;
      for (Symbol sym_name : symbols) values[sym_name] = std::polar(1.0, phases[k++]);
      const ComplexMatrix num = evaluate(sym, values);
      result = zeros ? check_conference(num, tol) : check_hadamard(num, tol);
      if (result.passed()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "pass (max residual %.3e)\n", result.max_residual());
        std::cout << buf;
        return 0;
      }
    }
  }
  std::cout << result.describe() << "\n";
  return result.passed() ? 0 : kExitFail;
}

int cmd_equiv(Session &s, const std::string &a_arg, const std::string &b_arg, std::uint64_t budget) {
  ButsonMatrix a = to_butson(s.resolve(a_arg), a_arg);
  ButsonMatrix b = to_butson(s.resolve(b_arg), b_arg);
  if (a.size() != b.size()) throw Error("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  std::tie(a, b) = lift_to_common_order(a, b);
  const EquivalenceVerdict v = are_equivalent(a, b, budget);
  std::cout << v.describe() << "\n";
  if (v.equivalent()) {
    const auto &t = *v.witness;
    std::cout << "roots of order " << a.order() << "\n"
              << "row permutation: " << join_one_based(t.row_perm) << "\n"
              << "column permutation: " << join_one_based(t.col_perm) << "\n"
              << "row phases: " << join(t.row_phase) << "\n"
              << "column phases: " << join(t.col_phase) << "\n";
    return 0;
  }
  std::cout << "search nodes: " << v.nodes << "\n";
  return v.inequivalent() ? kExitInequivalent : kExitUnknown;
}

int cmd_fingerprint(Session &s, const std::string &arg) {
  const ButsonMatrix m = to_butson(s.resolve(arg), arg);
  std::cout << compute_fingerprint(m, m.has_zero()).to_string();
  return 0;
}

int cmd_search(std::size_t n, int m, bool bordered, bool reduce) {
  auto rows = bordered ? search_bordered_circulant(n, m) : search_circulant(n, m);
  if (reduce) rows = symmetry_reduce(rows, m);
  for (const auto &r : rows) std::cout << format_log_row(r) << "\n";
  return 0;
}

int cmd_reconcile(Session &s, const std::string &name, bool all, std::uint64_t budget) {
  const Catalog &cat = s.catalog();
  std::vector<ReconciliationReport> reports;
  if (all) reports = cat.reconcile_all(budget);
  else reports.push_back(cat.reconcile(name, budget));
  std::size_t flagged = 0;
  for (const auto &r : reports) {
    std::cout << r.to_string();
    flagged += r.flagged();
  }
  if (all) std::cout << "\n" << flagged << " of " << reports.size() << " entries flagged\n";
  return 0;
}

int cmd_specialize(Session &s, const std::string &arg, int m, std::uint64_t budget) {
  const AnyMatrix any = s.resolve(arg);
  const auto *family = std::get_if<SymbolicMatrix>(&any);
  if (!family) throw Error(arg + " is not a symbolic matrix");
  const auto symset = free_symbols(*family);
  const std::vector<Symbol> symbols(symset.begin(), symset.end());
  const auto assignments = root_assignments(symbols, m);
  const Classification cls = specialize_and_classify(*family, assignments, m, budget);

  std::string params;
  for (Symbol x : symbols) params += std::string(params.empty() ? "" : " ") + x.name();
  std::cout << "parameters: " << (params.empty() ? "(none)" : params) << "\n"
            << "roots of order " << m << "\n"
            << "specializations: " << cls.evaluated << "\n"
            << "exact Hadamard: " << cls.evaluated - cls.not_hadamard.size() << "\n"
            << "classes: " << cls.classes.size() << "\n";
  for (std::size_t k = 0; k < cls.classes.size(); ++k) {
    const auto &c = cls.classes[k];
    std::cout << "class " << k + 1 << ": " << c.members.size() << " members" << (c.unresolved ? " (unresolved)" : "")
              << ", first at";
    for (const auto &[x, v] : assignments[c.members.front()])
      std::cout << " " << x.name() << "=" << RootPhase::of(*v.root_exponent(), m).to_string();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"confhad: conference matrices, inverse orthogonal and complex Hadamard matrices"};
  app.set_version_flag("--version", "confhad 0.1.0");
  Options opt;
  bool list = false;
  app.add_option("--catalog", opt.catalog_dir, "catalog directory (default: $CONFHAD_CATALOG or the built-in path)");
  app.add_option("--seed", opt.seed, "seed for sampled phases")->capture_default_str();
  app.add_flag("--list", list, "print the catalog names with citations");

  std::string out, target, target_b;
  bool numeric = false, symbolic = false, bordered = false, reduce = false, all = false;
  double tol = 1e-10;
  std::string phases;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t n = 0;
  int roots = 0;

  auto *build = app.add_subcommand("build", "print the printed transcription of a catalog entry");
  build->add_option("name", target, "catalog name")->required();
  build->add_option("--out", out, "write to a file instead of stdout");

  auto *derive = app.add_subcommand("derive", "run the derivation recipe of a catalog entry");
  derive->add_option("name", target, "catalog name")->required();
  derive->add_option("--out", out, "write to a file instead of stdout");

  auto *verify = app.add_subcommand("verify", "check the defining identity of a matrix");
  verify->add_option("target", target, "matrix file or catalog name")->required();
  auto *sym_flag = verify->add_flag("--symbolic", symbolic, "exact symbolic check (default)");
  auto *num_flag = verify->add_flag("--numeric", numeric, "floating point check at sampled or given phases");
  sym_flag->excludes(num_flag);
  verify->add_option("--tol", tol, "tolerance for --numeric")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--phases", phases, "comma-separated phases for the free parameters, in alphabetical order");

  auto *equiv = app.add_subcommand("equiv", "decide monomial equivalence of two exact matrices");
  equiv->add_option("a", target, "matrix file or catalog name")->required();
  equiv->add_option("b", target_b, "matrix file or catalog name")->required();
  equiv->add_option("--budget", budget, "search node limit")->capture_default_str();

  auto *fp = app.add_subcommand("fingerprint", "print the quadruple-product multiset");
  fp->add_option("target", target, "matrix file or catalog name")->required();

  auto *search = app.add_subcommand("search", "enumerate circulant conference matrices over roots of unity");
  search->add_flag("--bordered", bordered, "bordered circulant (core rows)");
  search->add_option("--n", n, "matrix size")->required()->check(CLI::Range(2, 64));
  search->add_option("--roots", roots, "root order m")->required()->check(CLI::Range(1, 64));
  search->add_flag("--reduce", reduce, "one representative per symmetry orbit");

  auto *reconcile = app.add_subcommand("reconcile", "compare printed and derived catalog matrices");
  reconcile->add_option("name", target, "catalog name");
  reconcile->add_flag("--all", all, "every catalog entry");
  reconcile->add_option("--budget", budget, "search node limit")->capture_default_str();

  auto *specialize = app.add_subcommand("specialize", "classify the root-of-unity specializations of a family");
  specialize->add_option("target", target, "matrix file or catalog name")->required();
  specialize->add_option("--roots", roots, "root order m")->default_val(2)->check(CLI::Range(1, 64));
  specialize->add_option("--budget", budget, "search node limit")->capture_default_str();

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Session session(opt);
    if (list) return cmd_list(session);
    if (build->parsed()) {
      const CatalogMatrix m = session.catalog().build(target);
      if (auto *x = std::get_if<SymbolicMatrix>(&m)) write_output(emit_symbolic(*x), out);
      else write_output(emit_exponent(std::get<ExponentMatrix>(m)), out);
      return 0;
    }
    if (derive->parsed()) {
      write_output(emit_symbolic(session.catalog().derive(target)), out);
      return 0;
    }
    if (verify->parsed()) return cmd_verify(session, target, numeric, tol, phases);
    if (equiv->parsed()) return cmd_equiv(session, target, target_b, budget);
    if (fp->parsed()) return cmd_fingerprint(session, target);
    if (search->parsed()) return cmd_search(n, roots, bordered, reduce);
    if (reconcile->parsed()) {
      if (all == !target.empty()) {
        std::cerr << "reconcile: give a name or --all\n";
        return kExitUsage;
      }
      return cmd_reconcile(session, target, all, budget);
    }
    if (specialize->parsed()) return cmd_specialize(session, target, roots, budget);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "confhad: " << e.what() << "\n";
    return kExitUsage;
  }
}
