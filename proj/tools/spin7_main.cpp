#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "spin7/crystal.hpp"
#include "spin7/json_io.hpp"
#include "spin7/parse.hpp"
#include "spin7/reps.hpp"
#include "spin7/tower.hpp"
#include "spin7/ybe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

using namespace spin7;

int cmd_nf(int n, const std::string& expr_text, bool as_json) {
  AlgElement e = parse(expr_text, n);
  AlgElement nf = normal_form(e, rules_for(n));
  if (as_json)
    std::cout << to_json(nf).dump(2) << "\n";
  else
    std::cout << to_string(nf) << "\n";
  return kExitOk;
}

int cmd_rules(int n, const std::string& path) {
  RuleSet rules = rules_for(n);
  json j = to_json(rules);
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << rules.size() << " rules for n=" << n << " to " << path << "\n";
  }
  return kExitOk;
}

int cmd_dim(int n, const std::string& method, int table_max) {
  if (table_max > 0) {
    std::cout << "n,rewrite,walks,formula\n";
    for (int m = 2; m <= table_max; ++m) {
      Int walks = count_dominant_walks(2 * m);
      Int formula = dyck_formula(m - 1);
      Int rewrite = count_irreducible(m, rules_for(m));
      std::cout << m << "," << rewrite << "," << walks << "," << formula << "\n";
      if (!(walks == formula && walks == rewrite)) return kExitVerificationFailed;
    }
    return kExitOk;
  }
  Int walks, formula, rewrite;
  bool have_walks = false, have_formula = false, have_rewrite = false;
  if (method == "walks" || method == "all") {
    walks = count_dominant_walks(2 * n);
    have_walks = true;
    std::cout << "walks: " << walks << "\n";
  }
  if (method == "formula" || method == "all") {
    formula = dyck_formula(n - 1);
    have_formula = true;
    std::cout << "formula: " << formula << "\n";
  }
  if (method == "rewrite" || method == "all") {
    rewrite = count_irreducible(n, rules_for(n));
    have_rewrite = true;
    std::cout << "rewrite: " << rewrite << "\n";
  }
  if (method == "all") {
    bool agree = walks == formula && walks == rewrite;
    std::cout << (agree ? "agreement\n" : "DISAGREEMENT\n");
    return agree ? kExitOk : kExitVerificationFailed;
  }
  if (!have_walks && !have_formula && !have_rewrite) {
    std::cerr << "unknown method\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_confluence(int n, bool verbose) {
  RuleSet rules = rules_for(n);
  TerminationReport term = check_termination(rules);
  if (!term.pass()) {
    std::cout << "termination: " << term.violations.size() << " violation(s)\n";
    return kExitVerificationFailed;
  }
  std::cout << "termination: pass (" << term.rules_checked << " rules)\n";
  OverlapReport report = check_local_confluence(rules, verbose);
  std::cout << to_json(report, verbose).dump(2) << "\n";
  if (report.all_joinable()) {
    std::cout << "all overlaps joinable\n";
    return kExitOk;
  }
  std::cout << "NOT confluent: " << (report.total - report.joinable) << " bad overlap(s)\n";
  return kExitVerificationFailed;
}

int cmd_rep_check() {
  bool ok = true;
  auto require = [&ok](bool cond, const std::string& what) {
    std::cout << (cond ? "pass: " : "FAIL: ") << what << "\n";
    ok = ok && cond;
  };

  // Defining relations hold in all four representations.
  std::size_t bad_relations = 0;
  for (const Relation& rel : all_relations(3)) {
    AlgElement diff = AlgElement::word(rel.lhs) - rel.rhs;
    for (int k = 1; k <= 4; ++k) {
      if (!evaluate(diff, rep(k)).is_zero()) {
        ++bad_relations;
        break;
      }
    }
  }
  require(bad_relations == 0, "all defining relations hold in the four representations");

  RepMatrix a(30, 30);
  for (int col = 0; col < 30; ++col) {
    auto v = pi_flatten(pi_evaluate(basis30()[static_cast<std::size_t>(col)]));
    for (int row = 0; row < 30; ++row) a.at(row, col) = v[static_cast<std::size_t>(row)];
  }
  require(rank(a) == 30, "thirty basis words have rank 30 under the faithful sum");

  for (int k = 1; k <= 4; ++k) {
    const RepSpec& r = rep(k);
    require(braid_from_generators(1, r) == r.sigma1,
            "braid matrix matches its generator expansion (dim " + std::to_string(k) + ")");
    require(r.sigma1 * r.sigma1_inv == RepMatrix::identity(k),
            "sigma sigma^-1 = 1 (dim " + std::to_string(k) + ")");
    if (k >= 2)
      require(r.sigma1 * r.sigma2 * r.sigma1 == r.sigma2 * r.sigma1 * r.sigma2,
              "braid relation (dim " + std::to_string(k) + ")");
  }

  // char(H1) = (x+1)(x-[3])(x+[5])(x-[7]) in the four dimensional rep.
  auto cp = char_poly(rep(4).h1);
  std::vector<RatFunc> expected{RatFunc(1)};
  for (const RatFunc& root :
       {RatFunc(-1), RatFunc(qint(3)), RatFunc(0) - RatFunc(qint(5)), RatFunc(qint(7))}) {
    std::vector<RatFunc> next(expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i + 1] = next[i + 1] + expected[i];
      next[i] = next[i] - root * expected[i];
    }
    expected = std::move(next);
  }
  require(cp == expected, "H eigenvalues are {-1, [3], -[5], [7]}");

  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_ybe(const std::string& which, const std::string& mode, unsigned seed) {
  YbeSolution sol = which == "S" ? YbeSolution::S : YbeSolution::R;
  YbeMode m = mode == "sampled" ? YbeMode::sampled : YbeMode::symbolic;
  bool ok = true;
  auto run = [&ok](const std::string& name, const CheckOutcome& r) {
    std::cout << (r.pass ? "pass: " : "FAIL: ") << name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    ok = ok && r.pass;
  };
  if (sol == YbeSolution::R) {
    run("specializations", check_specializations());
    run("yang-baxter (R)", check_ybe(YbeSolution::R, m, seed));
    run("sandwich identities", check_sandwich());
    run("unitarity", check_unitarity(YbeSolution::R));
    run("distant commutation", check_distant_commute());
  } else {
    run("yang-baxter (S)", check_ybe(YbeSolution::S, m, seed));
    run("unitarity", check_unitarity(YbeSolution::S));
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_trace(int n, const std::string& expr_text, bool at_one) {
  TowerContext ctx(n);
  AlgElement e = parse(expr_text, n);
  RatFunc t = trace(ctx, n, ctx.rewriter(n).normal_form(e));
  std::cout << to_json(t).dump() << "\n";
  if (at_one) std::cout << "at q=1: " << t.eval(1) << "\n";
  return kExitOk;
}

int cmd_idempotents() {
  TowerContext ctx(2);
  Rewriter<RatFunc>& rw = ctx.rewriter(2);
  bool ok = true;
  auto require = [&ok](bool cond, const std::string& what) {
    std::cout << (cond ? "pass: " : "FAIL: ") << what << "\n";
    ok = ok && cond;
  };

  const auto& idems = spectral_idempotents();
  AlgElement sum(2);
  for (const auto& idem : idems) {
    AlgElement sq = rw.normal_form(idem.element * idem.element);
    require(sq == rw.normal_form(idem.element),
            "idempotent for eigenvalue " + to_string(idem.eigenvalue));
    AlgElement h = AlgElement::generator(2, Gen{GenKind::H, 1});
    require(rw.normal_form(h * idem.element) == rw.normal_form(idem.eigenvalue * idem.element),
            "H eigenvector for eigenvalue " + to_string(idem.eigenvalue));
    sum = sum + idem.element;
  }
  require(rw.normal_form(sum) == AlgElement::unit(2), "partition of unity");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      require(rw.normal_form(idems[i].element * idems[j].element).is_zero(),
              "orthogonality " + std::to_string(i) + "," + std::to_string(j));

  auto attach = identify_weights(ctx);
  for (const auto& a : attach)
    std::cout << "eigenvalue " << to_string(a.eigenvalue) << " -> summand with trace "
              << a.trace_value.eval(1) << " at q=1\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_crystal() {
  bool ok = true;
  for (CrystalKind kind : {CrystalKind::spin, CrystalKind::vector_rep}) {
    CrystalValidation v = validate_crystal(crystal_graph(kind));
    const char* name = kind == CrystalKind::spin ? "spin" : "vector";
    std::cout << (v.pass ? "pass: " : "FAIL: ") << name << " crystal graph\n";
    for (const std::string& msg : v.violations) std::cout << "  " << msg << "\n";
    ok = ok && v.pass;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the centraliser algebras of the so(7) spin representation"};
  app.require_subcommand(1);

  int n = 3;
  std::string expr_text, emit_path, method = "all", which = "R", mode = "symbolic";
  bool as_json = false, verbose = false, at_one = false;
  unsigned seed = 1;
  int table_max = 0;

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("--n", n, "strand count")->required();
  nf->add_option("expr", expr_text, "expression")->required();
  nf->add_flag("--json", as_json, "JSON output");

  auto* rules = app.add_subcommand("rules", "emit the rewrite rule set");
  rules->add_option("--n", n, "strand count")->required();
  rules->add_option("--emit", emit_path, "output file (default stdout)");

  auto* dim = app.add_subcommand("dim", "dimension of A_P(n) by independent methods");
  dim->add_option("--n", n, "strand count");
  dim->add_option("--method", method, "rewrite|walks|formula|all")
      ->check(CLI::IsMember({"rewrite", "walks", "formula", "all"}));
  dim->add_option("--table", table_max, "CSV table up to this n");

  auto* conf = app.add_subcommand("confluence", "termination and overlap check");
  conf->add_option("--n", n, "strand count")->required();
  conf->add_flag("--verbose", verbose, "list every overlap");

  app.add_subcommand("rep-check", "verify the explicit representations");

  auto* ybe = app.add_subcommand("ybe-check", "Yang-Baxter verifications");
  ybe->add_option("--which", which, "R|S")->check(CLI::IsMember({"R", "S"}));
  ybe->add_option("--mode", mode, "symbolic|sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}));
  ybe->add_option("--seed", seed, "sample seed");

  auto* tr = app.add_subcommand("trace", "Markov trace of an expression");
  tr->add_option("--n", n, "strand count")->required();
  tr->add_option("expr", expr_text, "expression")->required();
  tr->add_flag("--at-one", at_one, "also evaluate at q=1");

  auto* idem = app.add_subcommand("idempotents", "spectral idempotent checks");
  idem->add_flag("--check", verbose, "run the checks (default)");

  auto* cry = app.add_subcommand("crystal", "crystal graph validation");
  cry->add_flag("--validate", verbose, "run the validation (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nf->parsed()) return cmd_nf(n, expr_text, as_json);
    if (rules->parsed()) return cmd_rules(n, emit_path);
    if (dim->parsed()) return cmd_dim(n, method, table_max);
    if (conf->parsed()) return cmd_confluence(n, verbose);
    if (app.get_subcommand("rep-check")->parsed()) return cmd_rep_check();
    if (ybe->parsed()) return cmd_ybe(which, mode, seed);
    if (tr->parsed()) return cmd_trace(n, expr_text, at_one);
    if (idem->parsed()) return cmd_idempotents();
    if (cry->parsed()) return cmd_crystal();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const index_out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
