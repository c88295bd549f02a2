// Command-line front end: Eisenstein parts of eta quotients and theta series,
// q-expansions, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eisproj/fixtures.hpp"
#include "eisproj/serialize.hpp"

using namespace eisproj;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapacityError = 3;

struct Options {
  Int level = 0;
  std::string eta;
  std::string gram;
  std::string diag;
  int weight = 0;
  std::vector<std::string> chars;
  Int d = 1;
  Int prec = 20;
  std::string suite = "all";
  std::string json_out;
  double cap = kDefaultExpSumCap;
};

void emit(const Json& j, const Options& o) {
  if (o.json_out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(o.json_out);
  if (!out) throw std::invalid_argument("cannot write " + o.json_out);
  out << j.dump(2) << "\n";
}

Json cusp_table(const CuspOracle& f, Int N) {
  Json rows = Json::array();
  for (const Cusp& x : cusp_representatives(N)) rows.push_back({{"cusp", to_json(x)}, {"value", to_json(f(x))}});
  return rows;
}

int cmd_project_eta(const Options& o) {
  const EtaQuotient f = parse_eta(o.level, o.eta);
  const auto wc = weight_character(f);
  const auto comb = project(wc.k, f.level, wc.chi, eta_oracle(f));
  const QExpansion E = to_qexp(comb, o.prec);
  emit({{"input", {{"level", f.level}, {"eta", to_string(f)}, {"weight", wc.k}, {"character", to_json(wc.chi)}}},
        {"constant_terms", cusp_table(eta_oracle(f), f.level)},
        {"combination", to_json(comb)},
        {"eisenstein_part", to_json(E)},
        {"residual", to_json(eta_qexp(f.r, o.prec) - E)}},
       o);
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_project_theta(const Options& o) {
  if (o.gram.empty() == o.diag.empty()) throw std::invalid_argument("give exactly one of --gram and --diag");
  const QuadraticForm F = o.gram.empty() ? QuadraticForm::parse_diag(o.diag) : QuadraticForm::parse_gram(read_file(o.gram));
  const auto lc = level_character(F);
  const auto comb = project(lc.k, lc.level, lc.chi, theta_oracle(F, o.cap));
  const QExpansion E = to_qexp(comb, o.prec);
  emit({{"input", {{"gram", F.gram()}, {"level", lc.level}, {"weight", lc.k}, {"character", to_json(lc.chi)}}},
        {"constant_terms", cusp_table(theta_oracle(F, o.cap), lc.level)},
        {"combination", to_json(comb)},
        {"eisenstein_part", to_json(E)},
        {"residual", to_json(theta_qexp(F, o.prec) - E)}},
       o);
  return 0;
}

int cmd_qexp_eta(const Options& o) {
  const EtaQuotient f = parse_eta(o.level, o.eta);
  emit({{"eta", to_string(f)}, {"qexp", to_json(eta_qexp(f.r, o.prec))}}, o);
  return 0;
}

int cmd_qexp_eisenstein(const Options& o) {
  if (o.chars.size() != 2) throw std::invalid_argument("--char needs two characters: EPS PSI");
  const auto eps = parse_character(o.chars[0]), psi = parse_character(o.chars[1]);
  const QExpansion E = o.weight == 2 && eps.is_trivial() && psi.is_trivial() && o.d > 1
                           ? weight2_Ld_qexp(o.d, o.prec)
                           : eisenstein_qexp(o.weight, eps, psi, o.d, o.prec);
  emit({{"weight", o.weight}, {"eps", to_json(eps)}, {"psi", to_json(psi)}, {"d", o.d}, {"qexp", to_json(E)}}, o);
  return 0;
}

int cmd_verify(const Options& o) {
  const std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  Json results = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    for (const auto& r : run_suite(name)) {
      ok = ok && r.passed;
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << name << ": " << r.name << "  [" << r.seconds << " s]";
      if (!r.passed) std::cout << "\n      expected " << r.expected << "\n      actual   " << r.actual;
      std::cout << "\n";
      results.push_back({{"suite", name}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"},
                         {"expected", r.expected}, {"actual", r.actual}, {"seconds", r.seconds}});
    }
  }
  if (!o.json_out.empty()) emit(results, o);
  return ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein parts of modular forms from their constant terms at cusps"};
  app.require_subcommand(1);
  Options o;

  auto add_prec = [&](CLI::App* s) { s->add_option("--prec", o.prec, "Truncation: coefficients through q^T")->check(CLI::NonNegativeNumber); };
  auto add_json = [&](CLI::App* s) { s->add_option("--json-out", o.json_out, "Write JSON to this file instead of stdout"); };

  auto* pe = app.add_subcommand("project-eta", "Eisenstein part of an eta quotient");
  pe->add_option("--level", o.level, "Level N")->required()->check(CLI::PositiveNumber);
  pe->add_option("--eta", o.eta, "Exponents \"d:r,d:r,...\"")->required();
  add_prec(pe);
  add_json(pe);

  auto* pt = app.add_subcommand("project-theta", "Eisenstein part of a theta series");
  pt->add_option("--gram", o.gram, "File: dimension, then the rows of the Gram matrix");
  pt->add_option("--diag", o.diag, "Diagonal form \"1,1,3,3\"");
  pt->add_option("--cap", o.cap, "Largest number of residue vectors one exponential sum may visit")
      ->check(CLI::PositiveNumber);
  add_prec(pt);
  add_json(pt);

  auto* qe = app.add_subcommand("qexp-eta", "q-expansion of an eta quotient");
  qe->add_option("--level", o.level, "Level N")->required()->check(CLI::PositiveNumber);
  qe->add_option("--eta", o.eta, "Exponents \"d:r,d:r,...\"")->required();
  add_prec(qe);
  add_json(qe);

  auto* qs = app.add_subcommand("qexp-eisenstein", "q-expansion of E_k(eps, psi; dz), or L_d for k = 2 and trivial characters");
  qs->add_option("--weight", o.weight, "Weight k")->required()->check(CLI::PositiveNumber);
  qs->add_option("--char", o.chars, "EPS PSI as Kronecker labels (\"-4\") or \"N:e1,e2\"")->expected(2)->required();
  qs->add_option("--d", o.d, "d in E_k(eps, psi; dz)")->check(CLI::PositiveNumber);
  add_prec(qs);
  add_json(qs);

  auto* ve = app.add_subcommand("verify", "Run verification suites");
  std::string known = "all";
  for (const auto& n : suite_names()) known += ", " + n;
  ve->add_option("--suite", o.suite, "One of: " + known);
  add_json(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*pe) return cmd_project_eta(o);
    if (*pt) return cmd_project_theta(o);
    if (*qe) return cmd_qexp_eta(o);
    if (*qs) return cmd_qexp_eisenstein(o);
    return cmd_verify(o);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
