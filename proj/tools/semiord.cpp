// Command-line interface: dominance decisions over the coefficientwise
// order, spectrum sweeps, the polynomial identity check, jet arithmetic and
// exact evaluation. Output is deterministic byte-for-byte for fixed inputs.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semiord/curious.hpp"
#include "semiord/decision.hpp"
#include "semiord/io.hpp"
#include "semiord/jets.hpp"

namespace {

using namespace semiord;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUndecided = 2;

Polynomial load_polynomial(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw parse_error("cannot open '" + arg + "'");
    Json j = Json::parse(in, nullptr, true, true);
    return polynomial_from_json(j);
  }
  return parse_univariate_literal(arg);
}

std::vector<Rational> parse_point(const std::string& arg) {
  std::vector<Rational> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

int run_dominance(const std::string& x_arg, const std::string& y_arg, unsigned kmax,
                  unsigned nmax, bool as_json) {
  const PositiveConstantPolynomial x(load_polynomial(x_arg));
  const PositiveConstantPolynomial y(load_polynomial(y_arg));
  x.poly().require_same_vars(y.poly());
  const Polynomial u = power_universal(x.variable_count());
  const DecisionOutcome out = dominance_decide(x, y, u, SearchBudget{kmax, nmax});

  if (as_json) {
    Json j;
    j["outcome"] = to_string(out.kind);
    if (out.power) j["power"] = witness_to_json(*out.power);
    if (out.catalytic) j["catalytic"] = witness_to_json(*out.catalytic);
    j["spectrum"] = verdict_to_json(out.spectrum);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << to_string(out.kind) << "\n";
    if (out.power) std::cout << "power witness: " << witness_to_json(*out.power).dump() << "\n";
    if (out.catalytic)
      std::cout << "catalytic witness: " << witness_to_json(*out.catalytic).dump() << "\n";
    std::cout << "spectrum: " << verdict_to_json(out.spectrum).dump() << "\n";
  }
  return out.kind == DecisionOutcome::Kind::BudgetExhausted ? kExitUndecided : kExitOk;
}

int run_spectrum(const std::string& x_arg, const std::string& y_arg, unsigned resolution,
                 const std::string& out_path) {
  const PositiveConstantPolynomial x(load_polynomial(x_arg));
  const PositiveConstantPolynomial y(load_polynomial(y_arg));
  x.poly().require_same_vars(y.poly());
  const Polynomial u = power_universal(x.variable_count());

  const auto sweep = enumerate_spectrum_boundary(x, y, u, resolution);
  std::ostringstream lines;
  for (const auto& rec : sweep) lines << sweep_record_to_ndjson(rec) << "\n";
  if (out_path.empty()) {
    std::cout << lines.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write '" + out_path + "'");
    out << lines.str();
  }

  const DominanceVerdict verdict = strict_dominance_check(x, y, u);
  std::cout << "records: " << sweep.size() << "\n";
  std::cout << "verdict: " << verdict_to_json(verdict).dump() << "\n";
  return verdict.kind == DominanceVerdict::Kind::UnknownHeuristic ? kExitUndecided : kExitOk;
}

int run_identity(unsigned n) {
  const CuriousIdentityReport rep = verify_curious_identity(n);
  if (!rep.equal || !rep.matches_closed_form) {
    std::cout << "UNEQUAL n=" << n << "\n";
    return kExitInput;
  }
  std::cout << "EQUAL n=" << n << ": " << rep.grouped_terms << " terms, " << rep.monomials
            << " monomials\n";
  return kExitOk;
}

int run_jet(unsigned n, const std::string& signs_arg, const std::string& expr) {
  if (n < 1) throw parse_error("jet length must be at least 1");
  const SignSequence eps =
      signs_arg.empty() ? SignSequence(n, 1) : parse_sign_sequence(signs_arg, n);
  const Jet value = parse_jet_expression(expr, n);
  std::cout << "jet: " << format_jet(value) << "\n";
  std::cout << "positive: " << (jet_is_positive(value, eps) ? "true" : "false") << "\n";
  std::cout << "positivator: " << (jet_in_positivator(value, eps) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_eval(const std::string& p_arg, const std::string& at_arg, bool tropical) {
  const Polynomial p = load_polynomial(p_arg);
  const std::vector<Rational> point = parse_point(at_arg);
  if (tropical) {
    const auto v = tropical_eval(p, point);
    std::cout << "tropical: " << (v ? v->str() : "-inf") << "\n";
  } else {
    std::cout << "value: " << point_eval(p, point).str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact preordered-semiring toolkit: dominance witnesses, spectra, jets"};
  app.require_subcommand(1);

  std::string x_arg, y_arg, p_arg, out_path, signs_arg, expr_arg, at_arg;
  unsigned kmax = 24, nmax = 24, resolution = 10, n_param = 0;
  bool as_json = false, tropical = false;

  auto* dom = app.add_subcommand("dominance", "decide a x <= a y for some nonzero a");
  dom->add_option("x", x_arg, "polynomial (JSON file or univariate literal)")->required();
  dom->add_option("y", y_arg, "polynomial (JSON file or univariate literal)")->required();
  dom->add_option("--kmax", kmax, "largest power-universal exponent");
  dom->add_option("--nmax", nmax, "largest power exponent");
  dom->add_flag("--json", as_json, "emit one JSON object");

  auto* spec = app.add_subcommand("spectrum", "sweep the projective spectrum and export lev values");
  spec->add_option("x", x_arg, "polynomial")->required();
  spec->add_option("y", y_arg, "polynomial")->required();
  spec->add_option("--resolution", resolution, "simplex grid resolution");
  spec->add_option("--out", out_path, "NDJSON output file (default: stdout)");

  auto* ident = app.add_subcommand("identity", "verify the two-sided polynomial identity");
  ident->add_option("--n", n_param, "sequence length parameter")->required();

  auto* jet = app.add_subcommand("jet", "evaluate a jet expression and report positivity");
  jet->add_option("--n", n_param, "jet length (truncation order)")->required();
  jet->add_option("--signs", signs_arg, "sign sequence, e.g. \"+,-\" (default all +)");
  jet->add_option("expr", expr_arg, "expression over +, -, *, inv(), X^k")->required();

  auto* ev = app.add_subcommand("eval", "evaluate a polynomial exactly");
  ev->add_option("poly", p_arg, "polynomial")->required();
  ev->add_option("--at", at_arg, "comma-separated rational coordinates")->required();
  ev->add_flag("--tropical", tropical, "Newton-polytope support value instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dom->parsed()) return run_dominance(x_arg, y_arg, kmax, nmax, as_json);
    if (spec->parsed()) return run_spectrum(x_arg, y_arg, resolution, out_path);
    if (ident->parsed()) return run_identity(n_param);
    if (jet->parsed()) return run_jet(n_param, signs_arg, expr_arg);
    if (ev->parsed()) return run_eval(p_arg, at_arg, tropical);
  } catch (const semiord::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
