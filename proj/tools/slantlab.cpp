// slantlab: command-line front end for the exact slant Toeplitz toolkit.
//
// Exit codes: 0 success, 1 a verification failed (or --strict met an
// inconclusive scan), 2 usage, parse or I/O error.

#include "slantlab/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace slantlab;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
  }
};

struct Options {
  Output out;
  std::uint64_t seed = 1;
  unsigned jobs = default_jobs();

  // apply / matrix
  std::string word;
  std::string poly;
  std::size_t rows = 8;
  std::size_t cols = 8;
  std::string basis = "monomial";
  std::string format = "json";

  // commutator / theorem / lemma
  std::string f, g, pbar, phi = "0", psi = "0";
  std::string a = "1", b = "1";
  long N = 1;
  std::optional<Degree> kmax;
  bool strict = false;

  // verify
  long nmax = 200;
  std::optional<long> count;
  std::string variant = "zbar2";
  long tmax = 100;
  std::optional<long> max_n;
  bool full_log = false;
};

Json suite_summary(const std::vector<SuiteResult>& suites) {
  Json list = Json::array();
  bool passed = true;
  for (const auto& s : suites) {
    list.push_back(suite_json(s));
    passed = passed && s.passed();
  }
  return with_schema({{"passed", passed}, {"suites", list}});
}

int finish(const Options& o, const std::vector<SuiteResult>& suites) {
  const Json j = suite_summary(suites);
  o.out.write(dump(j));
  return j["passed"].get<bool>() ? kOk : kFailed;
}

int run_apply(const Options& o) {
  const OperatorExpr expr = parse_word(o.word);
  const AnalyticPoly p = parse_poly(o.poly);
  const AnalyticPoly out = apply_expr(expr, p);
  o.out.write(dump(with_schema({{"word", format_word(expr)}, {"input", poly_json(p)}, {"output", poly_json(out)}})));
  return kOk;
}

int run_matrix(const Options& o) {
  if (o.rows == 0 || o.cols == 0) throw std::invalid_argument("--rows and --cols must be positive");
  const OperatorExpr expr = parse_word(o.word);
  const OperatorMatrix m = build_matrix(expr, o.rows - 1, o.cols - 1, o.jobs);
  const bool ortho = o.basis == "orthonormal";
  if (o.format == "csv") o.out.write(ortho ? orthonormal_csv(m) : matrix_csv(m));
  else o.out.write(dump(ortho ? orthonormal_matrix_json(m, format_word(expr)) : matrix_json(m, format_word(expr))));
  return kOk;
}

int run_commutator(const Options& o) {
  const HarmonicSymbol f = parse_symbol(o.f), g = parse_symbol(o.g);
  const long N = std::max({f.coanalytic_degree(), g.coanalytic_degree(), 0L});
  const Degree bound = o.kmax.value_or(default_scan_bound(f.analytic(), g.analytic(), N));
  o.out.write(dump(with_schema(commutator_json(scan_commutator(f, g, bound, o.jobs)))));
  return kOk;
}

int run_theorem(const Options& o) {
  const Verdict v = theorem_verdict(parse_symbol(o.pbar), parse_poly(o.phi), parse_poly(o.psi), o.kmax, o.jobs);
  o.out.write(dump(with_schema(verdict_json(v))));
  return o.strict && v.kind == VerdictKind::InconclusiveWithinBound ? kFailed : kOk;
}

int run_lemma(const Options& o) {
  const Verdict v =
      lemma_verdict(parse_rational(o.a), parse_rational(o.b), o.N, parse_poly(o.phi), parse_poly(o.psi), o.kmax, o.jobs);
  o.out.write(dump(with_schema(verdict_json(v))));
  return o.strict && v.kind == VerdictKind::InconclusiveWithinBound ? kFailed : kOk;
}

int run_verify_lemmas(const Options& o) {
  const long count = o.count.value_or(500);
  return finish(o, {suite_wstar_w(o.nmax), suite_norm_bounds(o.seed, count, 100, o.nmax),
                    suite_intertwining(o.seed, count)});
}

int run_verify_remark(const Options& o) {
  const RemarkVariant v = parse_remark_variant(o.variant);
  const SuiteResult s = v == RemarkVariant::Zbar2 ? suite_remark_zbar2() : suite_remark_zbar3();
  Json j = remark_json(remark_counterexample(v));
  j["passed"] = s.passed();
  j["checks"] = {{"cases", s.cases}, {"failures", s.failures}, {"failureSamples", s.failure_samples}};
  if (v == RemarkVariant::Zbar2) j["commutatorK4S0"] = s.details["commutatorK4S0"];
  o.out.write(dump(with_schema(j)));
  return s.passed() ? kOk : kFailed;
}

int run_verify_identities(const Options& o) {
  IdentityAuditOptions opt;
  opt.instances = o.count.value_or(opt.instances);
  opt.log_all = o.full_log;
  return finish(o, {suite_identities(o.seed, opt, o.jobs)});
}

int run_verify_systems(const Options& o) { return finish(o, {suite_systems(o.tmax, o.max_n.value_or(6))}); }

int run_verify_rank(const Options& o) { return finish(o, {suite_rank(o.max_n.value_or(8))}); }

int run_verify_commutativity(const Options& o) {
  const long count = o.count.value_or(200);
  return finish(o, {suite_sufficiency(o.seed, count, 4, 5, 40, o.jobs), suite_necessity(o.seed, count, 3, 4, o.jobs)});
}

int run_verify_coherence(const Options& o) {
  return finish(o, {suite_coherence(o.seed, o.count.value_or(50), 64, 1e-12, o.jobs)});
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out.path, "Write the report here instead of stdout");
  cmd->add_option("--jobs", o.jobs, "Worker threads (default: SLANT_LAB_JOBS or 1)")->check(CLI::PositiveNumber);
}

void add_seeded(CLI::App* cmd, Options& o) {
  add_common(cmd, o);
  cmd->add_option("--seed", o.seed, "Seed for randomized instances");
  cmd->add_option("--count", o.count, "Number of random instances");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact slant Toeplitz operators on the Bergman space"};
  app.require_subcommand(1);
  int (*action)(const Options&) = nullptr;

  auto* apply = app.add_subcommand("apply", "Apply an operator word to an analytic polynomial");
  apply->add_option("--word", o.word, "Operator word, e.g. \"B[z + zbar] W*\"")->required();
  apply->add_option("--poly", o.poly, "Analytic polynomial, e.g. \"z^4 - 1/2\"")->required();
  add_common(apply, o);
  apply->callback([&] { action = run_apply; });

  auto* matrix = app.add_subcommand("matrix", "Truncated matrix of an operator word");
  matrix->add_option("--word", o.word, "Operator word")->required();
  matrix->add_option("--rows", o.rows, "Number of rows (output degrees 0..rows-1)");
  matrix->add_option("--cols", o.cols, "Number of columns (input degrees 0..cols-1)");
  matrix->add_option("--basis", o.basis, "monomial (exact) or orthonormal (floating point)")
      ->check(CLI::IsMember({"monomial", "orthonormal"}));
  matrix->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(matrix, o);
  matrix->callback([&] { action = run_matrix; });

  auto* comm = app.add_subcommand("commutator", "Scan [B_f, B_g] z^k for k = 0..kmax");
  comm->add_option("--f", o.f, "Symbol f")->required();
  comm->add_option("--g", o.g, "Symbol g")->required();
  comm->add_option("--kmax", o.kmax, "Largest input degree (default: 2(deg f + deg g + 2N + 4))");
  add_common(comm, o);
  comm->callback([&] { action = run_commutator; });

  auto* theorem = app.add_subcommand("theorem", "Verdict for f = pbar + phi, g = pbar + psi");
  theorem->add_option("--pbar", o.pbar, "Co-analytic part, e.g. \"zbar^2 + zbar\"")->required();
  theorem->add_option("--phi", o.phi, "Analytic polynomial phi");
  theorem->add_option("--psi", o.psi, "Analytic polynomial psi");
  theorem->add_option("--kmax", o.kmax, "Scan bound (default: 2(deg phi + deg psi + 2N + 4))");
  theorem->add_flag("--strict", o.strict, "Exit 1 on an inconclusive scan");
  add_common(theorem, o);
  theorem->callback([&] { action = run_theorem; });

  auto* lemma = app.add_subcommand("lemma", "Verdict for f = a zbar^N + phi, g = b zbar^N + psi");
  lemma->add_option("--a", o.a, "Rational a");
  lemma->add_option("--b", o.b, "Rational b");
  lemma->add_option("--N", o.N, "Power of zbar")->check(CLI::PositiveNumber);
  lemma->add_option("--phi", o.phi, "Analytic polynomial phi");
  lemma->add_option("--psi", o.psi, "Analytic polynomial psi");
  lemma->add_option("--kmax", o.kmax, "Scan bound");
  lemma->add_flag("--strict", o.strict, "Exit 1 on an inconclusive scan");
  add_common(lemma, o);
  lemma->callback([&] { action = run_lemma; });

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->require_subcommand(1);

  auto* v_lemmas = verify->add_subcommand("lemmas", "W*W, norm bounds of W*, and T_phi W = W T_phi(z^2)");
  v_lemmas->add_option("--nmax", o.nmax, "Largest n in the monomial checks");
  add_seeded(v_lemmas, o);
  v_lemmas->callback([&] { action = run_verify_lemmas; });

  auto* v_ident = verify->add_subcommand("identities", "Audit the printed coefficient identities against the engine");
  v_ident->add_flag("--full", o.full_log, "Log every printed mismatch, not a sample");
  add_seeded(v_ident, o);
  v_ident->callback([&] { action = run_verify_identities; });

  auto* v_remark = verify->add_subcommand("remark", "The zbar^2 and zbar^3 counterexamples");
  v_remark->add_option("--variant", o.variant, "zbar2 or zbar3")->check(CLI::IsMember({"zbar2", "zbar3"}));
  add_common(v_remark, o);
  v_remark->callback([&] { action = run_verify_remark; });

  auto* v_systems = verify->add_subcommand("systems", "Invertibility of the 2x2 coefficient systems");
  v_systems->add_option("--tmax", o.tmax, "Largest t")->check(CLI::NonNegativeNumber);
  v_systems->add_option("--max-n", o.max_n, "Largest N")->check(CLI::PositiveNumber);
  add_common(v_systems, o);
  v_systems->callback([&] { action = run_verify_systems; });

  auto* v_rank = verify->add_subcommand("rank", "Factorization and ranks of the pbar rank argument");
  v_rank->add_option("--max-n", o.max_n, "Largest N")->check(CLI::PositiveNumber);
  add_common(v_rank, o);
  v_rank->callback([&] { action = run_verify_rank; });

  auto* v_comm = verify->add_subcommand("commutativity", "Sufficiency and necessity campaigns");
  add_seeded(v_comm, o);
  v_comm->callback([&] { action = run_verify_commutativity; });

  auto* v_coh = verify->add_subcommand("coherence", "Matrix construction routes and the orthonormal export");
  add_seeded(v_coh, o);
  v_coh->callback([&] { action = run_verify_coherence; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
