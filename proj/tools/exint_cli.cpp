// Command-line front end: runs check suites and emits exact artifacts as
// JSON.  Exit codes: 0 all checks passed, 1 at least one failure or errored
// check, 2 bad configuration or parse error, 3 arithmetic memory cap hit.

#include <gmp.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "exint/auxops.hpp"
#include "exint/bethe.hpp"
#include "exint/charges.hpp"
#include "exint/errors.hpp"
#include "exint/hgen.hpp"
#include "exint/mpa.hpp"
#include "exint/ness.hpp"
#include "exint/report.hpp"
#include "exint/rmat.hpp"
#include "exint/sampling.hpp"
#include "exint/scalar.hpp"
#include "exint/serialize.hpp"
#include "exint/spin_matrix.hpp"

namespace {

using namespace exint;

// ---------------------------------------------------------------------------
// Soft memory cap on exact arithmetic.  When EXINT_MAX_BYTES is set, every
// limb allocation is counted; crossing the cap aborts the process with exit
// code 3 rather than letting a runaway exact computation swallow the host.

std::atomic<long long> g_gmp_bytes{0};
long long g_gmp_cap = -1;

void count_bytes(long long delta) {
  const long long now =
      g_gmp_bytes.fetch_add(delta, std::memory_order_relaxed) + delta;
  if (g_gmp_cap >= 0 && now > g_gmp_cap) {
    std::fprintf(stderr,
                 "exint: exact-arithmetic memory cap exceeded "
                 "(%lld bytes, EXINT_MAX_BYTES=%lld)\n",
                 now, g_gmp_cap);
    std::_Exit(3);
  }
}

void* capped_malloc(size_t size) {
  count_bytes(static_cast<long long>(size));
  void* p = std::malloc(size);
  if (p == nullptr) std::abort();
  return p;
}

void* capped_realloc(void* ptr, size_t old_size, size_t new_size) {
  count_bytes(static_cast<long long>(new_size) -
              static_cast<long long>(old_size));
  void* p = std::realloc(ptr, new_size);
  if (p == nullptr) std::abort();
  return p;
}

void capped_free(void* ptr, size_t size) {
  g_gmp_bytes.fetch_sub(static_cast<long long>(size),
                        std::memory_order_relaxed);
  std::free(ptr);
}

void install_memory_cap() {
  const char* env = std::getenv("EXINT_MAX_BYTES");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long long cap = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || cap < 0) {
    std::fprintf(stderr, "exint: ignoring malformed EXINT_MAX_BYTES=%s\n", env);
    return;
  }
  g_gmp_cap = cap;
  mp_set_memory_functions(&capped_malloc, &capped_realloc, &capped_free);
}

// ---------------------------------------------------------------------------
// Options and parsed context shared by the subcommands.

struct Options {
  int n = 3;
  int alpha_max = 4;
  int beta_max = 4;
  int kmax = 2;
  int samples = 2;
  std::uint64_t seed = 12345;
  int jobs = 1;
  bool timing = false;
  std::string lambda = "3/7";
  std::string mu = "1/5";
  std::string eta = "2/9";
  std::string epsilon = "1/2";
  std::string out;
};

struct Ctx {
  Options opt;
  Scalar lambda, mu, eta;
  Rational epsilon;
};

Ctx make_ctx(const Options& opt) {
  Ctx ctx;
  ctx.opt = opt;
  ctx.lambda = Scalar::parse(opt.lambda);
  ctx.mu = Scalar::parse(opt.mu);
  ctx.eta = Scalar::parse(opt.eta);
  ctx.epsilon = parse_rational(opt.epsilon);
  if (opt.n < 1) throw Error("--n must be >= 1");
  if (opt.alpha_max < 1) throw Error("--alpha-max must be >= 1");
  if (opt.beta_max < 1) throw Error("--beta-max must be >= 1");
  if (opt.kmax < 1) throw Error("--kmax must be >= 1");
  if (opt.samples < 0) throw Error("--samples must be >= 0");
  if (opt.jobs < 1) throw Error("--jobs must be >= 1");
  return ctx;
}

void write_output(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot open output file: " + out);
  f << text;
}

// ---------------------------------------------------------------------------
// Check tasks.  Each task carries a skeleton result so that a throwing check
// still reports under its own name instead of crashing the suite.

struct Task {
  CheckResult skeleton;
  std::function<CheckResult()> run;
};

Task task(const std::string& name, Json params, const char* label,
          std::function<CheckResult()> fn) {
  Task t;
  t.skeleton.check = name;
  t.skeleton.params = std::move(params);
  t.skeleton.label = label;
  t.run = std::move(fn);
  return t;
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, int jobs,
                                   bool timing) {
  std::vector<CheckResult> results(tasks.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const size_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
      if (idx >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = tasks[idx].run();
      } catch (const Error& e) {
        r = tasks[idx].skeleton;
        r.status = kStatusError;
        r.witness["error"] = e.what();
      }
      if (timing) {
        const auto stop = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       stop - start)
                       .count();
      }
      results[idx] = std::move(r);
    }
  };
  const int threads =
      std::min<int>(jobs, static_cast<int>(tasks.size()) > 0
                              ? static_cast<int>(tasks.size())
                              : 1);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

// ---------------------------------------------------------------------------
// Suite builders.  Every suite draws its own sampler from the shared seed so
// that the parameters of one suite do not depend on which others run.

void add_forms(std::vector<Task>& tasks, const Ctx& ctx) {
  std::vector<Scalar> points = {ctx.lambda};
  Sampler sampler(ctx.opt.seed);
  for (int s = 0; s < ctx.opt.samples; ++s) points.push_back(sampler.off_locus());
  for (const Scalar& x : points) {
    const int alpha = ctx.opt.alpha_max;
    tasks.push_back(task("generator-forms-agreement",
                         Json{{"alpha", alpha}, {"x", x.str()}}, kLabelProven,
                         [alpha, x] { return check_h_forms(alpha, x); }));
  }
}

void add_nullspace(std::vector<Task>& tasks, const Ctx& ctx) {
  for (int alpha = 1; alpha <= ctx.opt.alpha_max; ++alpha) {
    const Scalar x = ctx.lambda;
    tasks.push_back(task("generator-null-pair",
                         Json{{"alpha", alpha}, {"x", x.str()}}, kLabelProven,
                         [alpha, x] { return check_null(alpha, x); }));
    tasks.push_back(task("residue-tensor-vectors", Json{{"alpha", alpha}},
                         kLabelProven,
                         [alpha] { return check_residue_vectors(alpha); }));
  }
}

void add_nilpotent(std::vector<Task>& tasks, const Ctx& ctx) {
  for (int alpha = 1; alpha <= ctx.opt.alpha_max; ++alpha) {
    const Scalar x = ctx.lambda;
    tasks.push_back(task("generator-nilpotency",
                         Json{{"alpha", alpha}, {"x", x.str()}}, kLabelProven,
                         [alpha, x] { return check_nilpotency(alpha, x); }));
    tasks.push_back(task("residue-tensor-recursion", Json{{"alpha", alpha}},
                         kLabelProven,
                         [alpha] { return check_x_recursion(alpha); }));
  }
}

void add_lemma1(std::vector<Task>& tasks, const Ctx& ctx) {
  std::vector<Scalar> points = {ctx.lambda};
  Sampler sampler(ctx.opt.seed);
  for (int s = 0; s < ctx.opt.samples; ++s) points.push_back(sampler.off_locus());
  for (const Scalar& x : points) {
    const int alpha_max = ctx.opt.alpha_max;
    tasks.push_back(task("expansion-block-commutators",
                         Json{{"alpha_max", alpha_max}, {"x", x.str()}},
                         kLabelProven,
                         [x, alpha_max] { return check_lemma1(x, alpha_max); }));
  }
}

void add_lemma2(std::vector<Task>& tasks, const Ctx& ctx) {
  std::vector<Scalar> points = {ctx.lambda};
  Sampler sampler(ctx.opt.seed);
  for (int s = 0; s < ctx.opt.samples; ++s) points.push_back(sampler.off_locus());
  for (const Scalar& x : points) {
    const int alpha_max = ctx.opt.alpha_max;
    tasks.push_back(task("expansion-block-algebra",
                         Json{{"alpha_max", alpha_max}, {"x", x.str()}},
                         kLabelProven,
                         [x, alpha_max] { return check_lemma2(x, alpha_max); }));
  }
}

std::vector<std::pair<Scalar, Scalar>> argument_pairs(const Ctx& ctx) {
  std::vector<std::pair<Scalar, Scalar>> pairs = {{ctx.lambda, ctx.mu}};
  Sampler sampler(ctx.opt.seed);
  for (int s = 0; s < ctx.opt.samples; ++s)
    pairs.push_back(sampler.argument_pair());
  return pairs;
}

void add_rll(std::vector<Task>& tasks, const Ctx& ctx) {
  for (const auto& [lam, mu] : argument_pairs(ctx)) {
    const int alpha_max = ctx.opt.alpha_max;
    tasks.push_back(task(
        "local-exchange-relation",
        Json{{"lambda", lam.str()}, {"mu", mu.str()}, {"alpha_max", alpha_max}},
        kLabelProven,
        [lam, mu, alpha_max] { return check_rll(lam, mu, alpha_max); }));
  }
}

void add_rtt(std::vector<Task>& tasks, const Ctx& ctx) {
  for (const auto& [lam, mu] : argument_pairs(ctx)) {
    const int n = ctx.opt.n;
    const int alpha_max = ctx.opt.alpha_max;
    tasks.push_back(task("monodromy-exchange-relation",
                         Json{{"n", n},
                              {"lambda", lam.str()},
                              {"mu", mu.str()},
                              {"alpha_max", alpha_max}},
                         kLabelProven, [n, lam, mu, alpha_max] {
                           return check_rtt(n, lam, mu, alpha_max);
                         }));
  }
}

void add_ybe(std::vector<Task>& tasks, const Ctx& ctx) {
  std::vector<std::array<Scalar, 3>> triples = {{ctx.lambda, ctx.mu, ctx.eta}};
  Sampler sampler(ctx.opt.seed);
  for (int s = 0; s < ctx.opt.samples; ++s)
    triples.push_back(sampler.argument_triple());
  for (const auto& t3 : triples) {
    const int beta_max = ctx.opt.beta_max;
    tasks.push_back(task("braid-consistency",
                         Json{{"lambda", t3[0].str()},
                              {"mu", t3[1].str()},
                              {"eta", t3[2].str()},
                              {"beta_max", beta_max}},
                         kLabelEmpirical, [t3, beta_max] {
                           return check_ybe(t3[0], t3[1], t3[2], beta_max);
                         }));
  }
}

void add_rprops(std::vector<Task>& tasks, const Ctx& ctx) {
  for (const auto& [lam, mu] : argument_pairs(ctx)) {
    const int alpha_max = ctx.opt.alpha_max;
    tasks.push_back(task(
        "intertwiner-properties",
        Json{{"lambda", lam.str()}, {"mu", mu.str()}, {"alpha_max", alpha_max}},
        kLabelProven, [lam, mu, alpha_max] {
          return check_r_properties(lam, mu, alpha_max);
        }));
  }
}

void add_commute(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Scalar lam = ctx.lambda, mu = ctx.mu;
  tasks.push_back(task("transfer-commute",
                       Json{{"n", n}, {"lambda", lam.str()}, {"mu", mu.str()}},
                       kLabelProven,
                       [n, lam, mu] { return check_commute(n, lam, mu); }));
  tasks.push_back(task("transfer-structure",
                       Json{{"n", n}, {"lambda", lam.str()}}, kLabelProven,
                       [n, lam] { return check_transfer_structure(n, lam); }));
  const long k_cap = std::min<long>(n, 2);
  for (long k_out = 0; k_out <= k_cap; ++k_out) {
    for (long k_in = 0; k_in <= k_cap; ++k_in) {
      tasks.push_back(task("magnetization-commutator",
                           Json{{"n", n},
                                {"k_out", k_out},
                                {"k_in", k_in},
                                {"lambda", lam.str()}},
                           kLabelProven, [n, k_out, k_in, lam] {
                             return check_magnetization(n, k_out, k_in, lam);
                           }));
    }
  }
}

void add_tilde(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Scalar lam = ctx.lambda, mu = ctx.mu;
  tasks.push_back(task("weighted-transfer-commute",
                       Json{{"n", n}, {"lambda", lam.str()}, {"mu", mu.str()}},
                       kLabelEmpirical,
                       [n, lam, mu] { return check_tilde_commute(n, lam, mu); }));
}

void add_transpose(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Scalar lam = ctx.lambda;
  tasks.push_back(task("transpose-relations",
                       Json{{"n", n}, {"lambda", lam.str()}}, kLabelProven,
                       [n, lam] { return check_transpose_relations(n, lam); }));
}

void add_shifts(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Scalar lam = ctx.lambda;
  struct Pick {
    int m, q, l;
  };
  const std::vector<Pick> picks = {{0, 1, 1}, {0, 1, 2}, {0, 2, 1}, {1, 1, 2}};
  for (const Pick& p : picks) {
    if (p.m >= n) continue;
    const char* label = p.m == 0 ? kLabelProven : kLabelEmpirical;
    tasks.push_back(task("vacuum-shift-relations",
                         Json{{"n", n},
                              {"m", p.m},
                              {"q", p.q},
                              {"l", p.l},
                              {"lambda", lam.str()}},
                         label, [n, p, lam] {
                           return check_shift_relations(n, p.m, p.q, p.l, lam);
                         }));
  }
}

void add_deps(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const std::vector<Scalar> lambdas = {ctx.lambda, ctx.mu};
  Json lam_json = Json::array();
  for (const auto& l : lambdas) lam_json.push_back(l.str());
  for (int q = 0; q <= std::min(n, 2); ++q) {
    const int l_max = n - q + 2;
    tasks.push_back(task(
        "element-dependencies",
        Json{{"n", n}, {"q", q}, {"l_max", l_max}, {"lambdas", lam_json}},
        kLabelProven, [n, q, lambdas, l_max] {
          return discover_dependencies(n, q, lambdas, l_max).report;
        }));
  }
}

void add_ness(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Rational eps = ctx.epsilon;
  const Json params = Json{{"n", n}, {"epsilon", rational_str(eps)}};
  tasks.push_back(task("fixed-point-residual", params, kLabelProven,
                       [n, eps] { return check_stationarity(n, eps); }));
  tasks.push_back(task("adjoint-convention", params, kLabelProven,
                       [n, eps] { return check_adjoint_convention(n, eps); }));
  tasks.push_back(task("fixed-point-oracle", params, kLabelEmpirical,
                       [n, eps] { return check_ness_oracle(n, eps); }));
}

void add_charges(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const int k_max = ctx.opt.kmax;
  std::vector<Rational> eps_samples = {ctx.epsilon, Rational(1),
                                       make_rational(3, 5)};
  std::vector<Scalar> lambda_samples = {ctx.lambda, ctx.mu};
  Json params = Json{{"n", n}, {"k_max", k_max}};
  tasks.push_back(task("charge-tower-identities", params, kLabelProven,
                       [n, k_max, eps_samples, lambda_samples] {
                         return check_charge_identities(
                             n, k_max, eps_samples, lambda_samples);
                       }));
}

void add_bethe(std::vector<Task>& tasks, const Ctx& ctx) {
  const int n = ctx.opt.n;
  const Scalar lam = ctx.lambda, mu = ctx.mu;
  tasks.push_back(task("one-particle-action-identity",
                       Json{{"n", n}, {"lambda", lam.str()}, {"mu", mu.str()}},
                       kLabelProven,
                       [n, lam, mu] { return check_uwt(n, lam, mu); }));
  const Scalar spectral = make_problem(n, ctx.epsilon).lambda;
  const auto [re, im] = spectral.to_complex_double();
  const std::complex<double> z(re, im);
  tasks.push_back(task("one-particle-spectrum",
                       Json{{"n", n}, {"lambda", spectral.str()}},
                       kLabelEmpirical,
                       [n, z] { return check_bethe_spectrum(n, z); }));
}

using SuiteBuilder = void (*)(std::vector<Task>&, const Ctx&);

const std::vector<std::pair<std::string, SuiteBuilder>> kSuites = {
    {"rll", &add_rll},           {"rtt", &add_rtt},
    {"ybe", &add_ybe},           {"rprops", &add_rprops},
    {"lemma1", &add_lemma1},     {"lemma2", &add_lemma2},
    {"commute", &add_commute},   {"tilde", &add_tilde},
    {"ness", &add_ness},         {"charges", &add_charges},
    {"bethe", &add_bethe},       {"forms", &add_forms},
    {"nullspace", &add_nullspace}, {"nilpotent", &add_nilpotent},
    {"transpose", &add_transpose}, {"shifts", &add_shifts},
    {"deps", &add_deps},
};

Json suite_config(const std::string& suite, const Ctx& ctx) {
  return Json{{"suite", suite},
              {"n", ctx.opt.n},
              {"alpha_max", ctx.opt.alpha_max},
              {"beta_max", ctx.opt.beta_max},
              {"kmax", ctx.opt.kmax},
              {"lambda", ctx.lambda.str()},
              {"mu", ctx.mu.str()},
              {"eta", ctx.eta.str()},
              {"epsilon", rational_str(ctx.epsilon)},
              {"samples", ctx.opt.samples},
              {"seed", ctx.opt.seed}};
}

int run_check(const std::string& suite, const Options& opt) {
  const Ctx ctx = make_ctx(opt);
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, builder] : kSuites) {
    if (suite == "all" || suite == name) {
      builder(tasks, ctx);
      found = true;
    }
  }
  if (!found) throw Error("unknown suite: " + suite);

  SuiteReport report;
  report.suite = suite;
  report.config = suite_config(suite, ctx);
  report.checks = run_tasks(tasks, opt.jobs, opt.timing);
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.params.dump() < b.params.dump();
                   });
  write_output(report.to_json(opt.timing), opt.out);
  return report.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Artifact emission.

Json ness_artifact(int n, const Rational& epsilon) {
  const LindbladProblem problem = make_problem(n, epsilon);
  const NessResult ness = build_ness(problem);
  const SpinMatrix residual = lindblad_residual(problem, ness.rho);
  Json j;
  j["kind"] = "ness";
  j["n"] = n;
  j["epsilon"] = rational_str(epsilon);
  j["lambda"] = problem.lambda.str();
  j["trace"] = ness.trace.str();
  j["residual_status"] =
      residual == SpinMatrix(n) ? "exact-zero" : "nonzero";
  j["rho"] = spin_matrix_to_json(ness.rho);
  return j;
}

Json charges_artifact(int n, int k_max) {
  Json j;
  j["kind"] = "charges";
  j["n"] = n;
  j["kmax"] = k_max;
  Json arr = Json::array();
  for (int k = 1; k <= k_max; ++k) {
    arr.push_back(Json{{"k", k}, {"matrix", spin_matrix_to_json(charge(n, k))}});
  }
  j["charges"] = arr;
  return j;
}

int run_emit(const std::string& kind, const Options& opt) {
  const Ctx ctx = make_ctx(opt);
  Json j;
  if (kind == "ness") {
    j = ness_artifact(ctx.opt.n, ctx.epsilon);
  } else if (kind == "transfer") {
    j["kind"] = "transfer";
    j["n"] = ctx.opt.n;
    j["lambda"] = ctx.lambda.str();
    j["matrix"] = spin_matrix_to_json(transfer(ctx.opt.n, ctx.lambda));
  } else if (kind == "charges") {
    j = charges_artifact(ctx.opt.n, ctx.opt.kmax);
  } else if (kind == "rblock") {
    j = rmatrix_to_json(build_r(ctx.lambda, ctx.mu, ctx.opt.alpha_max));
  } else {
    throw Error("unknown artifact kind: " + kind);
  }
  write_output(j, opt.out);
  if (kind == "ness" && j["residual_status"] != "exact-zero") return 1;
  return 0;
}

int run_ness(const Options& opt) {
  const Ctx ctx = make_ctx(opt);
  const Json j = ness_artifact(ctx.opt.n, ctx.epsilon);
  write_output(j, opt.out);
  return j["residual_status"] == "exact-zero" ? 0 : 1;
}

int run_charges(const Options& opt) {
  const Ctx ctx = make_ctx(opt);
  Json j = charges_artifact(ctx.opt.n, ctx.opt.kmax);
  const CheckResult identities = check_charge_identities(
      ctx.opt.n, ctx.opt.kmax, {ctx.epsilon, Rational(1), make_rational(3, 5)},
      {ctx.lambda, ctx.mu});
  j["report"] = identities.to_json(opt.timing);
  write_output(j, opt.out);
  return identities.passed() ? 0 : 1;
}

int run_bethe(const Options& opt, bool roots_only) {
  const Ctx ctx = make_ctx(opt);
  const auto [re, im] = ctx.lambda.to_complex_double();
  const std::complex<double> z(re, im);
  Json j;
  j["kind"] = "bethe";
  j["n"] = ctx.opt.n;
  j["lambda"] = ctx.lambda.str();
  Json roots = Json::array();
  for (const BetheRoot& root : solve_bethe(ctx.opt.n, z)) {
    roots.push_back(Json{{"xi", Json::array({root.xi.real(), root.xi.imag()})},
                         {"poly_residual", root.poly_residual},
                         {"equation_residual", root.equation_residual}});
  }
  j["roots"] = roots;
  bool ok = true;
  if (!roots_only) {
    const CheckResult spectrum = check_bethe_spectrum(ctx.opt.n, z);
    j["report"] = spectrum.to_json(opt.timing);
    ok = spectrum.passed();
  }
  write_output(j, opt.out);
  return ok ? 0 : 1;
}

void attach_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "chain length");
  cmd->add_option("--alpha-max", opt.alpha_max, "largest auxiliary sector");
  cmd->add_option("--beta-max", opt.beta_max, "largest triple-sector weight");
  cmd->add_option("--lambda", opt.lambda, "spectral parameter, e.g. 3/7 or 2*i");
  cmd->add_option("--mu", opt.mu, "second spectral parameter");
  cmd->add_option("--eta", opt.eta, "third spectral parameter");
  cmd->add_option("--epsilon", opt.epsilon, "dissipation strength p/q");
  cmd->add_option("--kmax", opt.kmax, "highest charge order");
  cmd->add_option("--samples", opt.samples, "extra seeded parameter draws");
  cmd->add_option("--seed", opt.seed, "sampler seed");
  cmd->add_option("--out", opt.out, "write JSON here instead of stdout");
  cmd->add_option("--jobs", opt.jobs, "parallel check workers");
  cmd->add_flag("--timing", opt.timing, "record per-check wall time");
}

}  // namespace

int main(int argc, char** argv) {
  install_memory_cap();

  CLI::App app{"exact checks for the boundary-driven isotropic chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "exint 1.0.0");

  Options opt;
  std::string suite, kind;
  bool roots_only = false;

  CLI::App* check = app.add_subcommand("check", "run a named check suite");
  check->add_option("suite", suite, "suite name or 'all'")->required();
  attach_common(check, opt);

  CLI::App* emit = app.add_subcommand("emit", "write an exact artifact");
  emit->add_option("kind", kind, "ness | transfer | charges | rblock")
      ->required();
  attach_common(emit, opt);

  CLI::App* ness = app.add_subcommand("ness", "exact fixed point as JSON");
  attach_common(ness, opt);

  CLI::App* charges =
      app.add_subcommand("charges", "conserved operators with identity report");
  attach_common(charges, opt);

  CLI::App* bethe = app.add_subcommand("bethe", "one-particle spectral data");
  bethe->add_flag("--roots-only", roots_only, "skip the spectrum report");
  attach_common(bethe, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(suite, opt);
    if (emit->parsed()) return run_emit(kind, opt);
    if (ness->parsed()) return run_ness(opt);
    if (charges->parsed()) return run_charges(opt);
    if (bethe->parsed()) return run_bethe(opt, roots_only);
  } catch (const std::exception& e) {
    std::cerr << "exint: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
