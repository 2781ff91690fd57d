// pfes: compute E-polynomials, verify identities over parameter grids, and
// compare symbolic counts with brute force over F_p.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "cache.hpp"
#include "pfes/fq_oracle.hpp"
#include "run_report.hpp"
#include "suites.hpp"

using namespace pfes;
using namespace pfes::cli;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Common {
  std::string format = "plain";
  bool parallel = false;
  unsigned threads = 0;
  bool timing = false;
  std::string cache_dir;
};

struct ComputeArgs {
  std::string target;
  std::optional<long> n, k, i, j;
  std::string method = "closed";
};

struct VerifyArgs {
  std::string suite;
  Bounds bounds;
};

struct OracleArgs {
  std::string target;
  long p = 2;
  std::optional<long> n, rank, dim, alpha_rank;
};

Format parse_format(const std::string& s) {
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::json;
  return Format::plain;
}

unsigned worker_count(const Common& c) {
  if (!c.parallel) return 1;
  if (c.threads > 0) return c.threads;
  return std::max(2u, std::thread::hardware_concurrency());
}

long need(const std::optional<long>& v, const char* flag, const std::string& target) {
  if (!v) throw CLI::ValidationError(flag, "required by target " + target);
  return *v;
}

// ---- compute ----

using ComputeFn = std::function<QRational(const ComputeArgs&)>;

struct ComputeTarget {
  std::vector<std::string> params;
  ComputeFn fn;
};

const std::map<std::string, ComputeTarget>& compute_targets() {
  auto N = [](const ComputeArgs& a) { return need(a.n, "--n", a.target); };
  auto K = [](const ComputeArgs& a) { return need(a.k, "--k", a.target); };
  auto I = [](const ComputeArgs& a) { return need(a.i, "--i", a.target); };
  auto J = [](const ComputeArgs& a) { return need(a.j, "--j", a.target); };
  static const std::map<std::string, ComputeTarget> t = {
      {"grassmannian", {{"k", "n"}, [=](auto& a) { return QRational(grassmannian_E(K(a), N(a))); }}},
      {"e-skew", {{"i"}, [=](auto& a) { return QRational(nondeg_skew_E(I(a))); }}},
      {"rank-stratum", {{"i", "n"}, [=](auto& a) { return QRational(rank_stratum_E(I(a), N(a))); }}},
      {"pf-stringy",
       {{"n", "k", "method"},
        [=](auto& a) {
          PfaffianParams p(N(a), K(a));
          if (a.method == "recursive") return QRational(pf_stringy_recursive(p));
          if (a.method == "rodland") {
            if (2 * p.k + 3 != p.n) throw RangeError("method rodland needs k = (n-3)/2");
            return QRational(pf_stringy_rodland(p.half()));
          }
          return QRational(pf_stringy_closed(p));
        }}},
      {"discrepancy",
       {{"j", "n", "k"}, [=](auto& a) { return QRational(QPoly{discrepancy(J(a), {N(a), K(a)})}); }}},
      {"local-contribution",
       {{"i", "k", "n"}, [=](auto& a) { return QRational(local_contribution(I(a), K(a), N(a))); }}},
      {"isotropic", {{"k", "i", "n"}, [=](auto& a) { return QRational(isotropic_E(K(a), I(a), N(a))); }}},
      {"f", {{"n", "k", "i"}, [=](auto& a) { return QRational(f_closed({N(a), K(a), I(a)})); }}},
      {"f-circ", {{"n", "k", "i"}, [=](auto& a) { return QRational(f_circ({N(a), K(a), I(a)})); }}},
      {"fiber-odd", {{"k", "n"}, [=](auto& a) { return QRational(fiber_E_odd(K(a), N(a))); }}},
      {"fiber-even", {{"k", "n"}, [=](auto& a) { return QRational(even_fiber_E(K(a), N(a))); }}},
  };
  return t;
}

RunReport run_compute(const ComputeArgs& a) {
  RunReport r;
  r.command = "compute";
  const auto& target = compute_targets().at(a.target);
  r.parameters["target"] = a.target;
  for (const auto& p : target.params) {
    const std::optional<long>* v = p == "n" ? &a.n : p == "k" ? &a.k : p == "i" ? &a.i : p == "j" ? &a.j : nullptr;
    if (v && *v) r.parameters[p] = **v;
    if (p == "method") r.parameters[p] = a.method;
  }
  Entry e;
  e.name = a.target;
  e.value = target.fn(a);
  r.results.push_back(std::move(e));
  return r;
}

// ---- verify ----

RunReport run_verify(const VerifyArgs& a, unsigned threads) {
  RunReport r;
  r.command = "verify";
  r.parameters["suite"] = a.suite;
  std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
  std::vector<Task> tasks;
  for (const auto& name : names) {
    Suite s = build_suite(name, a.bounds);
    for (const auto& [k, v] : s.bounds) {
      r.parameters[a.suite == "all" ? name + "." + k : k] = v;
    }
    for (auto& t : s.tasks) tasks.push_back(std::move(t));
  }
  for (const auto& rep : run_tasks(tasks, threads)) r.results.push_back(verify_entry(rep));
  return r;
}

// ---- oracle ----

mpz_class at_p(const QPoly& f, long p) { return f.eval(mpz_class(p)); }

RunReport run_oracle(const OracleArgs& a, unsigned threads) {
  RunReport r;
  r.command = "oracle";
  r.parameters["target"] = a.target;
  r.parameters["p"] = a.p;
  const long n = need(a.n, "--n", a.target);
  r.parameters["n"] = n;
  Entry e;
  e.name = a.target;
  const long p = a.p;
  if (a.target == "rank-stratum") {
    const long rank = need(a.rank, "--rank", a.target);
    r.parameters["rank"] = rank;
    check_even_rank(rank, n, "oracle rank-stratum");
    e.point = {p, n, rank};
    e.count = mpz_class(std::to_string(form_census(p, n, {}, threads).by_rank_half[rank / 2]));
    e.symbolic = rank == 0 ? mpz_class(0) : at_p(rank_stratum_E(rank / 2, n), p);
  } else if (a.target == "isotropic") {
    const long dim = need(a.dim, "--dim", a.target);
    const long ar = need(a.alpha_rank, "--alpha-rank", a.target);
    r.parameters["dim"] = dim;
    r.parameters["alpha_rank"] = ar;
    check_even_rank(ar, n, "oracle isotropic");
    if (dim < 0 || dim > n) throw RangeError("oracle isotropic: need 0 <= dim <= n");
    e.point = {p, n, dim, ar};
    if (ar == 0 || dim <= 1) {
      e.symbolic = at_p(gauss_binomial(n, dim, 1), p);
    } else if (dim % 2 == 0) {
      e.symbolic = at_p(isotropic_E(dim / 2, ar / 2, n), p);
    } else {
      throw RangeError("oracle isotropic: no symbolic count for odd dim > 1 and nonzero alpha");
    }
    e.count = mpz_class(std::to_string(count_isotropic(p, n, dim, SkewFormFp::standard(p, n, ar / 2))));
  } else if (a.target == "cut-stratum") {
    const long rank = need(a.rank, "--rank", a.target);
    const long ar = need(a.alpha_rank, "--alpha-rank", a.target);
    r.parameters["rank"] = rank;
    r.parameters["alpha_rank"] = ar;
    check_even_rank(rank, n, "oracle cut-stratum");
    check_even_rank(ar, n, "oracle cut-stratum");
    e.point = {p, n, rank, ar};
    if (rank == 0) e.symbolic = 0;
    else if (ar == 0) e.symbolic = at_p(rank_stratum_E(rank / 2, n), p);
    else if (n >= 5 && n % 2 == 1) e.symbolic = at_p(f_circ({n, rank / 2, ar / 2}), p);
    else e.symbolic = at_p(f_circ_from_incidence(rank / 2, ar / 2, n).back(), p);
    auto c = form_census(p, n, {SkewFormFp::standard(p, n, ar / 2)}, threads);
    e.count = mpz_class(std::to_string(c.cut_by_rank_half[0][rank / 2]));
  }
  e.status = *e.count == *e.symbolic ? "MATCH" : "MISMATCH";
  r.results.push_back(std::move(e));
  return r;
}

int exit_code(const RunReport& r) {
  return tally(r.results).failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-polynomials of Pfaffian varieties and their hyperplane cuts"};
  app.require_subcommand(1);
  // Global options may follow the subcommand; set before subcommands inherit.
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->envname("PFES_FORMAT");
  app.add_flag("--parallel", common.parallel, "Evaluate grid points on a worker pool")
      ->envname("PFES_PARALLEL");
  app.add_option("--threads", common.threads, "Worker count for --parallel (default: all cores)")
      ->envname("PFES_THREADS");
  app.add_flag("--timing", common.timing, "Report wall-clock time (otherwise timing_ms is 0)")
      ->envname("PFES_TIMING");
  app.add_option("--cache-dir", common.cache_dir, "Persist memoized polynomials here")
      ->envname("PFES_CACHE_DIR");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Print one polynomial or rational function");
  std::vector<std::string> ctargets;
  for (const auto& [k, v] : compute_targets()) ctargets.push_back(k);
  compute->add_option("target", ca.target)->required()->check(CLI::IsMember(ctargets));
  compute->add_option("--n", ca.n);
  compute->add_option("--k", ca.k);
  compute->add_option("--i", ca.i);
  compute->add_option("--j", ca.j);
  compute->add_option("--method", ca.method, "pf-stringy route")
      ->check(CLI::IsMember({"closed", "recursive", "rodland"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check identities over a parameter grid");
  std::vector<std::string> snames = suite_names();
  snames.push_back("all");
  verify->add_option("suite", va.suite)->required()->check(CLI::IsMember(snames));
  verify->add_option("--max-r", va.bounds.max_r)->envname("PFES_MAX_R");
  verify->add_option("--max-n", va.bounds.max_n)->envname("PFES_MAX_N");
  verify->add_option("--max-b", va.bounds.max_b)->envname("PFES_MAX_B");
  verify->add_option("--max-k", va.bounds.max_k)->envname("PFES_MAX_K");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Brute-force count over F_p against the symbolic value");
  oracle->add_option("target", oa.target)
      ->required()
      ->check(CLI::IsMember({"rank-stratum", "isotropic", "cut-stratum"}));
  oracle->add_option("--p", oa.p, "Prime")->envname("PFES_P");
  oracle->add_option("--n", oa.n);
  oracle->add_option("--rank", oa.rank);
  oracle->add_option("--dim", oa.dim);
  oracle->add_option("--alpha-rank", oa.alpha_rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  const Format fmt = parse_format(common.format);
  const unsigned threads = worker_count(common);
  std::optional<std::filesystem::path> cache;
  if (!common.cache_dir.empty()) {
    cache = std::filesystem::path(common.cache_dir);
    load_cache(*cache);
  }

  RunReport report;
  report.command = compute->parsed() ? "compute" : verify->parsed() ? "verify" : "oracle";
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (compute->parsed()) report = run_compute(ca);
    else if (verify->parsed()) report = run_verify(va, threads);
    else report = run_oracle(oa, threads);
    code = exit_code(report);
  } catch (const CLI::ValidationError& e) {
    report.error = {"UsageError", e.what()};
    code = kUsage;
  } catch (const RangeError& e) {
    report.error = {"RangeError", e.what()};
    code = kUsage;
  } catch (const TooLarge& e) {
    report.error = {"TooLarge", e.what()};
    code = kResource;
  } catch (const NotPolynomial& e) {
    report.error = {"NotPolynomial", e.what()};
    code = kFailed;
  } catch (const pfes::Error& e) {
    report.error = {"Error", e.what()};
    code = kFailed;
  }
  if (common.timing) {
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }

  const std::string out = emit(report, fmt, common.timing);
  if (report.error && fmt != Format::json) std::cerr << out;
  else std::cout << out;
  if (report.error && fmt == Format::json) {
    std::cerr << "error: " << report.error->first << ": " << report.error->second << "\n";
  }
  if (cache) save_cache(*cache);
  return code;
}
