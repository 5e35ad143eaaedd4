#ifndef RAMELLIN_CLI_HPP
#define RAMELLIN_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramellin/report_io.hpp"

// CLI front end.  Subcommands:
//   verify  -- run a suite or a single identity, emit the JSON/CSV report
//   eval    -- verify one identity instance (alias for verify --identity)
//   kernel  -- kernel plot data over an x-grid (CSV: x,value,abs_err,flags)
//   primes  -- prime-sum operations and diagnostics
//   table   -- kernel values at an explicit list of x points
// Exit codes: 0 all asserted checks PASS (REPORT_ONLY/DIVERGENT never
// gate), 1 any FAIL, 2 configuration error.

namespace ramellin {
namespace cli {

struct CommonOpts {
  std::string out_path;
  std::string format = "json";
  bool no_timestamp = false;
  bool strict_report = false;
};

inline bool write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(opts.out_path);
  if (!f) {
    std::cerr << "error: cannot open output file " << opts.out_path << "\n";
    return false;
  }
  f << text;
  return true;
}

inline int finish(const CommonOpts& opts, const std::string& suite_name,
                  const std::vector<IdentityReport>& reports) {
  std::string text = (opts.format == "csv")
                         ? io::suite_to_csv(suite_name, reports, !opts.no_timestamp)
                         : io::suite_to_json(suite_name, reports, !opts.no_timestamp);
  if (!write_output(opts, text)) return 2;
  if (opts.strict_report) {
    for (const auto& r : reports)
      if (r.status == Status::ReportOnly || r.status == Status::Divergent)
        std::cerr << "REPORT_ONLY/DIVERGENT: " << r.id_string() << " -- " << r.notes
                  << "\n";
  }
  SuiteSummary s = summarize(reports);
  return s.fail > 0 ? 1 : 0;
}

// Identity parameter flags shared by verify/eval.
struct ParamOpts {
  std::optional<double> s, a, v, c, p, k, t, n;

  std::map<std::string, double> to_map() const {
    std::map<std::string, double> m;
    if (s) m["s"] = *s;
    if (a) m["a"] = *a;
    if (v) m["v"] = *v;
    if (c) m["c"] = *c;
    if (p) m["p"] = *p;
    if (k) m["k"] = *k;
    if (t) m["t"] = *t;
    if (n) m["n"] = *n;
    return m;
  }
};

inline void add_param_flags(CLI::App* cmd, ParamOpts& po) {
  cmd->add_option("--s", po.s, "parameter s");
  cmd->add_option("--a", po.a, "parameter a");
  cmd->add_option("--v", po.v, "parameter v");
  cmd->add_option("--c", po.c, "parameter c");
  cmd->add_option("--p", po.p, "parameter p");
  cmd->add_option("--k", po.k, "parameter k");
  cmd->add_option("--t", po.t, "parameter t");
  cmd->add_option("--n", po.n, "parameter n");
}

inline void add_common_flags(CLI::App* cmd, CommonOpts& co) {
  cmd->add_option("--out", co.out_path, "output file (default: stdout)");
  cmd->add_option("--format", co.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--no-timestamp", co.no_timestamp,
                "omit the timestamp header field (deterministic output)");
  cmd->add_flag("--strict-report", co.strict_report,
                "list REPORT_ONLY/DIVERGENT entries on the error stream");
}

// The zeta corollary excludes s = 1/2 (zeta(1) pole); reject before any
// computation.  s = 1/4 runs, but only as REPORT_ONLY.
inline bool zeta_point_rejected(IdentityId id, const std::map<std::string, double>& params,
                                std::string& why) {
  if (id != IdentityId::ZETA_SINE_2_5 && id != IdentityId::ZETA_COSINE_2_6) return false;
  auto it = params.find("s");
  if (it == params.end()) return false;
  if (it->second == 0.5) {
    why = "s = 1/2 is excluded (zeta(2-2s) hits the zeta(1) pole)";
    return true;
  }
  if (it->second <= 0.0 || it->second >= 1.0) {
    why = "s must lie in (0, 1)";
    return true;
  }
  return false;
}

inline SeriesKernel kernel_from_flags(const std::string& phi_name, const ParamOpts& po,
                                      const std::string& parity_name, bool& ok) {
  ok = true;
  PhiSpec phi = PhiSpec::power(po.c.value_or(1.0));
  if (phi_name == "power") {
    phi = PhiSpec::power(po.c.value_or(1.0));
  } else if (phi_name == "binomial") {
    phi = PhiSpec::binomial(po.a.value_or(1.0), po.v.value_or(2.0));
  } else if (phi_name == "zeta") {
    phi = PhiSpec::zeta();
  } else if (phi_name == "hurwitz") {
    phi = PhiSpec::hurwitz_odd(po.c.value_or(2.0), po.a.value_or(2.0));
  } else {
    ok = false;
  }
  Parity parity = Parity::Full;
  if (parity_name == "odd") parity = Parity::Odd;
  else if (parity_name == "even") parity = Parity::Even;
  else if (parity_name != "full") ok = false;
  SeriesKernel kernel{phi, parity, po.p.value_or(1.0), po.k.value_or(1.0)};
  if (!kernel.valid()) ok = false;
  return kernel;
}

inline int run(int argc, const char* const* argv) {
  CLI::App app{"ramellin: numerical verification of Mellin-transform identities"};
  app.require_subcommand(1);

  CommonOpts common;
  ParamOpts params;
  std::string suite_name, identity_name;
  double tol = 0.0;
  std::int64_t primes_limit = 1000000;

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite_name, "suite: basic|zeta|hurwitz|pk|primes|all");
  verify_cmd->add_option("--identity", identity_name, "single identity id");
  verify_cmd->add_option("--tol", tol, "override abs/rel quadrature tolerance");
  verify_cmd->add_option("--primes-limit", primes_limit, "sieve limit for the primes suite");
  add_param_flags(verify_cmd, params);
  add_common_flags(verify_cmd, common);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a single identity");
  eval_cmd->add_option("--identity", identity_name, "identity id")->required();
  eval_cmd->add_option("--tol", tol, "override abs/rel quadrature tolerance");
  add_param_flags(eval_cmd, params);
  add_common_flags(eval_cmd, common);

  std::string phi_name = "power", parity_name = "odd";
  double xmin = 0.0, xmax = 10.0, step = 0.5;
  std::vector<double> xs;
  auto* kernel_cmd = app.add_subcommand("kernel", "kernel plot data over an x-grid");
  kernel_cmd->add_option("--phi", phi_name, "phi: power|binomial|zeta|hurwitz");
  kernel_cmd->add_option("--parity", parity_name, "parity: full|odd|even");
  kernel_cmd->add_option("--xmin", xmin, "grid start");
  kernel_cmd->add_option("--xmax", xmax, "grid end");
  kernel_cmd->add_option("--step", step, "grid step");
  add_param_flags(kernel_cmd, params);
  add_common_flags(kernel_cmd, common);

  auto* table_cmd = app.add_subcommand("table", "kernel values at explicit x points");
  table_cmd->add_option("--phi", phi_name, "phi: power|binomial|zeta|hurwitz");
  table_cmd->add_option("--parity", parity_name, "parity: full|odd|even");
  table_cmd->add_option("--x", xs, "x points")->required();
  add_param_flags(table_cmd, params);
  add_common_flags(table_cmd, common);

  std::string prime_op = "mobius";
  int K = 30;
  int an_n = 1;
  auto* primes_cmd = app.add_subcommand("primes", "prime-sum operations");
  primes_cmd->add_option("--op", prime_op,
                         "op: count|direct|mobius|cn|an|theorem22|divergence");
  primes_cmd->add_option("--primes-limit", primes_limit, "sieve limit");
  primes_cmd->add_option("--K", K, "Mobius truncation");
  primes_cmd->add_option("--n", an_n, "index n for cn/an/divergence");
  primes_cmd->add_option("--s", params.s, "parameter s");
  add_common_flags(primes_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::exit(app.exit(e));
    }
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  QuadratureConfig cfg;
  if (tol > 0.0) {
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
  }

  if (*verify_cmd || *eval_cmd) {
    if (*eval_cmd || !identity_name.empty()) {
      IdentityId id;
      if (!identity_from_string(identity_name, id)) {
        std::cerr << "error: unknown identity id '" << identity_name << "'\n";
        return 2;
      }
      IdentityCase kase;
      kase.id = id;
      kase.params = params.to_map();
      kase.cfg = cfg;
      std::string why;
      if (zeta_point_rejected(id, kase.params, why)) {
        std::cerr << "error: " << why << "\n";
        return 2;
      }
      if (kase.get("s", 0.25) == 0.25 &&
          (id == IdentityId::ZETA_SINE_2_5 || id == IdentityId::ZETA_COSINE_2_6) &&
          *verify_cmd)
        kase.report_only_override = true;
      return finish(common, "single", {verify(kase)});
    }
    Suite suite;
    if (suite_name.empty() || !suite_from_string(suite_name, suite)) {
      std::cerr << "error: unknown or missing suite '" << suite_name << "'\n";
      return 2;
    }
    // parameter overrides apply to the zeta suite's shared s point
    if ((suite == Suite::Zeta || suite == Suite::All) && params.s) {
      std::string why;
      if (zeta_point_rejected(IdentityId::ZETA_SINE_2_5, params.to_map(), why)) {
        std::cerr << "error: " << why << "\n";
        return 2;
      }
    }
    std::vector<IdentityReport> reports;
    if (params.s && suite == Suite::Zeta) {
      for (IdentityId id : {IdentityId::ZETA_SINE_2_5, IdentityId::ZETA_COSINE_2_6}) {
        IdentityCase kase;
        kase.id = id;
        kase.params = {{"s", *params.s}};
        kase.cfg = cfg;
        kase.report_only_override = (*params.s == 0.25);
        reports.push_back(verify(kase));
      }
    } else {
      reports = verify_suite(suite, cfg, primes_limit);
    }
    return finish(common, to_string(suite), reports);
  }

  if (*kernel_cmd || *table_cmd) {
    bool ok;
    SeriesKernel kernel = kernel_from_flags(phi_name, params, parity_name, ok);
    if (!ok) {
      std::cerr << "error: invalid kernel specification\n";
      return 2;
    }
    if (*kernel_cmd) {
      if (step <= 0.0 || xmax < xmin) {
        std::cerr << "error: invalid x range\n";
        return 2;
      }
      xs.clear();
      for (double x = xmin; x <= xmax + 1e-12 * (xmax - xmin + 1.0); x += step)
        xs.push_back(x);
    }
    return write_output(common, io::kernel_table_csv(kernel_table(kernel, xs))) ? 0 : 2;
  }

  if (*primes_cmd) {
    std::ostringstream out;
    if (prime_op == "count") {
      NumberTheoryTables tables = build_tables(primes_limit);
      out << "pi(" << primes_limit << ") = " << prime_count(tables, (double)primes_limit)
          << "\n";
    } else if (prime_op == "direct") {
      NumberTheoryTables tables = build_tables(primes_limit);
      PrimeSumResult r = prime_log_sum_direct(tables, params.s.value_or(2.0), primes_limit);
      out << "value = " << io::format_double(r.value) << " primes_used = " << r.primes_used
          << " tail <= " << io::format_double(r.tail_estimate)
          << (r.divergent ? " DIVERGENT" : "") << "\n";
    } else if (prime_op == "mobius") {
      PrimeSumResult r = prime_log_sum_mobius(params.s.value_or(2.0), K);
      if (r.out_of_domain) {
        std::cerr << "error: " << r.notes << "\n";
        return 2;
      }
      out << "value = " << io::format_double(r.value)
          << " mobius_terms = " << r.mobius_terms_used << "\n";
    } else if (prime_op == "cn") {
      out << "c_" << an_n << " = " << io::format_double(c_n(an_n).value) << "\n";
    } else if (prime_op == "an") {
      PrimeSumResult r = a_n_formal(an_n, K);
      out << "A_" << an_n << " mobius partial = " << io::format_double(r.value)
          << (r.divergent ? " FORMAL/DIVERGENT" : "")
          << (r.out_of_domain ? " OUT_OF_DOMAIN" : "") << "  " << r.notes << "\n";
    } else if (prime_op == "theorem22") {
      NumberTheoryTables tables = build_tables(primes_limit);
      PrimeSumResult r = theorem22_lhs(tables, primes_limit);
      out << "value = " << io::format_double(r.value) << "\n";
      for (const auto& [cp, v] : r.checkpoints)
        out << "  checkpoint " << cp << " -> " << io::format_double(v) << "\n";
    } else if (prime_op == "divergence") {
      NumberTheoryTables tables = build_tables(primes_limit);
      PrimeSumResult r = divergence_diagnostic(tables, an_n, primes_limit);
      out << "partial = " << io::format_double(r.value) << " DIVERGENT  " << r.notes
          << "\n";
      for (const auto& [cp, v] : r.checkpoints)
        out << "  checkpoint " << cp << " -> " << io::format_double(v) << "\n";
    } else {
      std::cerr << "error: unknown primes op '" << prime_op << "'\n";
      return 2;
    }
    return write_output(common, out.str()) ? 0 : 2;
  }

  return 2;
}

}  // namespace cli
}  // namespace ramellin

#endif  // RAMELLIN_CLI_HPP
