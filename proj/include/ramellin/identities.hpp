#ifndef RAMELLIN_IDENTITIES_HPP
#define RAMELLIN_IDENTITIES_HPP

#include <atomic>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ramellin/mellin.hpp"
#include "ramellin/primes.hpp"

// Analytic right-hand sides for every verified identity, the Appendix-style
// limit decomposition behind the log-weighted corollary, a Laurent
// expansion fitter for the s=0 pole, and the verification harness that
// compares numerical left sides (mellin/series/primes) against them.

namespace ramellin {

enum class IdentityId {
  RMT_1_2,
  BINOMIAL_1_7,
  SIN_2_3,
  COS_2_4,
  SINE_MASTER_2_1,
  COSINE_MASTER_2_2,
  ZETA_SINE_2_5,
  ZETA_COSINE_2_6,
  COR22_I_2_8,
  COR22_II_2_9,
  HURWITZ_2_10,
  HURWITZ_TAYLOR_2_11,
  PK_SINE_2_16,
  K_SINE_2_17,
  PK_COS_2_19,
  K_COS_2_20,
};

inline const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::RMT_1_2: return "RMT_1_2";
    case IdentityId::BINOMIAL_1_7: return "BINOMIAL_1_7";
    case IdentityId::SIN_2_3: return "SIN_2_3";
    case IdentityId::COS_2_4: return "COS_2_4";
    case IdentityId::SINE_MASTER_2_1: return "SINE_MASTER_2_1";
    case IdentityId::COSINE_MASTER_2_2: return "COSINE_MASTER_2_2";
    case IdentityId::ZETA_SINE_2_5: return "ZETA_SINE_2_5";
    case IdentityId::ZETA_COSINE_2_6: return "ZETA_COSINE_2_6";
    case IdentityId::COR22_I_2_8: return "COR22_I_2_8";
    case IdentityId::COR22_II_2_9: return "COR22_II_2_9";
    case IdentityId::HURWITZ_2_10: return "HURWITZ_2_10";
    case IdentityId::HURWITZ_TAYLOR_2_11: return "HURWITZ_TAYLOR_2_11";
    case IdentityId::PK_SINE_2_16: return "PK_SINE_2_16";
    case IdentityId::K_SINE_2_17: return "K_SINE_2_17";
    case IdentityId::PK_COS_2_19: return "PK_COS_2_19";
    case IdentityId::K_COS_2_20: return "K_COS_2_20";
  }
  return "UNKNOWN";
}

inline bool identity_from_string(const std::string& s, IdentityId& out) {
  static const std::map<std::string, IdentityId> table = {
      {"RMT_1_2", IdentityId::RMT_1_2},
      {"BINOMIAL_1_7", IdentityId::BINOMIAL_1_7},
      {"SIN_2_3", IdentityId::SIN_2_3},
      {"COS_2_4", IdentityId::COS_2_4},
      {"SINE_MASTER_2_1", IdentityId::SINE_MASTER_2_1},
      {"COSINE_MASTER_2_2", IdentityId::COSINE_MASTER_2_2},
      {"ZETA_SINE_2_5", IdentityId::ZETA_SINE_2_5},
      {"ZETA_COSINE_2_6", IdentityId::ZETA_COSINE_2_6},
      {"COR22_I_2_8", IdentityId::COR22_I_2_8},
      {"COR22_II_2_9", IdentityId::COR22_II_2_9},
      {"HURWITZ_2_10", IdentityId::HURWITZ_2_10},
      {"HURWITZ_TAYLOR_2_11", IdentityId::HURWITZ_TAYLOR_2_11},
      {"PK_SINE_2_16", IdentityId::PK_SINE_2_16},
      {"K_SINE_2_17", IdentityId::K_SINE_2_17},
      {"PK_COS_2_19", IdentityId::PK_COS_2_19},
      {"K_COS_2_20", IdentityId::K_COS_2_20},
  };
  auto it = table.find(s);
  if (it == table.end()) return false;
  out = it->second;
  return true;
}

enum class Status { Pass, Fail, ReportOnly, Divergent };

inline const char* to_string(Status st) {
  switch (st) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ReportOnly: return "REPORT_ONLY";
    case Status::Divergent: return "DIVERGENT";
  }
  return "FAIL";
}

struct IdentityCase {
  IdentityId id = IdentityId::RMT_1_2;
  std::map<std::string, double> params;  // s, a, v, c, p, k, t, n as applicable
  QuadratureConfig cfg;
  // suite construction can downgrade a case to REPORT_ONLY (the excluded
  // s = 1/4 points of the zeta corollary)
  bool report_only_override = false;

  double get(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
  bool has(const std::string& key) const { return params.count(key) != 0; }
};

struct IdentityReport {
  IdentityCase kase;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double abs_err = std::numeric_limits<double>::quiet_NaN();
  double rel_err = std::numeric_limits<double>::quiet_NaN();
  Status status = Status::Fail;
  std::string notes;
  // primes-suite structural entries carry a label outside the identity
  // enumeration; empty means "use to_string(kase.id)"
  std::string id_label;

  const char* id_string() const {
    return id_label.empty() ? to_string(kase.id) : id_label.c_str();
  }
};

/// Single tolerance table: per-identity relative tolerance for PASS.
inline double identity_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::RMT_1_2:
    case IdentityId::BINOMIAL_1_7:
    case IdentityId::SIN_2_3:
    case IdentityId::COS_2_4:
    case IdentityId::PK_SINE_2_16:
    case IdentityId::K_SINE_2_17:
    case IdentityId::PK_COS_2_19:
    case IdentityId::K_COS_2_20:
      return 1e-7;  // smooth kernels
    case IdentityId::SINE_MASTER_2_1:
    case IdentityId::COSINE_MASTER_2_2:
      return 1e-6;
    case IdentityId::ZETA_SINE_2_5:
    case IdentityId::ZETA_COSINE_2_6:
      return 1e-5;  // Dirichlet-resummation kernels
    case IdentityId::COR22_I_2_8:
      return 1e-6;
    case IdentityId::HURWITZ_TAYLOR_2_11:
      return 1e-9;
    case IdentityId::HURWITZ_2_10:
    case IdentityId::COR22_II_2_9:
      return 1e-6;  // report-only; tolerance never gates
  }
  return 1e-7;
}

// ---------------------------------------------------------------------------
// Right-hand sides
// ---------------------------------------------------------------------------

/// Gamma(s) phi(-s), the master-theorem transform value.
inline EvalResult rhs_rmt(const PhiSpec& phi, double s) {
  if (s <= 0.0) return EvalResult::out_of_domain_result();
  EvalResult g = gamma(s);
  EvalResult p = phi.eval_at(-s);
  if (g.out_of_domain() || p.out_of_domain()) return EvalResult::out_of_domain_result();
  double v = g.value * p.value;
  return EvalResult::ok(v, std::abs(g.value) * p.abs_err_estimate +
                               std::abs(p.value) * g.abs_err_estimate);
}

/// phi(-s) Gamma(s) sin(pi s / 2).
inline EvalResult rhs_sine_master(const PhiSpec& phi, double s) {
  EvalResult base = rhs_rmt(phi, s);
  if (base.out_of_domain()) return base;
  double t = std::sin(0.5 * pi * s);
  return EvalResult::ok(base.value * t,
                        base.abs_err_estimate * std::abs(t) + 2e-16 * std::abs(base.value));
}

/// phi(-s) Gamma(s) cos(pi s / 2).
inline EvalResult rhs_cosine_master(const PhiSpec& phi, double s) {
  EvalResult base = rhs_rmt(phi, s);
  if (base.out_of_domain()) return base;
  double t = std::cos(0.5 * pi * s);
  return EvalResult::ok(base.value * t,
                        base.abs_err_estimate * std::abs(t) + 2e-16 * std::abs(base.value));
}

/// phi(-s/k) * pGamma_k(s) * sin-or-cos(pi s / 2k).  The k-only variants
/// are the p = k specialization; p = k = 1 collapses onto the master
/// theorem right sides.
inline EvalResult rhs_pk(const PhiSpec& phi, double s, double p, double k,
                         Parity parity) {
  if (s <= 0.0 || p <= 0.0 || k <= 0.0 || parity == Parity::Full)
    return EvalResult::out_of_domain_result();
  EvalResult ph = phi.eval_at(-s / k);
  EvalResult g = pk_gamma(s, p, k);
  if (ph.out_of_domain() || g.out_of_domain()) return EvalResult::out_of_domain_result();
  double trig = (parity == Parity::Odd) ? std::sin(0.5 * pi * s / k)
                                        : std::cos(0.5 * pi * s / k);
  double v = ph.value * g.value * trig;
  return EvalResult::ok(v, 1e-14 * (1.0 + std::abs(v)));
}

struct Hurwitz210Rhs {
  EvalResult magnitude;
  // literal value multiplies by (-1)^{-s} on the principal branch
  // exp(-i pi s) = (cos pi s, -sin pi s); returned as (real, imag)
  std::pair<double, double> literal_principal_branch{
      std::numeric_limits<double>::quiet_NaN(),
      std::numeric_limits<double>::quiet_NaN()};
};

/// Magnitude Gamma(s)Gamma(c-s)zeta(c-s,a)sin(pi s/2)/Gamma(c), plus the
/// literal principal-branch value including the (-1)^{-s} factor.
inline Hurwitz210Rhs rhs_hurwitz_2_10(double s, double c, double a) {
  Hurwitz210Rhs out;
  if (s <= 0.0 || s >= 1.0 || c <= 1.0 + s || a <= 1.0) {
    out.magnitude = EvalResult::out_of_domain_result();
    return out;
  }
  double mag = gamma(s).value * gamma(c - s).value * hurwitz_zeta(c - s, a).value *
               std::sin(0.5 * pi * s) / gamma(c).value;
  out.magnitude = EvalResult::ok(mag, 1e-13 * std::abs(mag));
  out.literal_principal_branch = {mag * std::cos(pi * s), -mag * std::sin(pi * s)};
  return out;
}

// ---------------------------------------------------------------------------
// Hurwitz Taylor identity
// ---------------------------------------------------------------------------

/// LHS sum_k (c)_{2k+1}/(2k+1)! zeta(c+2k+1, a) t^{2k+1} versus
/// RHS (zeta(c, a-t) - zeta(c, a+t)) / 2.
inline IdentityReport hurwitz_taylor_check(double c, double a, double t) {
  IdentityReport rep;
  rep.kase.id = IdentityId::HURWITZ_TAYLOR_2_11;
  rep.kase.params = {{"c", c}, {"a", a}, {"t", t}};
  if (c <= 1.0 || a <= 0.0 || t < 0.0 || t >= a) {
    rep.status = Status::Fail;
    rep.notes = "OUT_OF_DOMAIN: need c > 1, 0 <= t < a";
    return rep;
  }
  double lhs = 0.0;
  double poch = c;        // (c)_{2k+1}
  double fact = 1.0;      // (2k+1)!
  double tp = t;          // t^{2k+1}
  for (int k = 0; k < 400; ++k) {
    double term = poch / fact * hurwitz_zeta(c + 2.0 * k + 1.0, a).value * tp;
    lhs += term;
    if (std::abs(term) < 1e-15 * (1.0 + std::abs(lhs)) && k > 0) break;
    poch *= (c + 2.0 * k + 1.0) * (c + 2.0 * k + 2.0);
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    tp *= t * t;
  }
  double rhs = (t == 0.0)
                   ? 0.0
                   : 0.5 * (hurwitz_zeta(c, a - t).value - hurwitz_zeta(c, a + t).value);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::abs(lhs - rhs);
  rep.rel_err = (lhs == 0.0 && rhs == 0.0)
                    ? 0.0
                    : rep.abs_err / std::max(std::abs(rhs), 1e-300);
  rep.status = (rep.rel_err <= identity_tolerance(rep.kase.id)) ? Status::Pass
                                                                : Status::Fail;
  return rep;
}

// ---------------------------------------------------------------------------
// s -> 0 limit decomposition and pole expansion
// ---------------------------------------------------------------------------

struct A1LimitRecord {
  double term2_extrapolated = std::numeric_limits<double>::quiet_NaN();
  double term1_growth_exponent = std::numeric_limits<double>::quiet_NaN();
  std::string notes;
};

namespace detail {

// short numeric formatting for notes
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Neville polynomial extrapolation of (x_i, y_i) to x = 0.
inline double neville_to_zero(std::vector<double> x, std::vector<double> y) {
  const int n = static_cast<int>(x.size());
  for (int level = 1; level < n; ++level)
    for (int i = 0; i < n - level; ++i)
      y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
  return y[0];
}

}  // namespace detail

/// Limit decomposition of the log-weighted zeta corollary at s -> 0:
///   term2(s) = (pi/2) zeta(2-2s) pi sin(pi s/2) / (Gamma(1-s) sin(pi s))
/// extrapolates to pi^4/24 (the surviving term);
///   term1(s) = zeta'(2-2s) pi cos(pi s/2) / (Gamma(1-s) sin(pi s))
/// carries a simple pole, whose growth exponent is fitted and reported.
inline A1LimitRecord appendix_a1_limit(const std::vector<double>& s_values) {
  A1LimitRecord rec;
  if (s_values.size() < 4) {
    rec.notes = "need at least 4 sample points in (0, 0.05]";
    return rec;
  }
  for (size_t i = 0; i < s_values.size(); ++i) {
    double s = s_values[i];
    if (s <= 0.0 || s > 0.05 || (i > 0 && s >= s_values[i - 1])) {
      rec.notes = "s_values must be a decreasing list in (0, 0.05]";
      return rec;
    }
  }
  std::vector<double> xs, t2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double s : s_values) {
    double denom = gamma(1.0 - s).value * std::sin(pi * s);
    double term2 = 0.5 * pi * riemann_zeta(2.0 - 2.0 * s).value * pi *
                   std::sin(0.5 * pi * s) / denom;
    double term1 = zeta_derivative(2.0 - 2.0 * s, 1).value * pi *
                   std::cos(0.5 * pi * s) / denom;
    xs.push_back(s);
    t2.push_back(term2);
    double lx = std::log(1.0 / s), ly = std::log(std::abs(term1));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const int m = static_cast<int>(s_values.size());
  rec.term2_extrapolated = detail::neville_to_zero(xs, t2);
  rec.term1_growth_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  rec.notes =
      "term2 -> pi^4/24 is the surviving finite limit; term1 grows like 1/s "
      "(simple pole), so the log-weighted integral identity has no finite "
      "direct value. The source derivation shows an intermediate zeta(2-4s) "
      "(apparent typo for zeta(2-2s)) and a pi/2*zeta(2) step inconsistent "
      "with its own final pi^2/4*zeta(2) display; the final display is the "
      "one followed here.";
  return rec;
}

/// Laurent coefficients [c_-1, c_0, c_1] of F at 0 from samples at +-r for
/// each radius, split into even/odd parts and Neville-extrapolated in r^2.
inline std::vector<double> laurent_fit(const std::function<double(double)>& F,
                                       const std::vector<double>& radii,
                                       bool* ill_conditioned = nullptr) {
  if (ill_conditioned) *ill_conditioned = false;
  std::vector<double> r2, even, odd;
  for (double r : radii) {
    if (r <= 0.0) continue;
    for (double seen : r2)
      if (std::abs(seen - r * r) < 1e-30 && ill_conditioned) *ill_conditioned = true;
    double fp = F(r), fm = F(-r);
    r2.push_back(r * r);
    even.push_back(0.5 * (fp + fm));          // c0 + c2 r^2 + ...
    odd.push_back(0.5 * r * (fp - fm));       // c-1 + c1 r^2 + ...
  }
  if (r2.size() < 2) {
    if (ill_conditioned) *ill_conditioned = true;
    return {0.0, 0.0, 0.0};
  }
  double c0 = detail::neville_to_zero(r2, even);
  double cm1 = detail::neville_to_zero(r2, odd);
  std::vector<double> odd2;
  for (size_t i = 0; i < r2.size(); ++i) odd2.push_back((odd[i] - cm1) / r2[i]);
  double c1 = detail::neville_to_zero(r2, odd2);
  return {cm1, c0, c1};
}

/// Laurent coefficients of the cosine-master zeta transform
/// M(s) = zeta(2-2s) Gamma(s) cos(pi s/2) at s0 = 0.
inline std::vector<double> pole_expansion(IdentityId identity_rhs,
                                          const std::vector<double>& radii,
                                          bool* ill_conditioned = nullptr) {
  if (identity_rhs != IdentityId::COSINE_MASTER_2_2 &&
      identity_rhs != IdentityId::ZETA_COSINE_2_6) {
    if (ill_conditioned) *ill_conditioned = true;
    return {0.0, 0.0, 0.0};
  }
  auto F = [](double s) {
    return riemann_zeta(2.0 - 2.0 * s).value * gamma(s).value *
           std::cos(0.5 * pi * s);
  };
  return laurent_fit(F, radii, ill_conditioned);
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

namespace detail {

inline IdentityReport make_report(const IdentityCase& kase, const MellinEvaluation& lhs,
                                  const EvalResult& rhs) {
  IdentityReport rep;
  rep.kase = kase;
  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  if (lhs.out_of_domain() || rhs.out_of_domain()) {
    rep.status = Status::Fail;
    rep.notes = "OUT_OF_DOMAIN: " + (lhs.note.empty() ? "rhs undefined" : lhs.note);
    return rep;
  }
  rep.abs_err = std::abs(lhs.value - rhs.value);
  rep.rel_err = rep.abs_err / std::max(std::abs(rhs.value), 1e-300);
  if (!lhs.converged) {
    rep.status =
        (lhs.note.find("divergent") != std::string::npos) ? Status::Divergent : Status::Fail;
    rep.notes = lhs.note;
    return rep;
  }
  rep.status = (rep.rel_err <= identity_tolerance(kase.id)) ? Status::Pass : Status::Fail;
  if (!lhs.note.empty()) rep.notes = lhs.note;
  return rep;
}

// phi selection for the master-theorem cases: Binomial when (a, v) given,
// Power{c} otherwise.
inline PhiSpec phi_from_params(const IdentityCase& kase) {
  if (kase.has("a") && kase.has("v"))
    return PhiSpec::binomial(kase.get("a", 1.0), kase.get("v", 2.0));
  return PhiSpec::power(kase.get("c", 1.0));
}

}  // namespace detail

/// Verify one identity instance: numerical LHS against analytic RHS.
inline IdentityReport verify(const IdentityCase& kase) {
  IdentityReport rep;
  rep.kase = kase;
  const QuadratureConfig& cfg = kase.cfg;
  switch (kase.id) {
    case IdentityId::RMT_1_2: {
      double s = kase.get("s", 0.5);
      PhiSpec phi = detail::phi_from_params(kase);
      SeriesKernel kernel{phi, Parity::Full};
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs_rmt(phi, s));
      break;
    }
    case IdentityId::BINOMIAL_1_7: {
      double s = kase.has("n") ? kase.get("n", 1.0) : kase.get("s", 1.0);
      PhiSpec phi = PhiSpec::binomial(kase.get("a", 1.0), kase.get("v", 2.0));
      SeriesKernel kernel{phi, Parity::Full};
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs_rmt(phi, s));
      break;
    }
    case IdentityId::SIN_2_3:
    case IdentityId::COS_2_4: {
      double s = kase.get("s", 0.5);
      double a = kase.get("a", 1.0);
      bool odd = kase.id == IdentityId::SIN_2_3;
      PhiSpec phi = PhiSpec::power(a);
      SeriesKernel kernel{phi, odd ? Parity::Odd : Parity::Even};
      EvalResult rhs = odd ? rhs_sine_master(phi, s) : rhs_cosine_master(phi, s);
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs);
      break;
    }
    case IdentityId::SINE_MASTER_2_1:
    case IdentityId::COSINE_MASTER_2_2: {
      double s = kase.get("s", 0.5);
      bool odd = kase.id == IdentityId::SINE_MASTER_2_1;
      PhiSpec phi = detail::phi_from_params(kase);
      SeriesKernel kernel{phi, odd ? Parity::Odd : Parity::Even};
      EvalResult rhs = odd ? rhs_sine_master(phi, s) : rhs_cosine_master(phi, s);
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs);
      break;
    }
    case IdentityId::ZETA_SINE_2_5:
    case IdentityId::ZETA_COSINE_2_6: {
      double s = kase.get("s", 0.25);
      bool odd = kase.id == IdentityId::ZETA_SINE_2_5;
      PhiSpec phi = PhiSpec::zeta();
      SeriesKernel kernel{phi, odd ? Parity::Odd : Parity::Even};
      EvalResult rhs = odd ? rhs_sine_master(phi, s) : rhs_cosine_master(phi, s);
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs);
      break;
    }
    case IdentityId::COR22_I_2_8: {
      // integrand is the ODD zeta kernel divided by x, at s = 1
      SeriesKernel kernel{PhiSpec::zeta(), Parity::Odd};
      MellinEvaluation lhs = mellin_transform_shifted(kernel, 1.0, false, true, cfg);
      rep = detail::make_report(kase, lhs,
                                EvalResult::ok(pi * pi * pi / 12.0, 0.0));
      break;
    }
    case IdentityId::COR22_II_2_9: {
      // formally divergent at 0; report the diagnostic, the surviving-term
      // limit, and the Laurent coefficients of the transform at s = 0
      SeriesKernel kernel{PhiSpec::zeta(), Parity::Even};
      MellinEvaluation lhs = mellin_transform_shifted(kernel, 1.0, true, true, cfg);
      A1LimitRecord a1 = appendix_a1_limit({0.04, 0.02, 0.01, 0.005, 0.0025});
      std::vector<double> laurent =
          pole_expansion(IdentityId::COSINE_MASTER_2_2, {1e-2, 5e-3, 2e-3, 1e-3});
      rep.lhs = lhs.value;
      rep.rhs = pi * pi * pi * pi / 24.0;
      rep.status = Status::ReportOnly;
      rep.notes = "direct integral divergent at 0 (" + lhs.note +
                  "); surviving-term limit = " + detail::fmt(a1.term2_extrapolated) +
                  ", term1 growth exponent = " +
                  detail::fmt(a1.term1_growth_exponent) +
                  "; Laurent [c-1,c0,c1] at s=0: " + detail::fmt(laurent[0]) +
                  ", " + detail::fmt(laurent[1]) + ", " + detail::fmt(laurent[2]);
      break;
    }
    case IdentityId::HURWITZ_2_10: {
      double s = kase.get("s", 0.5), c = kase.get("c", 3.0), a = kase.get("a", 2.0);
      Hurwitz210Rhs rhs = rhs_hurwitz_2_10(s, c, a);
      SeriesKernel kernel{PhiSpec::hurwitz_odd(c, a), Parity::Odd};
      // the stated left side is (1/2) int [zeta(c,a+x) - zeta(c,a-x)],
      // the negative of this kernel
      MellinEvaluation lhs = mellin_transform(kernel, s, cfg);
      rep.lhs = -lhs.value;
      rep.rhs = rhs.magnitude.out_of_domain()
                    ? std::numeric_limits<double>::quiet_NaN()
                    : rhs.magnitude.value;
      rep.abs_err = std::abs(rep.lhs - rep.rhs);
      rep.rel_err = rep.abs_err / std::max(std::abs(rep.rhs), 1e-300);
      rep.status = Status::ReportOnly;
      rep.notes =
          "branch-ambiguous (-1)^{-s} factor; principal-branch literal value = (" +
          detail::fmt(rhs.literal_principal_branch.first) + ", " +
          detail::fmt(rhs.literal_principal_branch.second) +
          "); kernel defined only for x < a and diverges like (a-x)^{1-c} "
          "there, so the x-integral has no finite value; reported lhs is the "
          "truncation (" + lhs.note + ")";
      break;
    }
    case IdentityId::HURWITZ_TAYLOR_2_11: {
      rep = hurwitz_taylor_check(kase.get("c", 2.0), kase.get("a", 2.0),
                                 kase.get("t", 0.5));
      rep.kase = kase;
      break;
    }
    case IdentityId::PK_SINE_2_16:
    case IdentityId::K_SINE_2_17:
    case IdentityId::PK_COS_2_19:
    case IdentityId::K_COS_2_20: {
      double s = kase.get("s", 0.8);
      double k = kase.get("k", 2.0);
      bool k_only =
          kase.id == IdentityId::K_SINE_2_17 || kase.id == IdentityId::K_COS_2_20;
      double p = k_only ? k : kase.get("p", 3.0);
      bool odd =
          kase.id == IdentityId::PK_SINE_2_16 || kase.id == IdentityId::K_SINE_2_17;
      PhiSpec phi = PhiSpec::power(kase.get("c", 1.0));
      SeriesKernel kernel{phi, odd ? Parity::Odd : Parity::Even, p, k};
      EvalResult rhs = rhs_pk(phi, s, p, k, odd ? Parity::Odd : Parity::Even);
      rep = detail::make_report(kase, mellin_transform(kernel, s, cfg), rhs);
      break;
    }
  }
  if (kase.report_only_override && rep.status == Status::Pass) {
    rep.status = Status::ReportOnly;
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += "downgraded to REPORT_ONLY: point excluded by the stated corollary";
  } else if (kase.report_only_override &&
             (rep.status == Status::Fail || rep.status == Status::Divergent)) {
    rep.status = Status::ReportOnly;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

enum class Suite { Basic, Zeta, Hurwitz, Pk, Primes, All };

inline bool suite_from_string(const std::string& s, Suite& out) {
  if (s == "basic") out = Suite::Basic;
  else if (s == "zeta") out = Suite::Zeta;
  else if (s == "hurwitz") out = Suite::Hurwitz;
  else if (s == "pk") out = Suite::Pk;
  else if (s == "primes") out = Suite::Primes;
  else if (s == "all") out = Suite::All;
  else return false;
  return true;
}

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::Basic: return "basic";
    case Suite::Zeta: return "zeta";
    case Suite::Hurwitz: return "hurwitz";
    case Suite::Pk: return "pk";
    case Suite::Primes: return "primes";
    case Suite::All: return "all";
  }
  return "all";
}

namespace detail {

inline std::vector<IdentityCase> suite_cases(Suite suite, const QuadratureConfig& cfg) {
  std::vector<IdentityCase> cs;
  auto add = [&](IdentityId id, std::map<std::string, double> params,
                 bool report_only = false) {
    IdentityCase k;
    k.id = id;
    k.params = std::move(params);
    k.cfg = cfg;
    k.report_only_override = report_only;
    cs.push_back(std::move(k));
  };
  switch (suite) {
    case Suite::Basic:
      add(IdentityId::RMT_1_2, {{"s", 0.5}, {"c", 1.0}});
      add(IdentityId::RMT_1_2, {{"s", 0.3}, {"c", 2.0}});
      add(IdentityId::RMT_1_2, {{"s", 0.7}, {"c", 1.5}});
      add(IdentityId::BINOMIAL_1_7, {{"n", 0.5}, {"a", 1.0}, {"v", 2.0}});
      add(IdentityId::BINOMIAL_1_7, {{"n", 1.0}, {"a", 2.0}, {"v", 3.0}});
      add(IdentityId::BINOMIAL_1_7, {{"n", 1.5}, {"a", 0.5}, {"v", 4.0}});
      add(IdentityId::SIN_2_3, {{"s", 0.25}, {"a", 1.0}});
      add(IdentityId::SIN_2_3, {{"s", 0.5}, {"a", 2.0}});
      add(IdentityId::SIN_2_3, {{"s", 0.75}, {"a", 1.0}});
      add(IdentityId::COS_2_4, {{"s", 0.25}, {"a", 1.0}});
      add(IdentityId::COS_2_4, {{"s", 0.5}, {"a", 2.0}});
      add(IdentityId::COS_2_4, {{"s", 0.75}, {"a", 1.0}});
      break;
    case Suite::Zeta:
      // s = 1/4 is excluded by the stated corollary (no rationale given
      // there); run it but do not assert it
      add(IdentityId::ZETA_SINE_2_5, {{"s", 0.25}}, true);
      add(IdentityId::ZETA_SINE_2_5, {{"s", 0.3}});
      add(IdentityId::ZETA_SINE_2_5, {{"s", 0.4}});
      add(IdentityId::ZETA_COSINE_2_6, {{"s", 0.25}}, true);
      add(IdentityId::ZETA_COSINE_2_6, {{"s", 0.3}});
      add(IdentityId::ZETA_COSINE_2_6, {{"s", 0.4}});
      add(IdentityId::COR22_I_2_8, {});
      add(IdentityId::COR22_II_2_9, {});
      break;
    case Suite::Hurwitz:
      add(IdentityId::HURWITZ_TAYLOR_2_11, {{"c", 2.0}, {"a", 2.0}, {"t", 0.5}});
      add(IdentityId::HURWITZ_TAYLOR_2_11, {{"c", 3.0}, {"a", 2.0}, {"t", 0.9}});
      add(IdentityId::HURWITZ_TAYLOR_2_11, {{"c", 2.5}, {"a", 3.0}, {"t", 0.25}});
      add(IdentityId::HURWITZ_2_10, {{"s", 0.5}, {"c", 3.0}, {"a", 2.0}});
      break;
    case Suite::Pk:
      add(IdentityId::SINE_MASTER_2_1, {{"s", 0.3}, {"c", 1.5}});
      add(IdentityId::SINE_MASTER_2_1, {{"s", 0.7}, {"a", 1.0}, {"v", 2.0}});
      add(IdentityId::COSINE_MASTER_2_2, {{"s", 0.3}, {"c", 1.5}});
      add(IdentityId::COSINE_MASTER_2_2, {{"s", 0.7}, {"a", 1.0}, {"v", 3.0}});
      add(IdentityId::PK_SINE_2_16, {{"s", 0.8}, {"p", 3.0}, {"k", 2.0}, {"c", 1.0}});
      add(IdentityId::K_SINE_2_17, {{"s", 0.8}, {"k", 2.0}, {"c", 1.0}});
      add(IdentityId::PK_COS_2_19, {{"s", 0.8}, {"p", 3.0}, {"k", 2.0}, {"c", 1.0}});
      add(IdentityId::K_COS_2_20, {{"s", 0.8}, {"k", 2.0}, {"c", 1.0}});
      break;
    case Suite::Primes:
    case Suite::All:
      break;
  }
  return cs;
}

inline int max_threads() {
  if (const char* env = std::getenv("RAMELLIN_MAX_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Structural reports for the prime-sum theorem: what is verifiable is
// asserted, the formal/divergent pieces are documented.
inline std::vector<IdentityReport> primes_suite_reports(std::int64_t limit) {
  std::vector<IdentityReport> out;
  NumberTheoryTables tables = build_tables(limit);

  {
    IdentityReport rep;
    rep.id_label = "PRIMES_MOBIUS_DIRECT_ORACLE";
    PrimeSumResult direct = prime_log_sum_direct(tables, 3.0, limit);
    PrimeSumResult mob = prime_log_sum_mobius(3.0, 30);
    rep.lhs = direct.value;
    rep.rhs = mob.value;
    rep.abs_err = std::abs(direct.value - mob.value);
    rep.rel_err = rep.abs_err / std::max(std::abs(mob.value), 1e-300);
    double tol = std::max(1e-9, 2.0 * direct.tail_estimate);
    rep.status = (rep.abs_err <= tol) ? Status::Pass : Status::Fail;
    rep.notes = "sum_p log p / p^3 direct vs Mobius-accelerated, tol " + fmt(tol);
    out.push_back(std::move(rep));
  }
  {
    IdentityReport rep;
    rep.id_label = "PRIMES_A0_POLE";
    PrimeSumResult a0 = a_n_formal(0, 50);
    rep.status = a0.out_of_domain ? Status::Pass : Status::Fail;
    rep.notes = "A_0 must hit the k=1 pole: " + a0.notes;
    out.push_back(std::move(rep));
  }
  {
    IdentityReport rep;
    rep.id_label = "PRIMES_A1_FORMAL";
    PrimeSumResult a1 = a_n_formal(1, 50);
    rep.lhs = a1.value;
    rep.status = Status::ReportOnly;
    rep.notes = a1.notes;
    out.push_back(std::move(rep));
  }
  {
    IdentityReport rep;
    rep.id_label = "PRIMES_THEOREM22_LHS";
    PrimeSumResult lhs = theorem22_lhs(tables, std::min<std::int64_t>(limit, 100000));
    rep.lhs = lhs.value;
    rep.status = Status::ReportOnly;
    rep.notes = "sum_p (log p/p) K_cos(p) checkpoints:";
    for (const auto& [cp, v] : lhs.checkpoints)
      rep.notes += " " + std::to_string(cp) + "->" + fmt(v);
    rep.notes +=
        "; right side of the prime-sum theorem is FORMAL (divergent "
        "ingredients) and never asserted";
    out.push_back(std::move(rep));
  }
  {
    IdentityReport rep;
    rep.id_label = "PRIMES_DIVERGENCE_N1";
    PrimeSumResult d = divergence_diagnostic(tables, 1, std::min<std::int64_t>(limit, 100000));
    rep.lhs = d.value;
    rep.status = Status::Divergent;
    rep.notes = "sum_p log p * p partial sums; " + d.notes;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace detail

struct SuiteSummary {
  int pass = 0, fail = 0, report_only = 0, divergent = 0;
};

inline SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::ReportOnly: ++s.report_only; break;
      case Status::Divergent: ++s.divergent; break;
    }
  }
  return s;
}

/// Run a fixed, documented case list; cases may evaluate concurrently but
/// reports are emitted in case order.
inline std::vector<IdentityReport> verify_suite(Suite suite, const QuadratureConfig& cfg,
                                                std::int64_t primes_limit = 1000000) {
  std::vector<IdentityCase> cases;
  if (suite == Suite::All) {
    for (Suite s : {Suite::Basic, Suite::Zeta, Suite::Hurwitz, Suite::Pk}) {
      auto cs = detail::suite_cases(s, cfg);
      cases.insert(cases.end(), cs.begin(), cs.end());
    }
  } else {
    cases = detail::suite_cases(suite, cfg);
  }
  std::vector<IdentityReport> reports(cases.size());
  const int threads = std::min<int>(detail::max_threads(), 8);
  if (threads <= 1 || cases.size() <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) reports[i] = verify(cases[i]);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
          reports[i] = verify(cases[i]);
      }));
    for (auto& f : futs) f.get();
  }
  if (suite == Suite::Primes || suite == Suite::All) {
    auto pr = detail::primes_suite_reports(primes_limit);
    reports.insert(reports.end(), pr.begin(), pr.end());
  }
  return reports;
}

}  // namespace ramellin

#endif  // RAMELLIN_IDENTITIES_HPP
