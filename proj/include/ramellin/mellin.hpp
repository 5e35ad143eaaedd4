#ifndef RAMELLIN_MELLIN_HPP
#define RAMELLIN_MELLIN_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "ramellin/quadrature.hpp"
#include "ramellin/series.hpp"

// Numerical Mellin transforms M(s) = int_0^inf x^{s-1} g(x) dx of the
// series kernels, with optional log x and 1/x weights.
//
// The integral is split three ways:
//   [0, x1]      term-by-term analytic integration of the kernel's
//                Maclaurin expansion (exact for the power/log weights,
//                absorbs the x^{s-1} endpoint singularity),
//   [x1, split]  adaptive Gauss-Kronrod panels on the closed form,
//   [split, inf) kernel-specific tails:
//     Power sin/cos   substitution u = c x^k / p onto a pure trigonometric
//                     tail, accelerated between consecutive zeros;
//     Power exp /     geometric panel extension with an analytic envelope
//     Binomial        bound (the closed forms decay like x^{-v});
//     Zeta sin/cos    the Dirichlet resummation is integrated per mode m
//                     (each mode is a scaled pure trigonometric tail) and
//                     the m-sum is closed with Hurwitz zeta tails; this is
//                     valid for effective exponent sigma < 1/2.  For
//                     sigma >= 1/2 the slow-mode drift of the kernel
//                     (~ x^{-1/2}) makes the improper integral divergent,
//                     and the evaluation reports converged = false.

namespace ramellin {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double split_point = 10.0;
  int max_panel_depth = 30;
  int tail_half_periods = 400;
  int accel_order = 10;

  bool valid() const {
    return abs_tol > 0.0 && rel_tol > 0.0 && split_point > 0.0 &&
           max_panel_depth > 0 && tail_half_periods > 0 && accel_order > 0 &&
           accel_order <= tail_half_periods / 4;
  }
};

struct MellinEvaluation {
  double s = 0.0;
  double value = std::numeric_limits<double>::quiet_NaN();
  double abs_err_estimate = std::numeric_limits<double>::infinity();
  long n_evals = 0;
  int tail_terms_used = 0;
  bool converged = false;
  unsigned flags = 0;
  std::string note;

  bool out_of_domain() const { return (flags & kOutOfDomain) != 0; }
};

namespace detail {

inline int parity_offset(Parity p) { return p == Parity::Odd ? 1 : 0; }

// Leading power of x in the kernel as x -> 0.
inline double leading_exponent(const SeriesKernel& kernel) {
  return parity_offset(kernel.parity) * kernel.exponent_k;
}

// Analytic integral of x^{beta-1} (ln x)^L over [0, x1].
inline double power_log_moment(double beta, double x1, bool with_log) {
  double xb = std::pow(x1, beta);
  if (!with_log) return xb / beta;
  return xb * (std::log(x1) / beta - 1.0 / (beta * beta));
}

struct TailOutcome {
  quad::TailResult result;
  std::string note;
};

// Tail of a Power sin/cos kernel: substitute u = c x^k / p.
inline TailOutcome power_trig_tail(const SeriesKernel& kernel, double sigma,
                                   bool with_log, double x0, double tol,
                                   const QuadratureConfig& cfg) {
  const auto& pw = std::get<PowerPhi>(kernel.phi.variant);
  const double k = kernel.exponent_k, p = kernel.scale_p, c = pw.c;
  const bool use_sin = kernel.parity == Parity::Odd;
  const double sk = sigma / k;
  TailOutcome out;
  if (sk >= 1.0) {
    out.result.converged = false;
    out.note = "oscillatory tail divergent: s/k >= 1";
    return out;
  }
  const double u0 = c * std::pow(x0, k) / p;
  const double scale = std::pow(p / c, sk) / k;
  if (!with_log) {
    quad::TailResult t = quad::trig_tail_any(sk, u0, use_sin, tol / scale,
                                             cfg.tail_half_periods,
                                             cfg.accel_order, cfg.max_panel_depth);
    t.value *= scale;
    t.err *= scale;
    out.result = t;
    return out;
  }
  // ln x = (ln u + ln(p/c)) / k after the substitution.
  quad::TailResult t0 = quad::trig_tail_any(sk, u0, use_sin, tol / scale,
                                            cfg.tail_half_periods,
                                            cfg.accel_order, cfg.max_panel_depth);
  quad::TailResult t1 =
      quad::trig_tail(sk, u0, use_sin, true, tol / scale, cfg.tail_half_periods,
                      cfg.accel_order, cfg.max_panel_depth);
  const double lpc = std::log(p / c);
  out.result.value = scale / k * (lpc * t0.value + t1.value);
  out.result.err = scale / k * (std::abs(lpc) * t0.err + t1.err);
  out.result.terms = t0.terms + t1.terms;
  out.result.n_evals = t0.n_evals + t1.n_evals;
  out.result.converged = t0.converged && t1.converged;
  return out;
}

// Tail of an absolutely decaying kernel (Binomial, Power FULL): geometric
// panel extension with an analytic envelope bound.
template <class F>
TailOutcome decaying_tail(F&& f, double x0, double sigma, double decay_v,
                          double decay_scale, double tol,
                          const QuadratureConfig& cfg) {
  TailOutcome out;
  if (decay_v <= sigma) {
    out.result.converged = false;
    out.note = "tail divergent: kernel decay does not dominate x^{s-1}";
    return out;
  }
  double a = x0;
  double acc = 0.0, err = 0.0;
  bool ok = false;
  for (int i = 0; i < 60; ++i) {
    double b = 2.0 * a;
    quad::PanelResult r =
        quad::adaptive(f, a, b, 0.02 * tol, cfg.max_panel_depth, &out.result.n_evals);
    acc += r.value;
    err += r.err;
    ++out.result.terms;
    a = b;
    // |kernel| <= decay_scale * x^{-v} beyond here
    double bound = decay_scale * std::pow(a, sigma - decay_v) / (decay_v - sigma);
    if (bound < 0.5 * tol && std::abs(r.value) < 0.5 * tol) {
      err += bound;
      ok = true;
      break;
    }
  }
  out.result.value = acc;
  out.result.err = err;
  out.result.converged = ok;
  return out;
}

// Tail of a Zeta sin/cos kernel, integrated mode by mode:
//   int_X^inf x^{sigma-1} trig(x/m^2)/m^2 dx = m^{2 sigma - 2} T(X/m^2)
// with T the pure trigonometric tail; modes beyond M1 are closed by
// expanding T(y) = C - H(y) for y < 1 and resumming the m-powers with
// Hurwitz zeta tails.  Requires sigma < 1/2 so the closure sums converge.
inline TailOutcome zeta_kernel_tail(const SeriesKernel& kernel, double sigma,
                                    double x0, double tol,
                                    const QuadratureConfig& cfg) {
  const bool use_sin = kernel.parity == Parity::Odd;
  TailOutcome out;
  if (sigma >= 0.5) {
    out.result.converged = false;
    out.note =
        "zeta-kernel tail not summable for s >= 1/2 (kernel drifts like "
        "x^{-1/2}); integral divergent at infinity";
    return out;
  }
  if (!use_sin && sigma <= 0.0) {
    out.result.converged = false;
    out.note = "cosine zeta kernel requires s > 0 at infinity closure";
    return out;
  }
  const int M1 = std::max(2, static_cast<int>(std::ceil(std::sqrt(x0))));
  const double mode_tol = tol / (2.0 * M1 + 2.0);
  quad::TailResult full =
      quad::trig_full_transform(sigma, use_sin, mode_tol, cfg.tail_half_periods,
                                cfg.accel_order, cfg.max_panel_depth);
  const double C = full.value;
  double acc = 0.0, err = full.err;
  long evals = full.n_evals;
  int terms = full.terms;
  bool ok = full.converged;
  for (int m = 1; m <= M1; ++m) {
    const double w = std::pow(static_cast<double>(m), 2.0 * sigma - 2.0);
    const double y = x0 / (static_cast<double>(m) * m);
    if (y < 1.0) {
      acc += w * (C - quad::trig_head_series(sigma, y, use_sin));
      err += w * full.err;
    } else {
      quad::TailResult t = quad::trig_tail(sigma, y, use_sin, false, mode_tol / w,
                                           cfg.tail_half_periods, cfg.accel_order,
                                           cfg.max_panel_depth);
      acc += w * t.value;
      err += w * t.err;
      evals += t.n_evals;
      terms += t.terms;
      ok = ok && t.converged;
    }
  }
  // Closure over m > M1.
  acc += C * hurwitz_zeta(2.0 - 2.0 * sigma, M1 + 1.0).value;
  double fact = 1.0;
  for (int j = 0; j < 30; ++j) {
    double e = use_sin ? sigma + 2.0 * j + 1.0 : sigma + 2.0 * j;
    int mm = use_sin ? 2 * j + 1 : 2 * j;
    if (j > 0) fact *= (mm - 1.0) * mm;
    double zc = use_sin ? hurwitz_zeta(4.0 * j + 4.0, M1 + 1.0).value
                        : hurwitz_zeta(4.0 * j + 2.0, M1 + 1.0).value;
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    double term = sign * std::pow(x0, e) / (fact * e) * zc;
    acc -= term;
    ++terms;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) break;
  }
  out.result.value = acc;
  out.result.err = err;
  out.result.terms = terms;
  out.result.n_evals = evals;
  out.result.converged = ok;
  return out;
}

}  // namespace detail

/// Oscillatory (or decaying) tail int_{x_start}^inf x^{s-1} kernel(x) dx
/// for kernels with a closed form.
inline quad::TailResult tail_oscillatory_sum(const SeriesKernel& kernel, double s,
                                             double x_start,
                                             const QuadratureConfig& cfg) {
  const double tol = std::max(cfg.abs_tol, 1e-14);
  if (!kernel.valid() || !cfg.valid() || !has_closed_form(kernel)) {
    quad::TailResult r;
    r.converged = false;
    return r;
  }
  if (kernel.phi.is_power() && kernel.parity != Parity::Full)
    return detail::power_trig_tail(kernel, s, false, x_start, tol, cfg).result;
  if (kernel.phi.is_zeta())
    return detail::zeta_kernel_tail(kernel, s, x_start, tol, cfg).result;
  if (kernel.phi.is_binomial()) {
    const auto& b = std::get<BinomialPhi>(kernel.phi.variant);
    double bound = std::pow(b.a, -b.v) * std::pow(x_start, s - b.v) /
                   std::max(b.v - s, 1e-12);
    if (b.v > s && (bound == 0.0 || bound < 1e-3 * tol)) return {};  // zero tail
    auto f = [&](double x) {
      return std::pow(x, s - 1.0) * closed_form_kernel(kernel, x).value;
    };
    return detail::decaying_tail(f, x_start, s, b.v, std::pow(b.a, -b.v), tol, cfg)
        .result;
  }
  if (kernel.phi.is_power()) {  // FULL: exp(-c x)
    const auto& pw = std::get<PowerPhi>(kernel.phi.variant);
    auto f = [&](double x) { return std::pow(x, s - 1.0) * std::exp(-pw.c * x); };
    // e^{-cx} <= Gamma(v+1) (c x)^{-v}, an algebraic envelope the generic
    // bound understands.
    double v = s + 2.0;
    double scale = std::exp(log_gamma(v + 1.0).value) / std::pow(pw.c, v);
    return detail::decaying_tail(f, x_start, s, v, scale, tol, cfg).result;
  }
  quad::TailResult r;
  r.converged = false;
  return r;
}

inline MellinEvaluation mellin_transform_shifted(const SeriesKernel& kernel,
                                                 double s, bool log_weight,
                                                 bool inverse_x,
                                                 const QuadratureConfig& cfg) {
  MellinEvaluation out;
  out.s = s;
  if (!kernel.valid() || !cfg.valid() || s <= 0.0) {
    out.flags |= kOutOfDomain;
    out.note = "invalid kernel or configuration";
    return out;
  }
  const double sigma = s - (inverse_x ? 1.0 : 0.0);
  const double alpha0 = detail::leading_exponent(kernel);
  const double e0 = sigma - 1.0 + alpha0;
  if (e0 <= -1.0) {
    out.flags |= kOutOfDomain;
    out.note =
        "integrand ~ phi(leading) * x^{" + std::to_string(e0) +
        "}" + (log_weight ? std::string(" * log x") : std::string()) +
        " near 0; divergent by comparison with the log/power test integral";
    return out;
  }
  const double tol = cfg.abs_tol;

  // Head [0, x1]: term-by-term analytic integration of the Maclaurin
  // series; x1 stays at half the series radius so the terms decay
  // geometrically.
  const double x1 =
      std::min({1.0, cfg.split_point, 0.5 * kernel.phi.maclaurin_radius()});
  detail::TermGenerator gen{kernel};
  double head = 0.0;
  double head_err = 0.0;
  int small_run = 0;
  for (int i = 0; i < 300; ++i) {
    auto [coeff, alpha] = gen.next();
    if (gen.out_of_domain) {
      out.flags |= kOutOfDomain;
      out.note = "phi undefined at a series index";
      return out;
    }
    const double beta = sigma + alpha;
    const double term = coeff * detail::power_log_moment(beta, x1, log_weight);
    head += term;
    ++out.n_evals;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(head))) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  head_err = 1e-15 * (1.0 + std::abs(head));

  // Mid [x1, split]: adaptive panels on the closed form (AUTO strategy).
  SeriesKernel auto_kernel = kernel;
  auto_kernel.strategy = Strategy::Auto;
  double split = cfg.split_point;
  bool truncated_domain = false;
  if (kernel.phi.is_hurwitz_odd()) {
    const auto& h = std::get<HurwitzOddPhi>(kernel.phi.variant);
    if (split >= h.a) {
      split = 0.999 * h.a;
      truncated_domain = true;
    }
  }
  double mid = 0.0, mid_err = 0.0;
  if (split > x1) {
    auto f = [&](double x) {
      double w = std::pow(x, sigma - 1.0);
      if (log_weight) w *= std::log(x);
      return w * eval_kernel(auto_kernel, x).value;
    };
    quad::PanelResult r =
        quad::adaptive(f, x1, split, 0.2 * tol, cfg.max_panel_depth, &out.n_evals);
    mid = r.value;
    mid_err = r.err;
  }

  // Tail [split, inf).
  double tail = 0.0, tail_err = 0.0;
  bool tail_ok = true;
  if (truncated_domain) {
    tail_ok = false;
    out.note = "kernel defined only for x < a; integral truncated at 0.999 a";
  } else if (kernel.phi.is_power() && kernel.parity != Parity::Full) {
    detail::TailOutcome t =
        detail::power_trig_tail(kernel, sigma, log_weight, split, tol, cfg);
    tail = t.result.value;
    tail_err = t.result.err;
    tail_ok = t.result.converged;
    out.tail_terms_used += t.result.terms;
    out.n_evals += t.result.n_evals;
    if (!t.note.empty()) out.note = t.note;
  } else if (kernel.phi.is_zeta()) {
    if (log_weight) {
      tail_ok = false;
      out.note = "log-weighted zeta-kernel tail not supported";
    } else {
      detail::TailOutcome t = detail::zeta_kernel_tail(kernel, sigma, split, tol, cfg);
      tail = t.result.value;
      tail_err = t.result.err;
      tail_ok = t.result.converged;
      out.tail_terms_used += t.result.terms;
      out.n_evals += t.result.n_evals;
      if (!t.note.empty()) out.note = t.note;
    }
  } else if (kernel.phi.is_binomial() || kernel.phi.is_power()) {
    auto f = [&](double x) {
      double w = std::pow(x, sigma - 1.0);
      if (log_weight) w *= std::log(x);
      return w * eval_kernel(auto_kernel, x).value;
    };
    double decay_v, decay_scale;
    if (kernel.phi.is_binomial()) {
      const auto& b = std::get<BinomialPhi>(kernel.phi.variant);
      decay_v = b.v;
      decay_scale = std::pow(b.a, -b.v) * (log_weight ? 10.0 : 1.0);
    } else {
      const auto& pw = std::get<PowerPhi>(kernel.phi.variant);
      decay_v = sigma + 2.0;
      decay_scale = std::exp(log_gamma(decay_v + 1.0).value) /
                    std::pow(pw.c, decay_v) * (log_weight ? 10.0 : 1.0);
    }
    detail::TailOutcome t =
        detail::decaying_tail(f, split, sigma, decay_v, decay_scale, tol, cfg);
    tail = t.result.value;
    tail_err = t.result.err;
    tail_ok = t.result.converged;
    out.tail_terms_used += t.result.terms;
    out.n_evals += t.result.n_evals;
    if (!t.note.empty()) out.note = t.note;
  }

  out.value = head + mid + tail;
  out.abs_err_estimate = head_err + mid_err + tail_err;
  out.converged = tail_ok && out.abs_err_estimate <=
                                std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

/// Term-wise analytic transform of the Zeta kernels for 0 < s < 1/2:
///   sum_m m^{2s-2} Gamma(s) sin-or-cos(pi s/2),
/// absolutely convergent there, with a Hurwitz zeta closure of the m-sum.
/// This is the cross-check path for the Dirichlet-resummation quadrature;
/// beyond s = 1/2 the m-sum diverges and OUT_OF_DOMAIN is returned.
inline EvalResult zeta_termwise_transform(double s, bool use_sin) {
  if (s <= 0.0 || s >= 0.5) return EvalResult::out_of_domain_result();
  constexpr int M = 16;
  double msum = 0.0;
  for (int m = 1; m <= M; ++m) msum += std::pow(static_cast<double>(m), 2.0 * s - 2.0);
  msum += hurwitz_zeta(2.0 - 2.0 * s, M + 1.0).value;
  double trig = use_sin ? std::sin(0.5 * pi * s) : std::cos(0.5 * pi * s);
  double v = msum * gamma(s).value * trig;
  return EvalResult::ok(v, 1e-13 * std::abs(v));
}

inline MellinEvaluation mellin_transform(const SeriesKernel& kernel, double s,
                                         const QuadratureConfig& cfg) {
  return mellin_transform_shifted(kernel, s, false, false, cfg);
}

}  // namespace ramellin

#endif  // RAMELLIN_MELLIN_HPP
