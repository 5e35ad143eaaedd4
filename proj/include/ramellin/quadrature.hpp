#ifndef RAMELLIN_QUADRATURE_HPP
#define RAMELLIN_QUADRATURE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "ramellin/common.hpp"

// Panel quadrature (Gauss-Kronrod 7-15) with recursive bisection, and the
// accelerated evaluation of semi-infinite oscillatory trigonometric tails
//   int_y^inf u^{sigma-1} (ln u)^L trig(u) du
// by summing sub-integrals between consecutive zeros of the oscillation
// and repeatedly averaging the alternating partial-sum sequence.

namespace ramellin {
namespace quad {

// Kronrod-15 abscissae/weights and the embedded Gauss-7 weights.
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  double value;
  double err;
};

template <class F>
PanelResult gk15(F&& f, double a, double b, long* n_evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = 0.0, fg = 0.0;
  const double fc = f(c);
  fk += gk_wk[7] * fc;
  fg += gk_wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double s = f(c - h * gk_x[i]) + f(c + h * gk_x[i]);
    fk += gk_wk[i] * s;
    if (i % 2 == 1) fg += gk_wg[i / 2] * s;
  }
  if (n_evals) *n_evals += 15;
  return {fk * h, std::abs((fk - fg) * h)};
}

template <class F>
PanelResult adaptive(F&& f, double a, double b, double tol, int max_depth,
                     long* n_evals, int depth = 0) {
  PanelResult r = gk15(f, a, b, n_evals);
  if (r.err <= tol || depth >= max_depth) return r;
  const double m = 0.5 * (a + b);
  PanelResult l = adaptive(f, a, m, 0.5 * tol, max_depth, n_evals, depth + 1);
  PanelResult rr = adaptive(f, m, b, 0.5 * tol, max_depth, n_evals, depth + 1);
  return {l.value + rr.value, l.err + rr.err};
}

// Limit estimate of a (near-)alternating partial-sum sequence by iterated
// pairwise averaging of the trailing window.
inline double averaged_estimate(const std::vector<double>& partials, int order) {
  int n = static_cast<int>(partials.size());
  int window = std::min(n, 2 * order + 5);
  std::vector<double> row(partials.end() - window, partials.end());
  int passes = std::min<int>(order, window - 1);
  for (int k = 0; k < passes; ++k) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row.back();
}

struct TailResult {
  double value = 0.0;
  double err = 0.0;
  int terms = 0;
  bool converged = true;
  long n_evals = 0;
};

/// int_{y0}^inf u^{sigma-1} (ln u if with_log) trig(u) du, trig = sin or cos.
/// Sub-integrals run between consecutive zeros of the oscillation
/// (j*pi for sin, (j-1/2)*pi for cos); the alternating partial sums are
/// accelerated by repeated averaging of order accel_order.
inline TailResult trig_tail(double sigma, double y0, bool use_sin, bool with_log,
                            double tol, int max_half_periods, int accel_order,
                            int max_depth) {
  TailResult out;
  auto f = [&](double u) {
    double w = std::pow(u, sigma - 1.0);
    if (with_log) w *= std::log(u);
    return w * (use_sin ? std::sin(u) : std::cos(u));
  };
  // first zero at or after y0
  double z;
  if (use_sin)
    z = pi * std::ceil(y0 / pi);
  else
    z = pi * (std::ceil(y0 / pi - 0.5) + 0.5);
  if (z < y0) z += pi;
  double head = 0.0, head_err = 0.0;
  if (z > y0) {
    PanelResult r = adaptive(f, y0, z, 0.05 * tol, max_depth, &out.n_evals);
    head = r.value;
    head_err = r.err;
  }
  std::vector<double> partials;
  partials.reserve(max_half_periods);
  double acc = 0.0;
  double est = 0.0, est_err = 0.0;
  bool done = false;
  for (int j = 0; j < max_half_periods; ++j) {
    PanelResult r = adaptive(f, z, z + pi, 0.01 * tol, 4, &out.n_evals);
    z += pi;
    acc += r.value;
    partials.push_back(acc);
    ++out.terms;
    if (static_cast<int>(partials.size()) >= 2 * accel_order + 6) {
      est = averaged_estimate(partials, accel_order);
      std::vector<double> prev(partials.begin(), partials.end() - 1);
      est_err = std::abs(est - averaged_estimate(prev, accel_order));
      if (est_err < tol) {
        done = true;
        break;
      }
    }
  }
  out.value = head + est;
  out.err = head_err + std::max(est_err, 1e-16 * std::abs(est));
  out.converged = done;
  return out;
}

/// int_0^y u^{sigma-1} trig(u) du by the Maclaurin series of the
/// trigonometric factor; requires y <= ~1 and sigma > -1 (sin) / > 0 (cos).
inline double trig_head_series(double sigma, double y, bool use_sin) {
  double sum = 0.0;
  double fact = 1.0;
  for (int j = 0; j < 40; ++j) {
    double e = use_sin ? sigma + 2.0 * j + 1.0 : sigma + 2.0 * j;
    int m = use_sin ? 2 * j + 1 : 2 * j;
    if (j > 0) {
      // update factorial to m!
      fact *= (m - 1.0) * m;
    } else if (!use_sin) {
      fact = 1.0;
    }
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    double term = sign * std::pow(y, e) / (fact * e);
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

/// Full transform constant C = int_0^inf u^{sigma-1} trig(u) du computed
/// numerically (series head on [0,1] plus accelerated oscillatory tail);
/// requires 0 < sigma < 1 for cos, -1 < sigma < 1 for sin.
inline TailResult trig_full_transform(double sigma, bool use_sin, double tol,
                                      int max_half_periods, int accel_order,
                                      int max_depth) {
  TailResult t = trig_tail(sigma, 1.0, use_sin, false, tol, max_half_periods,
                           accel_order, max_depth);
  t.value += trig_head_series(sigma, 1.0, use_sin);
  return t;
}

/// int_y^inf u^{sigma-1} trig(u) du for any y > 0 in the convergence strip;
/// small y is routed through the series head to avoid the endpoint spike.
inline TailResult trig_tail_any(double sigma, double y, bool use_sin, double tol,
                                int max_half_periods, int accel_order,
                                int max_depth) {
  bool head_ok = use_sin ? (sigma > -1.0) : (sigma > 0.0);
  if (y < 1.0 && head_ok) {
    TailResult t = trig_full_transform(sigma, use_sin, tol, max_half_periods,
                                       accel_order, max_depth);
    t.value -= trig_head_series(sigma, y, use_sin);
    return t;
  }
  return trig_tail(sigma, y, use_sin, false, tol, max_half_periods, accel_order,
                   max_depth);
}

}  // namespace quad
}  // namespace ramellin

#endif  // RAMELLIN_QUADRATURE_HPP
