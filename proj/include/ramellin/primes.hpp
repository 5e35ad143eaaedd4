#ifndef RAMELLIN_PRIMES_HPP
#define RAMELLIN_PRIMES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramellin/series.hpp"
#include "ramellin/specfun.hpp"

// Number-theoretic machinery for the prime-counting Stieltjes sum: sieves
// for primes and the Mobius function, direct and Mobius-accelerated prime
// log-sums, the c_n / A_n coefficient structure, and divergence
// diagnostics for the formally divergent pieces.

namespace ramellin {

struct NumberTheoryTables {
  std::int64_t limit_n = 0;
  std::vector<std::int64_t> primes;                 // all primes <= limit_n
  std::vector<std::int8_t> mobius;                  // mobius[k], 1 <= k <= limit_n
  std::map<std::int64_t, std::int64_t> pi_checkpoints;  // powers of ten
};

struct PrimeSumResult {
  double value = 0.0;
  std::int64_t primes_used = 0;
  std::int64_t mobius_terms_used = 0;
  double tail_estimate = 0.0;
  bool divergent = false;
  bool out_of_domain = false;
  std::string notes;
  std::vector<std::pair<std::int64_t, double>> checkpoints;
};

namespace detail {

inline std::vector<std::int64_t> simple_sieve(std::int64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::int64_t> ps;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (std::int64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return ps;
}

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

/// Segmented sieve of primes and Mobius values up to limit_n.
inline NumberTheoryTables build_tables(std::int64_t limit_n) {
  if (limit_n < 2) throw std::invalid_argument("build_tables: limit_n < 2");
  if (limit_n > 1000000000LL)
    throw std::invalid_argument("build_tables: limit_n exceeds the 1e9 resource guard");
  NumberTheoryTables t;
  t.limit_n = limit_n;
  t.mobius.assign(limit_n + 1, 1);
  t.mobius[0] = 0;
  const std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit_n))) + 1;
  const std::vector<std::int64_t> base = detail::simple_sieve(root);
  const std::int64_t seg_size = 1 << 20;
  std::vector<std::int64_t> rem(seg_size);
  std::vector<std::int8_t> mu(seg_size);
  for (std::int64_t lo = 2; lo <= limit_n; lo += seg_size) {
    const std::int64_t hi = std::min(lo + seg_size - 1, limit_n);
    const std::int64_t len = hi - lo + 1;
    for (std::int64_t i = 0; i < len; ++i) {
      rem[i] = lo + i;
      mu[i] = 1;
    }
    for (std::int64_t p : base) {
      if (p * p > hi) break;
      for (std::int64_t n = ((lo + p - 1) / p) * p; n <= hi; n += p) {
        std::int64_t i = n - lo;
        mu[i] = static_cast<std::int8_t>(-mu[i]);
        rem[i] /= p;
        if (rem[i] % p == 0) {
          mu[i] = 0;
          while (rem[i] % p == 0) rem[i] /= p;
        }
      }
    }
    for (std::int64_t i = 0; i < len; ++i) {
      std::int64_t n = lo + i;
      // at most one prime factor > sqrt(hi) can remain in rem
      if (rem[i] > 1) mu[i] = static_cast<std::int8_t>(-mu[i]);
      bool is_prime = (rem[i] == n) || std::binary_search(base.begin(), base.end(), n);
      if (is_prime) t.primes.push_back(n);
      t.mobius[n] = mu[i];
    }
  }
  for (std::int64_t c = 10; c <= limit_n; c *= 10) {
    std::int64_t cnt = static_cast<std::int64_t>(
        std::upper_bound(t.primes.begin(), t.primes.end(), c) - t.primes.begin());
    t.pi_checkpoints[c] = cnt;
  }
  return t;
}

/// pi(x): number of primes <= x, from the tables.
inline std::int64_t prime_count(const NumberTheoryTables& t, double x) {
  if (x < 0.0 || x > static_cast<double>(t.limit_n))
    throw std::out_of_range("prime_count: x outside table range");
  std::int64_t xi = static_cast<std::int64_t>(std::floor(x));
  return static_cast<std::int64_t>(
      std::upper_bound(t.primes.begin(), t.primes.end(), xi) - t.primes.begin());
}

/// sum_{p <= up_to} log p / p^s, compensated accumulation.  For s > 1 the
/// tail is bounded by int_N^inf log t * t^{-s} dt; for s <= 1 the sum is
/// divergent and only the partial value is reported.
inline PrimeSumResult prime_log_sum_direct(const NumberTheoryTables& t, double s,
                                           std::int64_t up_to) {
  PrimeSumResult r;
  if (up_to > t.limit_n) {
    r.out_of_domain = true;
    r.notes = "up_to exceeds table limit";
    return r;
  }
  detail::KahanSum acc;
  for (std::int64_t p : t.primes) {
    if (p > up_to) break;
    acc.add(std::log(static_cast<double>(p)) * std::pow(static_cast<double>(p), -s));
    ++r.primes_used;
  }
  r.value = acc.sum;
  if (s > 1.0) {
    const double N = static_cast<double>(up_to);
    r.tail_estimate =
        std::pow(N, 1.0 - s) * (std::log(N) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  } else {
    r.divergent = true;
    r.tail_estimate = std::numeric_limits<double>::infinity();
    r.notes = "sum divergent for s <= 1; partial value reported";
  }
  return r;
}

/// f(s) = -sum_{k<=K} mu(k) { zeta'(ks)/zeta(ks) + 1/(ks-1) }, s > 1.
inline EvalResult f_analytic(double s, int K) {
  if (s <= 1.0 || K < 1) return EvalResult::out_of_domain_result();
  static thread_local std::vector<std::int8_t> mu_cache;
  if (static_cast<int>(mu_cache.size()) <= K) {
    NumberTheoryTables t = build_tables(std::max(K, 2));
    mu_cache = t.mobius;
  }
  double sum = 0.0;
  double last = 0.0;
  for (int k = 1; k <= K; ++k) {
    if (mu_cache[k] == 0) continue;
    const double ks = k * s;
    const double term = mu_cache[k] * (zeta_derivative(ks, 1).value / riemann_zeta(ks).value +
                                       1.0 / (ks - 1.0));
    sum -= term;
    last = term;
  }
  unsigned flags = (std::abs(last) > 1e-12) ? kTruncated : 0u;
  return {sum, std::abs(last) + 1e-15 * (1.0 + std::abs(sum)), flags};
}

/// Mobius-accelerated prime log-sum:
/// sum_p log p / p^s = sum_{k<=K} mu(k)/(sk-1) + f(s), s > 1.
inline PrimeSumResult prime_log_sum_mobius(double s, int K) {
  PrimeSumResult r;
  if (s <= 1.0 || K < 1) {
    r.out_of_domain = true;
    r.notes = "mobius formula valid only for s > 1";
    return r;
  }
  NumberTheoryTables t = build_tables(std::max(K, 2));
  detail::KahanSum acc;
  for (int k = 1; k <= K; ++k) {
    if (t.mobius[k] == 0) continue;
    acc.add(t.mobius[k] / (s * k - 1.0));
    ++r.mobius_terms_used;
  }
  EvalResult f = f_analytic(s, K);
  r.value = acc.sum + f.value;
  r.tail_estimate = f.abs_err_estimate;
  return r;
}

/// c_n = zeta(4n+2) (-1)^n / (2n)!.
inline EvalResult c_n(int n) {
  if (n < 0) return EvalResult::out_of_domain_result();
  const double z = riemann_zeta(4.0 * n + 2.0).value;
  double lg = log_gamma(2.0 * n + 1.0).value;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double v = sign * z * std::exp(-lg);
  return EvalResult::ok(v, 1e-14 * std::abs(v));
}

/// A_n = sum_k mu(k)/((1-2n)k - 1) + f(1-2n), evaluated literally as far
/// as it is defined.  The Mobius partial sum is reported; f(1-2n) lies
/// outside its validity domain s > 1 for every n >= 0, so the result is
/// labeled FORMAL and divergent.  n = 0 hits the k = 1 pole.
inline PrimeSumResult a_n_formal(int n, int K) {
  PrimeSumResult r;
  if (n < 0 || K < 1) {
    r.out_of_domain = true;
    return r;
  }
  const double s = 1.0 - 2.0 * n;
  if (n == 0) {
    r.out_of_domain = true;
    r.notes = "k = 1 term has vanishing denominator (1-2n)k - 1 = 0 at n = 0";
    return r;
  }
  NumberTheoryTables t = build_tables(std::max(K, 2));
  detail::KahanSum acc;
  for (int k = 1; k <= K; ++k) {
    if (t.mobius[k] == 0) continue;
    acc.add(t.mobius[k] / (s * k - 1.0));
    ++r.mobius_terms_used;
  }
  r.value = acc.sum;
  r.divergent = true;
  r.tail_estimate = std::numeric_limits<double>::infinity();
  r.notes =
      "FORMAL: f(1-2n) not evaluable (outside its domain Re(s) > 1); "
      "Mobius partial sum reported only";
  return r;
}

/// Left side of the prime Stieltjes sum:
/// sum_{p <= up_to} (log p / p) K_cos(p), with K_cos the cosine Dirichlet
/// resummation kernel.  Partial sums at decade checkpoints are recorded.
/// m_terms > 0 truncates the kernel's m-sum directly (diagnostic only);
/// the default uses the exact resummation.
inline PrimeSumResult theorem22_lhs(const NumberTheoryTables& t, std::int64_t up_to,
                                    int m_terms = 0) {
  PrimeSumResult r;
  if (up_to > t.limit_n) {
    r.out_of_domain = true;
    r.notes = "up_to exceeds table limit";
    return r;
  }
  SeriesKernel zeven{PhiSpec::zeta(), Parity::Even};
  detail::KahanSum acc;
  std::int64_t next_cp = 100;
  for (std::int64_t p : t.primes) {
    if (p > up_to) break;
    while (p > next_cp && next_cp <= up_to) {
      r.checkpoints.emplace_back(next_cp, acc.sum);
      next_cp *= 10;
    }
    const double pv = static_cast<double>(p);
    double kv;
    if (m_terms > 0) {
      kv = 0.0;
      for (int m = 1; m <= m_terms; ++m)
        kv += std::cos(pv / (static_cast<double>(m) * m)) / (static_cast<double>(m) * m);
    } else {
      kv = closed_form_kernel(zeven, pv).value;
    }
    acc.add(std::log(pv) / pv * kv);
    ++r.primes_used;
  }
  while (next_cp <= up_to) {
    r.checkpoints.emplace_back(next_cp, acc.sum);
    next_cp *= 10;
  }
  r.value = acc.sum;
  r.notes = "partial sums at decade checkpoints recorded for trend inspection";
  return r;
}

/// Divergence diagnostic for the interchange target sum_p log p * p^{2n-1}:
/// partial sums at logarithmic checkpoints plus a fitted growth exponent.
inline PrimeSumResult divergence_diagnostic(const NumberTheoryTables& t, int n,
                                            std::int64_t up_to) {
  PrimeSumResult r;
  if (n < 1 || up_to > t.limit_n) {
    r.out_of_domain = true;
    return r;
  }
  detail::KahanSum acc;
  std::int64_t next_cp = 10;
  for (std::int64_t p : t.primes) {
    if (p > up_to) break;
    while (p > next_cp && next_cp <= up_to) {
      r.checkpoints.emplace_back(next_cp, acc.sum);
      next_cp *= 10;
    }
    const double pv = static_cast<double>(p);
    acc.add(std::log(pv) * std::pow(pv, 2.0 * n - 1.0));
    ++r.primes_used;
  }
  while (next_cp <= up_to) {
    r.checkpoints.emplace_back(next_cp, acc.sum);
    next_cp *= 10;
  }
  r.value = acc.sum;
  r.divergent = true;
  r.tail_estimate = std::numeric_limits<double>::infinity();
  // least-squares slope of log(partial sum) against log(checkpoint)
  if (r.checkpoints.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& [cp, v] : r.checkpoints) {
      if (v <= 0.0) continue;
      double x = std::log(static_cast<double>(cp)), y = std::log(v);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++m;
    }
    if (m >= 2) {
      double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      r.notes = "fitted growth exponent of partial sums vs up_to: " + std::to_string(slope);
    }
  }
  return r;
}

}  // namespace ramellin

#endif  // RAMELLIN_PRIMES_HPP
