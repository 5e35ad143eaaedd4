#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ramellin/primes.hpp"

namespace rm = ramellin;

static bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

static int mobius_trial(std::int64_t n) {
  int mu = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

TEST_CASE("tables at a tiny limit, exhaustively") {
  auto t = rm::build_tables(10);
  CHECK(t.primes == std::vector<std::int64_t>{2, 3, 5, 7});
  std::vector<int> mu_expected = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  REQUIRE(t.mobius.size() == 11);
  for (int n = 0; n <= 10; ++n) CHECK(int(t.mobius[n]) == mu_expected[n]);
  CHECK(t.pi_checkpoints.at(10) == 4);
}

TEST_CASE("tables against trial division") {
  const std::int64_t N = 10000;
  auto t = rm::build_tables(N);
  std::int64_t count = 0;
  for (std::int64_t n = 2; n <= N; ++n)
    if (is_prime_trial(n)) ++count;
  CHECK(count == 1229);
  CHECK(std::int64_t(t.primes.size()) == 1229);
  for (size_t i = 0; i < t.primes.size(); ++i) CHECK(is_prime_trial(t.primes[i]));
  for (std::int64_t n = 1; n <= 1000; ++n)
    CHECK(int(t.mobius[n]) == mobius_trial(n));
  // Mertens function from the table
  std::int64_t mertens = 0;
  for (std::int64_t n = 1; n <= 1000; ++n) mertens += t.mobius[n];
  std::int64_t mertens_ref = 0;
  for (std::int64_t n = 1; n <= 1000; ++n) mertens_ref += mobius_trial(n);
  CHECK(mertens == mertens_ref);
  CHECK(t.pi_checkpoints.at(100) == 25);
  CHECK(t.pi_checkpoints.at(1000) == 168);
  CHECK(t.pi_checkpoints.at(10000) == 1229);
}

TEST_CASE("prime_count") {
  auto t = rm::build_tables(1000);
  CHECK(rm::prime_count(t, 10.0) == 4);
  CHECK(rm::prime_count(t, 11.0) == 5);
  CHECK(rm::prime_count(t, 2.0) == 1);
  CHECK(rm::prime_count(t, 1.5) == 0);
  CHECK_THROWS_AS(rm::prime_count(t, 2000.0), std::out_of_range);
  CHECK_THROWS_AS(rm::prime_count(t, -1.0), std::out_of_range);
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(rm::build_tables(1), std::invalid_argument);
  CHECK_THROWS_AS(rm::build_tables(2000000000LL), std::invalid_argument);
}

TEST_CASE("direct prime log-sum basics") {
  auto t = rm::build_tables(100000);
  // hand sum over the first four primes at s = 2
  auto r = rm::prime_log_sum_direct(t, 2.0, 10);
  double hand = std::log(2.0) / 4.0 + std::log(3.0) / 9.0 + std::log(5.0) / 25.0 +
                std::log(7.0) / 49.0;
  CHECK(r.value == Catch::Approx(hand).epsilon(1e-14));
  CHECK(r.primes_used == 4);
  CHECK(!r.divergent);
  CHECK(r.tail_estimate > 0.0);

  auto d = rm::prime_log_sum_direct(t, 1.0, 100000);
  CHECK(d.divergent);
  CHECK(std::isinf(d.tail_estimate));

  auto ood = rm::prime_log_sum_direct(t, 2.0, 200000);
  CHECK(ood.out_of_domain);
}

TEST_CASE("mobius acceleration against the direct oracle") {
  auto t = rm::build_tables(1000000);
  for (double s : {2.0, 3.0, 4.0}) {
    auto direct = rm::prime_log_sum_direct(t, s, 1000000);
    auto mob = rm::prime_log_sum_mobius(s, 30);
    CHECK(std::abs(direct.value - mob.value) <=
          std::max(1e-9, 2.0 * direct.tail_estimate));
  }
  CHECK(rm::prime_log_sum_mobius(0.5, 30).out_of_domain);
  CHECK(rm::prime_log_sum_mobius(2.0, 0).out_of_domain);
}

TEST_CASE("mobius formula structure at K = 1") {
  // K = 1 keeps only mu(1)/(s-1) - zeta'(s)/zeta(s) - 1/(s-1) = -zeta'(s)/zeta(s)
  double s = 3.0;
  auto mob = rm::prime_log_sum_mobius(s, 1);
  double ref = -rm::zeta_derivative(s, 1).value / rm::riemann_zeta(s).value;
  CHECK(mob.value == Catch::Approx(ref).epsilon(1e-12));
  CHECK(mob.mobius_terms_used == 1);
}

TEST_CASE("f_analytic domain and truncation flag") {
  CHECK(rm::f_analytic(1.0, 10).out_of_domain());
  CHECK(rm::f_analytic(0.0, 10).out_of_domain());
  auto f = rm::f_analytic(2.0, 30);
  CHECK(std::isfinite(f.value));
  CHECK(f.abs_err_estimate >= 0.0);
}

TEST_CASE("c_n coefficients") {
  CHECK(rm::c_n(0).value ==
        Catch::Approx(rm::pi * rm::pi / 6.0).epsilon(1e-13));
  CHECK(rm::c_n(1).value ==
        Catch::Approx(-rm::riemann_zeta(6.0).value / 2.0).epsilon(1e-13));
  CHECK(rm::c_n(1).value == Catch::Approx(-0.5086715309922246).epsilon(1e-12));
  CHECK(rm::c_n(2).value ==
        Catch::Approx(rm::riemann_zeta(10.0).value / 24.0).epsilon(1e-13));
  for (int n = 0; n < 6; ++n) {
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK(sign * rm::c_n(n).value > 0.0);
  }
  CHECK(std::abs(rm::c_n(4).value) < 1e-2);
  CHECK(std::abs(rm::c_n(5).value) < std::abs(rm::c_n(4).value));
  CHECK(rm::c_n(-1).out_of_domain());
}

TEST_CASE("a_n formal structure") {
  auto a0 = rm::a_n_formal(0, 50);
  CHECK(a0.out_of_domain);
  CHECK((a0.notes.find("pole") != std::string::npos ||
         a0.notes.find("denominator") != std::string::npos));

  auto a1 = rm::a_n_formal(1, 3);
  // hand sum at s = -1: mu(1)/(-2) + mu(2)/(-3) + mu(3)/(-4)
  double hand = -0.5 + 1.0 / 3.0 + 0.25;
  CHECK(a1.value == Catch::Approx(hand).epsilon(1e-14));
  CHECK(a1.divergent);
  CHECK(a1.notes.find("FORMAL") != std::string::npos);
  CHECK(rm::a_n_formal(-1, 10).out_of_domain);
}

TEST_CASE("stieltjes left side") {
  auto t = rm::build_tables(10000);
  // four-term hand check: sum over p in {2,3,5,7} of log p / p * K_cos(p)
  rm::SeriesKernel zeven{rm::PhiSpec::zeta(), rm::Parity::Even};
  double hand = 0.0;
  for (std::int64_t p : {2, 3, 5, 7})
    hand += std::log(double(p)) / p * rm::closed_form_kernel(zeven, double(p)).value;
  auto r = rm::theorem22_lhs(t, 10);
  CHECK(r.value == Catch::Approx(hand).epsilon(1e-12));
  CHECK(r.primes_used == 4);

  // kernel bound |K_cos(p)| <= zeta(2) at every prime used
  double z2 = rm::pi * rm::pi / 6.0;
  for (std::int64_t p : {2, 3, 5, 7, 11, 9973})
    CHECK(std::abs(rm::closed_form_kernel(zeven, double(p)).value) <= z2 + 1e-12);

  // truncated m-sum converges to the resummed kernel
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto exact = rm::theorem22_lhs(t, p);
    auto trunc = rm::theorem22_lhs(t, p, 200000);
    CHECK(std::abs(exact.value - trunc.value) <= 1e-4);
  }

  auto full = rm::theorem22_lhs(t, 10000);
  REQUIRE(full.checkpoints.size() >= 2);
  CHECK(full.checkpoints[0].first == 100);
  CHECK(full.checkpoints[1].first == 1000);
  CHECK(rm::theorem22_lhs(t, 100000).out_of_domain);
}

TEST_CASE("divergence diagnostic") {
  auto t = rm::build_tables(100000);
  // hand sum for up_to = 10, n = 1: sum log p * p
  auto r10 = rm::divergence_diagnostic(t, 1, 10);
  double hand = 2.0 * std::log(2.0) + 3.0 * std::log(3.0) + 5.0 * std::log(5.0) +
                7.0 * std::log(7.0);
  CHECK(r10.value == Catch::Approx(hand).epsilon(1e-14));
  CHECK(r10.divergent);

  auto r3 = rm::divergence_diagnostic(t, 1, 1000);
  auto r4 = rm::divergence_diagnostic(t, 1, 10000);
  auto r5 = rm::divergence_diagnostic(t, 1, 100000);
  CHECK(r4.value >= 10.0 * r3.value);  // ~quadratic growth
  CHECK(r5.value >= 10.0 * r4.value);
  // checkpoints monotone increasing (all terms positive)
  for (size_t i = 1; i < r5.checkpoints.size(); ++i)
    CHECK(r5.checkpoints[i].second >= r5.checkpoints[i - 1].second);
  CHECK(r5.notes.find("growth exponent") != std::string::npos);
  CHECK(rm::divergence_diagnostic(t, 0, 100).out_of_domain);
}

TEST_CASE("kahan accumulation is stable at scale") {
  auto t = rm::build_tables(1000000);
  // s just above 1: large, cancellation-prone sum; value must be finite and
  // agree with a long-double naive pass
  long double naive = 0.0L;
  for (std::int64_t p : t.primes)
    naive += std::log((long double)p) / std::pow((long double)p, 1.5L);
  auto r = rm::prime_log_sum_direct(t, 1.5, 1000000);
  CHECK(r.value == Catch::Approx((double)naive).epsilon(1e-12));
}
