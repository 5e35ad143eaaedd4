#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ramellin/mellin.hpp"

namespace rm = ramellin;

static rm::SeriesKernel make_kernel(rm::PhiSpec phi, rm::Parity parity,
                                    double p = 1.0, double k = 1.0) {
  return rm::SeriesKernel{phi, parity, p, k};
}

TEST_CASE("config validity") {
  rm::QuadratureConfig cfg;
  CHECK(cfg.valid());
  cfg.accel_order = 200;  // violates accel_order <= tail_half_periods/4
  CHECK(!cfg.valid());
  cfg = {};
  cfg.abs_tol = 0.0;
  CHECK(!cfg.valid());
}

TEST_CASE("sine transform at s = 1/2 is sqrt(pi/2)") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd),
                                0.5, cfg);
  CHECK(r.converged);
  CHECK(r.value == Catch::Approx(std::sqrt(rm::pi / 2.0)).epsilon(1e-9));
}

TEST_CASE("beta integral at s = 1") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(
      make_kernel(rm::PhiSpec::binomial(1.0, 2.0), rm::Parity::Full), 1.0, cfg);
  CHECK(r.converged);
  CHECK(r.value == Catch::Approx(1.0).epsilon(1e-8));
  CHECK(r.value >= 0.0);  // positivity for a non-negative integrand
}

TEST_CASE("dirichlet integral sin x / x") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform_shifted(
      make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd), 1.0, false, true, cfg);
  CHECK(r.converged);
  CHECK(r.value == Catch::Approx(rm::pi / 2.0).epsilon(1e-8));
}

TEST_CASE("fresnel-type integral of sin(x^2)") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(
      make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd, 1.0, 2.0), 1.0, cfg);
  CHECK(r.converged);
  CHECK(r.value == Catch::Approx(std::sqrt(2.0 * rm::pi) / 4.0).epsilon(1e-8));
}

TEST_CASE("divided zeta odd kernel reproduces the pi^3/12 value") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform_shifted(
      make_kernel(rm::PhiSpec::zeta(), rm::Parity::Odd), 1.0, false, true, cfg);
  CHECK(r.converged);
  CHECK(r.value ==
        Catch::Approx(rm::pi * rm::pi * rm::pi / 12.0).epsilon(1e-6));
}

TEST_CASE("log-weighted inverse-x zeta even kernel is divergent at 0") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform_shifted(
      make_kernel(rm::PhiSpec::zeta(), rm::Parity::Even), 1.0, true, true, cfg);
  CHECK(r.out_of_domain());
  CHECK(r.note.find("divergent") != std::string::npos);
}

TEST_CASE("zeta kernels match the master right sides") {
  rm::QuadratureConfig cfg;
  for (double s : {0.25, 0.3, 0.4}) {
    auto odd =
        rm::mellin_transform(make_kernel(rm::PhiSpec::zeta(), rm::Parity::Odd), s, cfg);
    auto even = rm::mellin_transform(make_kernel(rm::PhiSpec::zeta(), rm::Parity::Even),
                                     s, cfg);
    double base = rm::riemann_zeta(2.0 - 2.0 * s).value * rm::gamma(s).value;
    CHECK(odd.converged);
    CHECK(even.converged);
    CHECK(odd.value == Catch::Approx(base * std::sin(0.5 * rm::pi * s)).epsilon(1e-6));
    CHECK(even.value == Catch::Approx(base * std::cos(0.5 * rm::pi * s)).epsilon(1e-6));
  }
}

TEST_CASE("termwise analytic zeta path cross-checks the quadrature") {
  rm::QuadratureConfig cfg;
  for (double s : {0.25, 0.4}) {
    auto tw = rm::zeta_termwise_transform(s, true);
    auto q =
        rm::mellin_transform(make_kernel(rm::PhiSpec::zeta(), rm::Parity::Odd), s, cfg);
    CHECK(!tw.out_of_domain());
    CHECK(q.value == Catch::Approx(tw.value).epsilon(1e-8));
  }
  CHECK(rm::zeta_termwise_transform(0.5, true).out_of_domain());
  CHECK(rm::zeta_termwise_transform(0.6, false).out_of_domain());
}

TEST_CASE("zeta kernel transform diverges at infinity for s >= 1/2") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(make_kernel(rm::PhiSpec::zeta(), rm::Parity::Odd),
                                0.75, cfg);
  CHECK(!r.converged);
  CHECK(r.note.find("divergent") != std::string::npos);
}

TEST_CASE("divergence at zero is diagnosed") {
  rm::QuadratureConfig cfg;
  // s - 1 + 0 <= -1: even kernel with inverse_x at s = 1 gives exponent -1
  auto r = rm::mellin_transform_shifted(
      make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Even), 0.5, false, true, cfg);
  CHECK(r.out_of_domain());
  CHECK(!r.note.empty());
}

TEST_CASE("oscillatory tail consistency with the analytic total") {
  rm::QuadratureConfig cfg;
  auto kernel = make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd);
  auto tail = rm::tail_oscillatory_sum(kernel, 0.5, 10.0, cfg);
  REQUIRE(tail.converged);
  // head by direct panel quadrature on [eps, 10]
  long evals = 0;
  auto f = [](double x) { return std::sin(x) / std::sqrt(x); };
  double head = rm::quad::adaptive(f, 1e-12, 10.0, 1e-12, 40, &evals).value;
  CHECK(head + tail.value == Catch::Approx(std::sqrt(rm::pi / 2.0)).epsilon(1e-9));
}

TEST_CASE("zero-length tail for an already-dead kernel") {
  rm::QuadratureConfig cfg;
  // (1+x)^{-6} at x >= 1e5 with s = 0.5 is below any tolerance
  auto kernel = make_kernel(rm::PhiSpec::binomial(1.0, 6.0), rm::Parity::Full);
  auto tail = rm::tail_oscillatory_sum(kernel, 0.5, 1e5, cfg);
  CHECK(tail.value == 0.0);
  CHECK(tail.err == 0.0);
  CHECK(tail.terms == 0);
}

TEST_CASE("tolerance contract under tightening") {
  rm::QuadratureConfig cfg;
  rm::QuadratureConfig tight = cfg;
  tight.abs_tol = 1e-11;
  tight.rel_tol = 1e-10;
  std::vector<std::pair<rm::SeriesKernel, double>> cases = {
      {make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd), 0.5},
      {make_kernel(rm::PhiSpec::binomial(1.0, 2.0), rm::Parity::Full), 1.0},
      {make_kernel(rm::PhiSpec::zeta(), rm::Parity::Even), 0.3},
  };
  for (const auto& [kernel, s] : cases) {
    auto base = rm::mellin_transform(kernel, s, cfg);
    auto re = rm::mellin_transform(kernel, s, tight);
    REQUIRE(base.converged);
    CHECK(std::abs(base.value - re.value) <= 10.0 * base.abs_err_estimate);
  }
}

TEST_CASE("split invariance") {
  auto kernel = make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd);
  std::vector<rm::MellinEvaluation> rs;
  for (double split : {5.0, 10.0, 20.0}) {
    rm::QuadratureConfig cfg;
    cfg.split_point = split;
    rs.push_back(rm::mellin_transform(kernel, 0.5, cfg));
    REQUIRE(rs.back().converged);
  }
  for (size_t i = 1; i < rs.size(); ++i)
    CHECK(std::abs(rs[i].value - rs[0].value) <=
          rs[i].abs_err_estimate + rs[0].abs_err_estimate + 1e-12);
}

TEST_CASE("converged flag honors the error estimate") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(make_kernel(rm::PhiSpec::power(1.0), rm::Parity::Odd),
                                0.5, cfg);
  if (r.converged)
    CHECK(r.abs_err_estimate <=
          std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
}

TEST_CASE("hurwitz odd kernel transform is reported as truncated") {
  rm::QuadratureConfig cfg;
  auto r = rm::mellin_transform(
      make_kernel(rm::PhiSpec::hurwitz_odd(3.0, 2.0), rm::Parity::Odd), 0.5, cfg);
  CHECK(!r.converged);
  CHECK(r.note.find("truncated") != std::string::npos);
}
