#include <catch2/catch_amalgamated.hpp>

#include "hgft/hyp2f1.hpp"
#include "oracles.hpp"

using namespace hgft;
using Catch::Approx;

namespace {
oracle::Rng& rng() {
  static oracle::Rng r(77031ull);
  return r;
}
}  // namespace

TEST_CASE("trivial values") {
  ParamTriple t{{0.7, 0.2}, {1.3, -0.4}, {2.5, 0.1}};
  CHECK(gauss_2f1(t, cplx(0.0)).value == cplx(1.0));
  ParamTriple zero{{0.0, 0.0}, {1.3, 0.0}, {2.0, 0.0}};
  CHECK(zero.ab_zero());
  CHECK(gauss_2f1(zero, cplx(0.5, 0.2)).value == cplx(1.0));
  CHECK(d2f1(t, cplx(0.0)).value == t.a * t.b / t.c);
}

TEST_CASE("closed forms") {
  ParamTriple t112{1.0, 1.0, 2.0};
  CHECK(gauss_2f1(t112, cplx(0.5)).value.real() == Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(gauss_2f1({1.0, 1.0, 3.0}, cplx(1.0)).value.real() == Approx(2.0).epsilon(1e-12));
  // derivative of -log(1-z)/z at 0.3
  CHECK(d2f1(t112, cplx(0.3)).value.real() ==
        Approx(oracle::f112_deriv(cplx(0.3)).real()).epsilon(1e-12));
  for (cplx z : {cplx(0.4, 0.2), cplx(-0.7, 0.1), cplx(0.2, -0.6)}) {
    cplx got = gauss_2f1({1.0, 2.0, 3.0}, z).value;
    CHECK(std::abs(got - oracle::f123(z)) <= 1e-12 * std::abs(oracle::f123(z)));
  }
}

TEST_CASE("derivative matches central finite differences") {
  const double h = 1e-5;
  for (auto [t, z] : {std::pair{ParamTriple{1.0, 2.0, 3.0}, cplx(0.4, 0.0)},
                      std::pair{ParamTriple{{0.5, 0.5}, {1.5, -0.25}, {2.25, 0.3}}, cplx(0.2, 0.35)},
                      std::pair{ParamTriple{1.0, 1.0, 2.0}, cplx(-0.45, 0.3)}}) {
    cplx fd = (gauss_2f1(t, z + h).value - gauss_2f1(t, z - h).value) / (2.0 * h);
    CHECK(std::abs(d2f1(t, z).value - fd) <= 1e-7);
  }
}

TEST_CASE("parameter symmetry is bit-exact") {
  for (int i = 0; i < 50; ++i) {
    ParamTriple t = oracle::random_ode_triple(rng());
    cplx z = oracle::random_interior_point(rng());
    cplx v1 = gauss_2f1(t, z).value;
    cplx v2 = gauss_2f1({t.b, t.a, t.c}, z).value;
    CHECK(v1 == v2);
  }
}

TEST_CASE("branches agree in overlap zones") {
  ParamTriple t{{0.8, 0.3}, {1.4, -0.5}, {2.3, 0.4}};
  // direct series region overlaps the near-one expansion at these points
  for (cplx z : {cplx(0.65, 0.0), cplx(0.6, 0.3)}) {
    auto pub = gauss_2f1(t, z);
    REQUIRE(pub.method == Method::Series);
    auto conn = detail::eval_connection(t.a, t.b, t.c, z);
    CHECK(std::abs(pub.value - conn.value) <= 1e-10 * std::abs(pub.value));
  }
  // direct series overlaps Pfaff on the left half
  for (cplx z : {cplx(-0.5, 0.0), cplx(-0.35, 0.2)}) {
    auto pub = gauss_2f1(t, z);
    REQUIRE(pub.method == Method::Series);
    auto pf = detail::eval_pfaff(t.a, t.b, t.c, z);
    CHECK(std::abs(pub.value - pf.value) <= 1e-10 * std::abs(pub.value));
  }
  // Taylor continuation overlaps the near-one expansion
  for (cplx z : {cplx(0.75, 0.1), cplx(0.8, -0.25)}) {
    auto conn = detail::eval_connection(t.a, t.b, t.c, z);
    auto tay = detail::eval_taylor_far(t.a, t.b, t.c, z);
    CHECK(std::abs(tay.f - conn.value) <= 1e-10 * std::abs(conn.value));
  }
}

TEST_CASE("unit circle evaluation against the zero-balanced closed form") {
  ParamTriple t112{1.0, 1.0, 2.0};
  for (double th : {0.3, 0.7853981633974483, 1.2, 2.2, 3.14}) {
    cplx z = std::polar(1.0, th);
    cplx got = gauss_2f1(t112, z).value;
    cplx want = oracle::f112(z);
    CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("Gauss evaluation at z = 1") {
  for (int i = 0; i < 30; ++i) {
    ParamTriple t = oracle::random_euler_triple(rng());
    cplx got = gauss_2f1(t, cplx(1.0)).value;
    cplx want = std::exp(oracle::reference_log_gamma(t.c) +
                         oracle::reference_log_gamma(t.c - t.a - t.b) -
                         oracle::reference_log_gamma(t.c - t.a) -
                         oracle::reference_log_gamma(t.c - t.b));
    CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
  }
}

TEST_CASE("ODE residual stays at kernel accuracy") {
  ParamTriple t1{1.0, 2.0, 3.0};
  CHECK(ode_residual(t1, cplx(0.3)) <= 1e-8);
  ParamTriple t2{{0.625, 1.25}, {3.75, -1.25}, {5.375, 0.0}};
  cplx z{0.0, 0.5};
  cplx f = gauss_2f1(t2, z).value;
  CHECK(ode_residual(t2, z) <= 1e-8 * std::abs(t2.a * t2.b * f));
  ParamTriple tz{{0.0, 0.0}, 2.0, 3.0};
  CHECK(ode_residual(tz, cplx(0.4, 0.2)) == 0.0);
}

TEST_CASE("power-law asymptote toward z = 1 when Re(c-a-b) < 0") {
  for (ParamTriple t : {ParamTriple{1.0, 1.0, 1.5}, ParamTriple{0.8, 1.1, 1.2},
                        ParamTriple{1.0, {1.0, 0.5}, {1.4, 0.3}}}) {
    cplx d = t.c - t.a - t.b;
    cplx coef = gamma_quotient({t.c, -d}, {t.a, t.b});
    double prev = -1.0;
    for (double tt : {1e-2, 1e-3, 1e-4}) {
      cplx z = cplx(1.0 - tt);
      cplx scaled = gauss_2f1(t, z).value * std::exp(-d * std::log(1.0 - z));
      double delta = std::abs(scaled - coef);
      if (prev >= 0.0) CHECK(delta <= prev * 1.1);
      prev = delta;
    }
    CHECK(prev < 0.05);
  }
}

TEST_CASE("zero-balanced asymptote") {
  // R(1/2,1/2) = 4 log 2 and Gamma(1)/Gamma(1/2)^2 = 1/pi
  double delta = 1e-3;
  cplx z = cplx(1.0 - delta);
  cplx v = zero_balanced_asymptote(0.5, 0.5, z);
  CHECK(v.real() == Approx((4.0 * std::log(2.0) + std::log(1.0 / delta)) / num::pi).epsilon(1e-12));
  // R(1,1) = 0
  cplx v2 = zero_balanced_asymptote(1.0, 1.0, z);
  CHECK(v2.real() == Approx(-std::log(delta)).epsilon(1e-12));
  // kernel vs asymptote at 1 - 1e-4
  cplx z4 = cplx(1.0 - 1e-4);
  cplx kern = gauss_2f1({0.5, 0.5, 1.0}, z4).value;
  CHECK(std::abs(kern - zero_balanced_asymptote(0.5, 0.5, z4)) <= 1e-2);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 0.0}, cplx(0.5)), invalid_c_error);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, -2.0}, cplx(0.5)), invalid_c_error);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 2.0}, cplx(1.0)), zero_balanced_boundary_error);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 1.5}, cplx(1.0)), too_close_to_one_error);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 3.5}, cplx(1.0 - 1e-14)), too_close_to_one_error);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 3.5}, cplx(1.5)), error);
}

TEST_CASE("reported error estimate meets the accuracy target") {
  // |1-z| >= 1e-3, parameter magnitudes <= 8, c-a-b away from the integers
  std::vector<ParamTriple> triples = {
      {{0.8, 0.3}, {1.4, -0.5}, {2.3, 0.4}},
      {{-0.5, 1.0}, {2.4, 0.0}, {3.3, -0.6}},
      {{2.0, 2.0}, {1.5, -1.0}, {4.4, 1.0}},
  };
  std::vector<cplx> points = {cplx(0.5, 0.0),  cplx(-0.9, 0.0),       cplx(0.8, 0.0),
                              cplx(0.3, 0.65), std::polar(1.0, 1.0),  std::polar(1.0, 0.25),
                              cplx(0.9999, 0.0)};
  for (const auto& t : triples) {
    for (cplx z : points) {
      auto r = gauss_2f1(t, z);
      CHECK(r.est_abs_error <= 1e-10 * std::max(1.0, std::abs(r.value)));
    }
  }
}

TEST_CASE("perturbed connection reports its accuracy loss") {
  auto r = gauss_2f1({0.5, 0.5, 1.0}, cplx(1.0 - 1e-4));
  CHECK(r.method == Method::PerturbedConnection);
  CHECK(r.est_abs_error >= 1e-6);
}
