#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbcurv/actions.hpp"
#include "orbcurv/closedform.hpp"
#include "orbcurv/oneill.hpp"

#include <cmath>
#include <numbers>

using namespace orbcurv;
namespace {
constexpr double kPi = std::numbers::pi;

double fd_second(const std::function<double(double)>& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) -
          f(x + 2 * h)) /
         (12 * h * h);
}

double fd_first(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
}  // namespace

TEST_CASE("wcp1 parameter validation") {
  CHECK_THROWS_AS((void)make_wcp1(1, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)make_wcp1(4, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)make_wcp1(3, 0), std::invalid_argument);
  CHECK(make_wcp1(5, 1).a == 5);
}

TEST_CASE("wcp1_metric_coeff examples") {
  CHECK(wcp1_metric_coeff(make_wcp1(1, 1), kPi / 4) == doctest::Approx(0.25));
  CHECK(wcp1_metric_coeff(make_wcp1(2, 1), kPi / 4) == doctest::Approx(0.4));
  // smooth axis: coefficient ~ r^2 as r -> 0
  const auto p = make_wcp1(3, 2);
  CHECK(wcp1_metric_coeff(p, 1e-4) == doctest::Approx(1e-8).epsilon(1e-3));
  CHECK_THROWS_AS((void)wcp1_metric_coeff(p, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)wcp1_metric_coeff(p, kPi / 2), std::domain_error);
}

TEST_CASE("wcp1_K values and limits") {
  const auto eq = make_wcp1(1, 1);
  for (double r : {0.2, kPi / 4, 1.3})
    CHECK(wcp1_K(eq, r) == doctest::Approx(4.0).epsilon(1e-12));

  const auto p21 = make_wcp1(2, 1);
  CHECK(wcp1_K_inf(p21) == doctest::Approx(1.75));
  CHECK(wcp1_K_sup(p21) == doctest::Approx(13.0));
  CHECK(std::abs(wcp1_K(p21, 1e-5) - 1.75) < 1e-6);
  CHECK(std::abs(wcp1_K(p21, kPi / 2 - 1e-5) - 13.0) < 1e-6);
  CHECK(wcp1_K(p21, kPi / 4) == doctest::Approx(2.92));
}

TEST_CASE("wcp1_K matches the finite-difference curvature oracle") {
  for (auto [a, b] :
       {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    const auto p = make_wcp1(a, b);
    auto phi = [&](double r) { return std::sqrt(wcp1_metric_coeff(p, r)); };
    for (int i = 0; i <= 40; ++i) {
      const double r = 0.1 + i * 1.3 / 40.0;
      const double k_fd = -fd_second(phi, r, 1e-3) / phi(r);
      CHECK(std::abs(k_fd - wcp1_K(p, r)) / wcp1_K(p, r) < 1e-6);
    }
  }
}

TEST_CASE("wcp1_K_monotone") {
  const auto inc = wcp1_K_monotone(make_wcp1(2, 1));
  CHECK(inc.increasing);
  CHECK(inc.min_derivative_numerator > 0.0);

  const auto cons = wcp1_K_monotone(make_wcp1(1, 1));
  CHECK(cons.constant);

  const auto big = wcp1_K_monotone(make_wcp1(5, 1));
  CHECK(big.increasing);
  CHECK(big.first == doctest::Approx(1.0 + 3.0 / 25.0).epsilon(1e-4));
  CHECK(big.last == doctest::Approx(76.0).epsilon(1e-4));
}

TEST_CASE("c2r3_f value and derivatives") {
  const auto w = c2r3_f(kPi / 4);
  CHECK(w.f == doctest::Approx(1.0 / std::sqrt(10.0)));

  // hand-differentiated forms against central differences
  for (double r : {0.3, 0.7, 1.1, 1.4}) {
    auto f = [](double x) { return c2r3_f(x).f; };
    const auto v = c2r3_f(r);
    CHECK(std::abs(v.fp - fd_first(f, r, 1e-5)) < 1e-6);
    CHECK(std::abs(v.fpp - fd_second(f, r, 1e-5)) < 1e-6);
  }
}

TEST_CASE("c2r3 radial curvature has image (7/4, 13)") {
  double lo = 1e9, hi = -1e9;
  for (int i = 1; i < 2000; ++i) {
    const double r = i * (kPi / 2) / 2000.0;
    const double k = c2r3_radial_curvature(r);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  CHECK(lo > 1.75 - 1e-3);
  CHECK(hi < 13.0 + 1e-3);
  // endpoint limits by Richardson extrapolation
  const double at0 = (100 * c2r3_radial_curvature(1e-4) -
                      c2r3_radial_curvature(1e-3)) / 99.0;
  const double atpi = (100 * c2r3_radial_curvature(kPi / 2 - 1e-4) -
                       c2r3_radial_curvature(kPi / 2 - 1e-3)) / 99.0;
  CHECK(std::abs(at0 - 13.0) < 1e-3);
  CHECK(std::abs(atpi - 1.75) < 1e-3);
}

TEST_CASE("c2r3 spherical curvature has image [9, inf)") {
  double lo = 1e9;
  for (int i = 1; i < 2000; ++i) {
    const double r = i * (kPi / 2) / 2000.0;
    lo = std::min(lo, c2r3_spherical_curvature(r));
  }
  CHECK(std::abs(lo - 9.0) < 1e-3);
  // the squared form matches the stated range; the printed variant does not
  CHECK(c2r3_spherical_curvature_printed(0.1) < 9.0);
  CHECK(c2r3_spherical_curvature(0.1) > 9.0);
}

TEST_CASE("su2_frame values and shift identities") {
  const auto f = su2_frame(kPi / 6);
  CHECK(f.i0 == doctest::Approx(2.0));
  CHECK(su2_norm_iL_sq(kPi / 6) == doctest::Approx(7.0));

  // J(t)^2 two ways: definition vs shift of I^2 by pi/3
  for (int i = 1; i < 40; ++i) {
    const double t = 0.02 + i * (kPi / 6 - 0.04) / 40.0;
    const auto a = su2_frame(t);
    const auto b = su2_frame(t + kPi / 3);
    CHECK(std::abs(a.J * a.J - b.I * b.I) < 1e-12);
    CHECK(std::abs(a.j0 - b.i0) < 1e-12);
    CHECK(std::abs(a.K * a.K - su2_frame(t + 2 * kPi / 3).I *
                                   su2_frame(t + 2 * kPi / 3).I) < 1e-12);
    // I^2 = 1 - I0 i0
    CHECK(std::abs(a.I * a.I - (1.0 - a.I0 * a.i0)) < 1e-14);
  }
}

TEST_CASE("su2_frame rejects multiples of pi/3") {
  CHECK_THROWS_AS((void)su2_frame(0.0), std::domain_error);
  CHECK_THROWS_AS((void)su2_frame(kPi / 3), std::domain_error);
  CHECK_THROWS_AS((void)su2_frame(2 * kPi / 3 + 1e-9), std::domain_error);
  CHECK_NOTHROW((void)su2_frame(kPi / 6));
}

TEST_CASE("su2_K_ij at t0 and positivity") {
  const double t0 = su2_t0();
  CHECK(std::abs(su2_K_ij(t0) - 1.0) < 1e-9);
  CHECK(t0 == doctest::Approx(0.38814).epsilon(1e-4));
  for (int i = 1; i < 500; ++i) {
    const double t = i * (kPi / 6) / 500.0;
    CHECK(su2_K_ij(t) >= 1.0 - 1e-9);
  }
}

TEST_CASE("appendix examples") {
  // a1(0) = 1 + 27/81 = 4/3 (the b_i are 0/0 at t = 0, so evaluate a1 alone)
  CHECK(1.0 + alpha1_closed(0.0) == doctest::Approx(4.0 / 3.0));
  CHECK(appendix_funcs(1e-5).a1 == doctest::Approx(4.0 / 3.0).epsilon(1e-8));

  // trace of B vanishes; c3 is the section's K formula
  for (int i = 1; i < 60; ++i) {
    const double t = i * (kPi / 6) / 60.0;
    const auto w = appendix_funcs(t);
    CHECK(std::abs(w.b1 + w.b2 + w.b3) < 1e-10);
    CHECK(std::abs(w.c3 - su2_K_ij(t)) < 1e-10);
  }
}

TEST_CASE("appendix Weyl shift suite") {
  for (int i = 1; i < 50; ++i) {
    const double t = i * (kPi / 6) / 50.0;
    const auto v = appendix_funcs(t);
    const auto s1 = appendix_funcs(t + kPi / 3);
    const auto s2 = appendix_funcs(t + 2 * kPi / 3);
    CHECK(std::abs(v.a2 - s1.a1) < 1e-10);
    CHECK(std::abs(v.a3 - s2.a1) < 1e-10);
    CHECK(std::abs(v.b2 - s1.b1) < 1e-10);
    CHECK(std::abs(v.b3 - s2.b1) < 1e-10);
    CHECK(std::abs(v.c2 - s1.c1) < 1e-10);
    CHECK(std::abs(v.c3 - s2.c1) < 1e-10);
  }
}

TEST_CASE("thorpe identity suite") {
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(1e-3 + i * (kPi / 6 - 2e-3) / 199);
  const auto rep = thorpe_identities(grid);
  CHECK(rep.max_square_identity_rel < 1e-8);
  CHECK(rep.sign_conditions);
  CHECK(rep.max_mu12 < 1e-9);
  CHECK(rep.max_mu13 < 1e-8);
  CHECK(std::abs(rep.branch_switch - su2_t0()) < 1e-6);
}

TEST_CASE("mu branch values at a specific point") {
  const auto m1 = mu_pm(0.1, 1);
  const auto m2 = mu_pm(0.1, 2);
  CHECK(std::abs(m1[1] - m2[0]) < 1e-10);  // mu_1^- = mu_2^+
}

TEST_CASE("E and F: definitions vs closed forms") {
  for (int i = 1; i < 50; ++i) {
    const double base = 0.01 + i * (kPi / 6 - 0.02) / 50.0;
    for (double shift : {0.0, kPi / 3, 2 * kPi / 3}) {
      const double t = base + shift;
      CHECK(std::abs(ef_E_def(t) - ef_E_closed(t)) < 1e-10);
      CHECK(std::abs(ef_F_def(t) - ef_F_closed(t)) < 1e-10);
    }
  }
}

TEST_CASE("equation (54): closed form, nonpositivity, zeros") {
  // the identity holds on the windows the C_i use: (0, pi/6) + k pi/3
  for (double shift : {0.0, kPi / 3, 2 * kPi / 3}) {
    for (int i = 0; i < 150; ++i) {
      const double t = shift + 1e-4 + i * (kPi / 6 - 2e-4) / 149.0;
      if (std::abs(std::sin(2 * t)) < 1e-3) continue;  // F is 0/0 there
      CHECK(std::abs(eq54_lhs(t) - eq54_rhs(t)) < 1e-10);
    }
  }
  // the rational form is nonpositive on the whole period
  for (int i = 0; i < 400; ++i) CHECK(eq54_rhs(i * kPi / 399.0) <= 0.0);

  // zeros on [0, 5pi/6] are exactly pi/6, pi/3, 2pi/3, 5pi/6
  const double z[] = {kPi / 6, kPi / 3, 2 * kPi / 3, 5 * kPi / 6};
  for (double zero : z) {
    const double located = find_root(
        [](double t) { return 1.0 + 2.0 * std::cos(4 * t); }, zero - 0.05,
        zero + 0.05, 1e-14);
    CHECK(std::abs(located - zero) < 1e-8);
    CHECK(std::abs(eq54_rhs(located)) < 1e-10);
  }
  // no further zeros: the rational form is bounded away from 0 between them
  for (double t : {0.05, 0.7, 1.3, 2.3}) CHECK(eq54_rhs(t) < -1e-3);
}

TEST_CASE("beta-tilde piecewise sign relations") {
  const double t0 = su2_t0();
  for (int i = 1; i < 60; ++i) {
    const double t = i * (kPi / 6) / 61.0;
    const auto c = thorpe_coeffs(t);
    // beta~1(t) = beta1(t) on (0, pi/6)
    CHECK(std::abs(beta_tilde1(t) - c.beta[0]) < 1e-9);
    // beta~1(t + pi/3) = beta2(t)
    CHECK(std::abs(beta_tilde1(t + kPi / 3) - c.beta[1]) < 1e-9);
    // beta~1(t + 2pi/3) = beta3(t), with the sign flip at t0
    CHECK(std::abs(beta_tilde1(t + 2 * kPi / 3) - c.beta[2]) < 1e-9);
    const double raw = -beta_tilde1(t + 2 * kPi / 3);
    if (t < t0 - 1e-3) CHECK(c.beta[2] == doctest::Approx(-raw).epsilon(1e-9));
  }
}

TEST_CASE("alpha1 is positive on a full period") {
  for (int i = 0; i < 300; ++i) {
    const double t = -kPi + i * (2 * kPi) / 299.0;
    CHECK(alpha1_closed(t) > 0.0);
  }
}

TEST_CASE("C shifts") {
  for (double t : {0.05, 0.2, 0.35, 0.5}) {
    CHECK(C2(t) == doctest::Approx(C1(t + kPi / 3)).epsilon(1e-12));
    CHECK(C3(t) == doctest::Approx(C1(t + 2 * kPi / 3)).epsilon(1e-12));
  }
}

TEST_CASE("appendix a and c values match the engine on coordinate planes") {
  const auto su2 = su2_sym3_dual();
  const auto right = sp1_right_h2();
  for (double t : {0.12, 0.27, 0.41}) {
    const Vec p = su2_geodesic(t);
    const Vec dp = su2_geodesic_dt(t);
    const auto f = frame_at(su2, p);
    auto hp = [&](const Vec& x) {
      return (f.horizontal * (f.horizontal.transpose() * x)).eval();
    };
    std::array<Vec, 3> e;
    for (int i = 0; i < 3; ++i) e[i] = hp(right.generators[i] * p);
    const auto v = appendix_funcs(t);
    const double a[] = {v.a1, v.a2, v.a3};
    const double c[] = {v.c1, v.c2, v.c3};
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(plane_curvature(su2, f, dp, e[i]).value - a[i]) < 1e-8);
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      CHECK(std::abs(plane_curvature(su2, f, e[j], e[k]).value - c[i]) < 1e-8);
    }
  }
}

TEST_CASE("appendix rejects vanishing denominators") {
  // b_i are 0/0 at multiples of pi/6
  CHECK_THROWS_AS((void)appendix_funcs(kPi / 6), std::domain_error);
}
