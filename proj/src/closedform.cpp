#include "orbcurv/closedform.hpp"

#include "orbcurv/numkern.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double sq(double x) { return x * x; }

// sqrt with a small clamp absorbing rounding of nonnegative arguments.
double safe_sqrt(double x) {
  if (x < -1e-14)
    throw std::domain_error("closedform: sqrt of a negative quantity");
  return std::sqrt(std::max(x, 0.0));
}

void check_open_interval(double r, double lo, double hi, const char* who) {
  if (!(r > lo && r < hi)) {
    std::ostringstream os;
    os << who << ": argument " << r << " outside open interval";
    throw std::domain_error(os.str());
  }
}

}  // namespace

WCP1Params make_wcp1(int a, int b) {
  if (b < 1 || a < b) throw std::invalid_argument("wcp1: need a >= b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("wcp1: weights must be coprime");
  return {a, b};
}

double wcp1_metric_coeff(const WCP1Params& p, double r) {
  check_open_interval(r, 0.0, kPi / 2, "wcp1_metric_coeff");
  const double a2 = sq(double(p.a)), b2 = sq(double(p.b));
  return 0.25 * a2 * sq(std::sin(2 * r)) /
         (a2 * sq(std::cos(r)) + b2 * sq(std::sin(r)));
}

double wcp1_K(const WCP1Params& p, double r) {
  check_open_interval(r, 0.0, kPi / 2, "wcp1_K");
  const double a2 = sq(double(p.a)), b2 = sq(double(p.b));
  const double a4 = sq(a2), b4 = sq(b2);
  const double num = 3 * a4 + 26 * a2 * b2 + 3 * b4 +
                     4 * (a4 - b4) * std::cos(2 * r) +
                     sq(a2 - b2) * std::cos(4 * r);
  const double den = 2 * sq(a2 + b2 + (a2 - b2) * std::cos(2 * r));
  return num / den;
}

double wcp1_K_inf(const WCP1Params& p) {
  return 1.0 + 3.0 * sq(double(p.b)) / sq(double(p.a));
}

double wcp1_K_sup(const WCP1Params& p) {
  return 1.0 + 3.0 * sq(double(p.a)) / sq(double(p.b));
}

MonotoneReport wcp1_K_monotone(const WCP1Params& p, int grid) {
  MonotoneReport rep;
  if (p.a == p.b) {
    rep.constant = true;
    rep.first = rep.last = wcp1_K(p, kPi / 4);
    return rep;
  }
  const double a2 = sq(double(p.a)), b2 = sq(double(p.b));
  rep.increasing = true;
  rep.min_derivative_numerator = 1e300;
  double prev = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double r = (i + 0.5) * (kPi / 2) / grid;
    const double k = wcp1_K(p, r);
    if (i > 0 && k <= prev) rep.increasing = false;
    if (i == 0) rep.first = k;
    rep.last = k;
    prev = k;
    const double numer = 48 * a2 * b2 * (a2 - b2) * std::sin(2 * r);
    rep.min_derivative_numerator = std::min(rep.min_derivative_numerator, numer);
  }
  return rep;
}

WarpedCoefficient c2r3_f(double r) {
  check_open_interval(r, 0.0, kPi / 2, "c2r3_f");
  // f = (1/2) sin 2r / sqrt(D), D = cos^2 r + 4 sin^2 r, D' = 3 sin 2r.
  const double s = std::sin(2 * r), c = std::cos(2 * r);
  const double d = sq(std::cos(r)) + 4 * sq(std::sin(r));
  const double dm12 = 1.0 / std::sqrt(d);
  const double dm32 = dm12 / d, dm52 = dm32 / d;
  WarpedCoefficient w;
  w.f = 0.5 * s * dm12;
  w.fp = c * dm12 - 0.75 * sq(s) * dm32;
  w.fpp = -2.0 * s * dm12 - 4.5 * s * c * dm32 + (27.0 / 8.0) * s * sq(s) * dm52;
  return w;
}

double c2r3_radial_curvature(double r) {
  const auto w = c2r3_f(r);
  return -w.fpp / w.f;
}

double c2r3_spherical_curvature(double r) {
  const auto w = c2r3_f(r);
  return (1.0 - sq(w.fp)) / sq(w.f);
}

double c2r3_spherical_curvature_printed(double r) {
  const auto w = c2r3_f(r);
  return (1.0 - w.fp) / sq(w.f);
}

double su2_norm_iL_sq(double t) { return 1.0 + 8.0 * sq(std::cos(t)); }

FrameFunctions su2_frame(double t) {
  const double step = kPi / 3;
  const double k = std::round(t / step);
  if (std::abs(t - k * step) < 1e-6) {
    // at multiples of pi/3 one of I, K, J vanishes (in that cyclic order)
    const int which = ((static_cast<long long>(k) % 3) + 3) % 3;
    const char* names[3] = {"I", "K", "J"};
    std::ostringstream os;
    os << "su2_frame: t = " << t << " is a multiple of pi/3 where " << names[which]
       << " degenerates";
    throw std::domain_error(os.str());
  }
  auto i0_at = [](double s) { return 4.0 * sq(std::cos(s)) - 1.0; };
  FrameFunctions f;
  f.i0 = i0_at(t);
  f.j0 = i0_at(t + kPi / 3);
  f.k0 = i0_at(t + 2 * kPi / 3);
  const double ni = su2_norm_iL_sq(t);
  const double nj = su2_norm_iL_sq(t + kPi / 3);
  const double nk = su2_norm_iL_sq(t + 2 * kPi / 3);
  f.I0 = f.i0 / ni;
  f.J0 = f.j0 / nj;
  f.K0 = f.k0 / nk;
  f.I = safe_sqrt(1.0 - f.I0 * f.i0);
  f.J = safe_sqrt(1.0 - f.J0 * f.j0);
  f.K = safe_sqrt(1.0 - f.K0 * f.k0);
  return f;
}

double su2_kij_numerator(double t) {
  return -2 * kSqrt3 - kSqrt3 * std::cos(2 * t) + std::sin(2 * t) +
         4 * std::sin(4 * t);
}

double su2_K_ij(double t) {
  const double num = su2_kij_numerator(t);
  const double p = (5 + 4 * std::cos(2 * t)) *
                   (5 - 2 * std::cos(2 * t) + 2 * kSqrt3 * std::sin(2 * t)) *
                   (-10 + 2 * std::cos(2 * t) - 5 * std::cos(4 * t) +
                    4 * std::cos(6 * t) + 2 * kSqrt3 * std::sin(2 * t) +
                    5 * kSqrt3 * std::sin(4 * t));
  return 1.0 - 27.0 * sq(num) / p;
}

double su2_t0() { return kPi / 3 - 0.5 * std::acos(0.25); }

namespace {

// Shared appendix building blocks at t.
struct Trig {
  double c2, c4, c6, c8, s2, s4, s6;
};

Trig trig(double t) {
  return {std::cos(2 * t), std::cos(4 * t), std::cos(6 * t), std::cos(8 * t),
          std::sin(2 * t), std::sin(4 * t), std::sin(6 * t)};
}

void check_denominator(double d, const char* who) {
  if (std::abs(d) < 1e-12) {
    std::ostringstream os;
    os << "appendix: denominator of " << who << " vanishes";
    throw std::domain_error(os.str());
  }
}

double b_sqrt_factor(const Trig& z) {
  // sqrt(sin^2 6t / (65 + 16 cos 6t))
  return safe_sqrt(sq(z.s6) / (65 + 16 * z.c6));
}

}  // namespace

AppendixValues appendix_funcs(double t) {
  const Trig z = trig(t);
  AppendixValues v{};

  v.a1 = 1 + 27 / sq(5 + 4 * z.c2);
  v.a2 = 1 + 27 / sq(-5 + 2 * z.c2 + 2 * kSqrt3 * z.s2);
  v.a3 = 1 + 27 / sq(5 - 2 * z.c2 + 2 * kSqrt3 * z.s2);

  const double pminus =
      -10 + 2 * z.c2 - 5 * z.c4 + 4 * z.c6 - 2 * kSqrt3 * z.s2 - 5 * kSqrt3 * z.s4;
  const double pplus =
      -10 + 2 * z.c2 - 5 * z.c4 + 4 * z.c6 + 2 * kSqrt3 * z.s2 + 5 * kSqrt3 * z.s4;
  const double w21 = 21 - 20 * z.c2 + 8 * z.c4;

  {
    const double den = (5 + 4 * z.c2) * sq(w21) * pminus * pplus;
    check_denominator(den, "c1");
    v.c1 = 1 + 27 * sq(1 - 8 * z.c2 + 2 * z.c4 - 4 * z.c6) *
                   sq(5 - 2 * z.c2 + 2 * kSqrt3 * z.s2) *
                   sq(-5 + 2 * z.c2 + 2 * kSqrt3 * z.s2) / den;
  }
  {
    const double den = (5 + 4 * z.c2) * (-5 + 2 * z.c2 + 2 * kSqrt3 * z.s2) * pminus;
    check_denominator(den, "c2");
    v.c2 = 1 + 27 * sq(2 * kSqrt3 + kSqrt3 * z.c2 + z.s2 + 4 * z.s4) / den;
  }
  {
    const double den = (5 + 4 * z.c2) * (5 - 2 * z.c2 + 2 * kSqrt3 * z.s2) * pplus;
    check_denominator(den, "c3");
    v.c3 = 1 - 27 * sq(-2 * kSqrt3 - kSqrt3 * z.c2 + z.s2 + 4 * z.s4) / den;
  }

  const double root = b_sqrt_factor(z);
  const double bden = sq(5 + 4 * z.c2) * sq(w21) * root;
  check_denominator(bden, "b1");
  v.b1 = -648 * (2 - 10 * z.c2 + 2 * z.c4 - 5 * z.c6 + 2 * z.c8) * z.s2 / bden;
  v.b2 = -324 * (1 + 2 * z.c4) * z.s2 *
         (5 * z.c2 - 2 * z.c4 + kSqrt3 * (5 * z.s2 + 2 * z.s4)) / bden;
  v.b3 = 324 * (1 + 2 * z.c4) * z.s2 *
         (-5 * z.c2 + 2 * z.c4 + kSqrt3 * (5 * z.s2 + 2 * z.s4)) / bden;

  v.mu = -27 * safe_sqrt(sq(1 - 4 * z.c2) /
                         (std::pow(5 + 4 * z.c2, 3) * w21)) +
         v.b1;

  v.E = (-1 + 2 * z.c2) * sq(1 + 2 * z.c2) / w21;
  check_denominator(z.s2, "F");
  v.F = (1 + 2 * z.c2) *
        safe_sqrt((5 + 4 * z.c2) * sq(1 + 2 * z.c4) / (sq(z.s2) * w21)) * z.s2 /
        (5 + 4 * z.c2);
  return v;
}

ThorpeCoeffs thorpe_coeffs(double t) {
  const AppendixValues v = appendix_funcs(t);
  ThorpeCoeffs c;
  c.t = t;
  c.a = {v.a1, v.a2, v.a3};
  c.b = {v.b1, v.b2, v.b3};
  c.c = {v.c1, v.c2, v.c3};
  c.mu = v.mu;
  for (int i = 0; i < 3; ++i) {
    c.alpha[i] = c.a[i] - 1.0;
    c.beta[i] = c.b[i] - c.mu;
    c.gamma[i] = c.c[i] - 1.0;
  }
  return c;
}

std::array<double, 2> mu_pm(double t, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("mu_pm: index must be 1..3");
  const ThorpeCoeffs c = thorpe_coeffs(t);
  const double root = safe_sqrt(c.alpha[i - 1] * c.gamma[i - 1]);
  return {c.b[i - 1] + root, c.b[i - 1] - root};
}

IdentityReport thorpe_identities(const std::vector<double>& t_grid) {
  IdentityReport rep;
  const double t0 = su2_t0();
  for (double t : t_grid) {
    const ThorpeCoeffs c = thorpe_coeffs(t);
    const double lhs_core =
        sq(c.b[0] - c.b[1]) - c.alpha[0] * c.gamma[0] - c.alpha[1] * c.gamma[1];
    const double lhs = sq(lhs_core);
    const double rhs =
        4 * c.alpha[0] * c.alpha[1] * c.gamma[0] * c.gamma[1];
    rep.max_square_identity_rel = std::max(
        rep.max_square_identity_rel, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-30));
    if (!(lhs_core > 0.0 && c.b[0] > c.b[1])) rep.sign_conditions = false;

    const auto m1 = mu_pm(t, 1), m2 = mu_pm(t, 2), m3 = mu_pm(t, 3);
    rep.max_mu12 = std::max(rep.max_mu12, std::abs(m1[1] - m2[0]));
    const double expected3 = (t <= t0) ? m3[0] : m3[1];
    rep.max_mu13 = std::max(rep.max_mu13, std::abs(m1[1] - expected3));
  }
  // the mu_3 branch switches where gamma_3 = c_3 - 1 vanishes
  rep.branch_switch = find_root(
      [](double t) { return su2_kij_numerator(t); }, 1e-3, 0.5, 1e-14);
  return rep;
}

double ef_E_closed(double t) {
  const Trig z = trig(t);
  return (-1 + 2 * z.c2) * sq(1 + 2 * z.c2) / (21 - 20 * z.c2 + 8 * z.c4);
}

double ef_F_closed(double t) {
  const Trig z = trig(t);
  check_denominator(z.s2, "F");
  return (1 + 2 * z.c2) *
         safe_sqrt((5 + 4 * z.c2) * sq(1 + 2 * z.c4) /
                   (sq(z.s2) * (21 - 20 * z.c2 + 8 * z.c4))) *
         z.s2 / (5 + 4 * z.c2);
}

double ef_E_def(double t) {
  const FrameFunctions f = su2_frame(t);
  return 1.0 - f.J0 * f.j0 - f.K0 * f.k0 - f.J0 * f.K0 * f.i0;
}

double ef_F_def(double t) {
  const FrameFunctions f = su2_frame(t);
  check_denominator(f.I, "F (frame I)");
  return 2.0 * f.J * f.K * f.I0 * std::sin(2 * t) / f.I;
}

double beta_tilde1(double t) {
  const Trig z = trig(t);
  return -27 * (1 - 4 * z.c2) /
         safe_sqrt(std::pow(5 + 4 * z.c2, 3) * (21 - 20 * z.c2 + 8 * z.c4));
}

double alpha1_closed(double t) {
  return 27 / sq(5 + 4 * std::cos(2 * t));
}

double eq54_lhs(double t) {
  return alpha1_closed(t) * ef_E_closed(t) - beta_tilde1(t) * ef_F_closed(t);
}

double eq54_rhs(double t) {
  const Trig z = trig(t);
  return -54 * sq(1 + 2 * z.c4) /
         (sq(5 + 4 * z.c2) * (21 - 20 * z.c2 + 8 * z.c4));
}

double C1(double t) { return alpha1_closed(t) * eq54_lhs(t); }
double C2(double t) { return C1(t + kPi / 3); }
double C3(double t) { return C1(t + 2 * kPi / 3); }

}  // namespace orbcurv
