#pragma once

#include <array>
#include <string>
#include <vector>

namespace orbcurv {

// --- weighted projective lines S^3 / U(1)_{(a,b)}

struct WCP1Params {
  int a = 1, b = 1;  // coprime, a >= b >= 1
};

WCP1Params make_wcp1(int a, int b);  // validates

// Angular metric coefficient of g = dr^2 + coeff(r) dtheta^2.
double wcp1_metric_coeff(const WCP1Params& params, double r);

// Gaussian curvature K(r) of the quotient metric.
double wcp1_K(const WCP1Params& params, double r);

double wcp1_K_inf(const WCP1Params& params);  // limit r -> 0+
double wcp1_K_sup(const WCP1Params& params);  // limit r -> pi/2-

struct MonotoneReport {
  bool constant = false;
  bool increasing = false;
  double min_derivative_numerator = 0.0;  // sign witness for K'(r)
  double first = 0.0, last = 0.0;
};

MonotoneReport wcp1_K_monotone(const WCP1Params& params, int grid = 1000);

// --- warped product for (SU(2), C^2 + R^3)

struct WarpedCoefficient {
  double f = 0.0, fp = 0.0, fpp = 0.0;
};

WarpedCoefficient c2r3_f(double r);
double c2r3_radial_curvature(double r);            // -f''/f
double c2r3_spherical_curvature(double r);         // (1 - f'^2) / f^2
double c2r3_spherical_curvature_printed(double r); // (1 - f') / f^2

// --- frame functions along gamma(t) for the H^2 analysis

struct FrameFunctions {
  double i0, j0, k0;  // <xi_L gamma, xi_R gamma>
  double I0, J0, K0;  // i0 / |i_L gamma|^2 etc.
  double I, J, K;     // norms of the horizontal parts of xi_R gamma
};

// Rejects t within 1e-6 of a multiple of pi/3 (one of I, J, K vanishes
// there and downstream quotients degenerate).
FrameFunctions su2_frame(double t);

double su2_norm_iL_sq(double t);  // |i_L gamma(t)|^2 = 1 + 8 cos^2 t

// Sectional curvature K_X(i_R^h ^ j_R^h) at gamma(t), displayed closed form.
double su2_K_ij(double t);

// Zero of the K=1 witness function on (0, pi/6): pi/3 - arccos(1/4)/2.
double su2_t0();
// The factor -2 sqrt3 - sqrt3 cos 2t + sin 2t + 4 sin 4t whose zero is t0.
double su2_kij_numerator(double t);

// --- appendix functions

struct AppendixValues {
  double a1, a2, a3;
  double b1, b2, b3;
  double c1, c2, c3;
  double mu;  // mu_1^-
  double E, F;
};

AppendixValues appendix_funcs(double t);

// a_i, b_i, c_i with the Thorpe shifts alpha_i = a_i - 1, beta_i = b_i - mu,
// gamma_i = c_i - 1.
struct ThorpeCoeffs {
  double t;
  std::array<double, 3> a, b, c;
  std::array<double, 3> alpha, beta, gamma;
  double mu;
};

ThorpeCoeffs thorpe_coeffs(double t);

// mu_i^+/- = b_i +- sqrt((a_i - 1)(c_i - 1)).
std::array<double, 2> mu_pm(double t, int i);

struct IdentityReport {
  double max_square_identity_rel = 0.0;  // ((b1-b2)^2-a1g1-a2g2)^2 = 4 a1 a2 g1 g2
  bool sign_conditions = true;           // (b1-b2)^2-a1g1-a2g2 > 0 and b1 > b2
  double max_mu12 = 0.0;                 // |mu_1^- - mu_2^+|
  double max_mu13 = 0.0;                 // |mu_1^- - mu_3^{+ or -}| by branch
  double branch_switch = 0.0;            // located switch point (should be t0)
};

IdentityReport thorpe_identities(const std::vector<double>& t_grid);

// --- E, F and the quadratic-form coefficients

double ef_E_closed(double t);
double ef_F_closed(double t);
double ef_E_def(double t);  // 1 - J0 j0 - K0 k0 - J0 K0 i0
double ef_F_def(double t);  // 2 J K I0 sin 2t / I

double beta_tilde1(double t);
double alpha1_closed(double t);  // a1(t) - 1, positive for all t
double eq54_lhs(double t);       // alpha1 E - beta_tilde1 F
double eq54_rhs(double t);       // displayed rational form

double C1(double t);
double C2(double t);
double C3(double t);

}  // namespace orbcurv
