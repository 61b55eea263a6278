#include "orbcurv/thorpe.hpp"

#include "orbcurv/actions.hpp"
#include "orbcurv/oneill.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

namespace {

constexpr double kPi = std::numbers::pi;

const SphereAction& su2_action() {
  static const SphereAction a = su2_sym3_dual();
  return a;
}

const SphereAction& right_action() {
  static const SphereAction a = sp1_right_h2();
  return a;
}

struct ChartQuantities {
  ThorpeCoeffs c;
  double n1, n2, n3;  // alpha_i^2 + beta_i^2
  double A1, A2;
};

ChartQuantities chart(double t) {
  ChartQuantities q{thorpe_coeffs(t), 0, 0, 0, 0, 0};
  const auto& c = q.c;
  q.n1 = c.alpha[0] * c.alpha[0] + c.beta[0] * c.beta[0];
  q.n2 = c.alpha[1] * c.alpha[1] + c.beta[1] * c.beta[1];
  q.n3 = c.alpha[2] * c.alpha[2] + c.beta[2] * c.beta[2];
  const double p3 = c.alpha[2] * c.beta[2];
  if (std::abs(p3) < 1e-14)
    throw std::domain_error("circle chart: alpha3 * beta3 vanishes (t at t0?)");
  q.A1 = q.n1 - c.alpha[0] * c.beta[0] / p3 * q.n3;
  q.A2 = q.n2 - c.alpha[1] * c.beta[1] / p3 * q.n3;
  return q;
}

}  // namespace

Mat6 CurvatureOperator6::matrix() const {
  Mat6 m = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    m(i, i) = a[i];
    m(3 + i, 3 + i) = c[i];
    m(i, 3 + i) = b[i];
    m(3 + i, i) = b[i];
  }
  return m;
}

CurvatureOperator6 operator_at(double t) {
  const AppendixValues v = appendix_funcs(t);
  CurvatureOperator6 op;
  op.t = t;
  op.a = {v.a1, v.a2, v.a3};
  op.b = {v.b1, v.b2, v.b3};
  op.c = {v.c1, v.c2, v.c3};
  return op;
}

KernelResult kernel_at(double t) {
  const ThorpeCoeffs c = thorpe_coeffs(t);
  // R~ - mu * : blocks [[alpha_i, beta_i], [beta_i, gamma_i]] on (0i, jk).
  Mat6 m = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    m(i, i) = c.alpha[i];
    m(3 + i, 3 + i) = c.gamma[i];
    m(i, 3 + i) = c.beta[i];
    m(3 + i, i) = c.beta[i];
  }
  EigenSym es = eig_sym(m);

  std::array<int, 6> order{0, 1, 2, 3, 4, 5};
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(es.eigenvalues[x]) < std::abs(es.eigenvalues[y]);
  });

  KernelResult kr;
  kr.t = t;
  kr.mu = c.mu;
  for (int i = 0; i < 6; ++i)
    kr.eigenvalues_by_magnitude[i] = es.eigenvalues[order[i]];
  for (int i = 0; i < 3; ++i) kr.basis.col(i) = es.eigenvectors.col(order[i]);
  kr.dim_is_three = std::abs(kr.eigenvalues_by_magnitude[2]) < 1e-8 &&
                    std::abs(kr.eigenvalues_by_magnitude[3]) > 1e-3;

  // analytic span: -beta_i e_{0i} + alpha_i e_{jk}
  Eigen::Matrix<double, 6, 3> span = Eigen::Matrix<double, 6, 3>::Zero();
  for (int i = 0; i < 3; ++i) {
    span(i, i) = -c.beta[i];
    span(3 + i, i) = c.alpha[i];
    span.col(i).normalize();
  }
  // principal angles via singular values of Q1^T Q2
  Eigen::JacobiSVD<Mat> svd((kr.basis.transpose() * span).eval());
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::acos(std::min(1.0, svd.singularValues()[i])));
  kr.max_principal_angle = worst;
  return kr;
}

// A1 (near pi/6) and A2 (near 0) decay to zero like the fourth power of the
// distance to the endpoint; below this magnitude the hyperbolic coordinate
// collapses and only theta = 0 remains admissible.
inline constexpr double kChartDegenerate = 1e-12;

double circle_theta_max(double t) {
  const ChartQuantities q = chart(t);
  const double t0 = su2_t0();
  const double shrinking = (t < t0) ? -q.A2 : -q.A1;
  if (shrinking < kChartDegenerate) return 0.0;
  auto r3sq = [&](double theta) {
    double r1, r2;
    if (t < t0) {
      r1 = std::cosh(theta) / std::sqrt(q.A1);
      r2 = std::sinh(theta) / std::sqrt(-q.A2);
    } else {
      r1 = std::sinh(theta) / std::sqrt(-q.A1);
      r2 = std::cosh(theta) / std::sqrt(q.A2);
    }
    return (1.0 - r1 * r1 * q.n1 - r2 * r2 * q.n2) / q.n3;
  };
  if (r3sq(0.0) <= 0.0) return 0.0;
  double hi = 1e-3;
  while (r3sq(hi) > 0.0 && hi < 50.0) hi *= 2.0;
  return find_root(r3sq, 0.0, hi, 1e-13);
}

GrassCirclePoint circle_point(double t, double theta, int sign_main,
                              int sign_r3) {
  const double t0 = su2_t0();
  if (!(t > 0.0 && t < kPi / 6))
    throw std::domain_error("circle_point: t outside (0, pi/6)");
  if (std::abs(t - t0) < 1e-4)
    throw std::domain_error("circle_point: t within excluded window around t0");
  const ChartQuantities q = chart(t);
  const auto& c = q.c;

  GrassCirclePoint pt;
  pt.t = t;
  pt.theta = theta;
  pt.sign_main = sign_main >= 0 ? +1 : -1;
  pt.sign_r3 = sign_r3 >= 0 ? +1 : -1;

  double r1, r2;
  if (t < t0) {
    if (!(q.A1 > 0.0 && q.A2 < kChartDegenerate))
      throw std::domain_error("circle_point: chart signs invalid for t < t0");
    r1 = pt.sign_main * std::cosh(theta) / std::sqrt(q.A1);
    if (-q.A2 < kChartDegenerate) {
      // collapsed chart at the left endpoint: only theta = 0 survives
      if (std::abs(theta) > 1e-9)
        throw std::domain_error("circle_point: theta out of range (r3^2 < 0)");
      r2 = 0.0;
    } else {
      r2 = std::sinh(theta) / std::sqrt(-q.A2);
    }
  } else {
    if (!(q.A2 > 0.0 && q.A1 < kChartDegenerate))
      throw std::domain_error("circle_point: chart signs invalid for t > t0");
    r2 = pt.sign_main * std::cosh(theta) / std::sqrt(q.A2);
    if (-q.A1 < kChartDegenerate) {
      if (std::abs(theta) > 1e-9)
        throw std::domain_error("circle_point: theta out of range (r3^2 < 0)");
      r1 = 0.0;
    } else {
      r1 = std::sinh(theta) / std::sqrt(-q.A1);
    }
  }
  const double r3sq = (1.0 - r1 * r1 * q.n1 - r2 * r2 * q.n2) / q.n3;
  if (r3sq < -1e-12)
    throw std::domain_error("circle_point: theta out of range (r3^2 < 0)");
  const double r3 = pt.sign_r3 * std::sqrt(std::max(r3sq, 0.0));
  pt.r = {r1, r2, r3};

  for (int i = 0; i < 3; ++i) {
    pt.bivector[i] = -c.beta[i] * pt.r[i];
    pt.bivector[3 + i] = c.alpha[i] * pt.r[i];
  }
  double plucker = 0.0, norm = 0.0;
  for (int i = 0; i < 3; ++i) {
    plucker += pt.r[i] * pt.r[i] * c.alpha[i] * c.beta[i];
    norm += pt.r[i] * pt.r[i] *
            (c.alpha[i] * c.alpha[i] + c.beta[i] * c.beta[i]);
  }
  pt.plucker_residual = std::abs(plucker);
  pt.normalization_residual = std::abs(norm - 1.0);
  return pt;
}

GeodesicFrame geodesic_frame(double t) {
  GeodesicFrame gf;
  gf.p = su2_geodesic(t);
  gf.dp = su2_geodesic_dt(t);
  const auto frame = frame_at(su2_action(), gf.p);
  const auto& right = right_action();
  double* norms[3] = {&gf.I, &gf.J, &gf.K};
  for (int i = 0; i < 3; ++i) {
    Vec h = right.generators[i] * gf.p;
    h -= frame.vertical * (frame.vertical.transpose() * h);
    *norms[i] = h.norm();
    gf.e[i] = h / h.norm();
  }
  return gf;
}

std::pair<Eigen::Vector4d, Eigen::Vector4d> split_bivector(const Vec6& biv) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s(0, 1) = biv[0]; s(0, 2) = biv[1]; s(0, 3) = biv[2];
  s(2, 3) = biv[3]; s(3, 1) = biv[4]; s(1, 2) = biv[5];
  s = (s - s.transpose().eval()).eval();
  // the columns of s span the plane
  int best = 0;
  for (int k = 1; k < 4; ++k)
    if (s.col(k).norm() > s.col(best).norm()) best = k;
  Eigen::Vector4d u = s.col(best).normalized();
  Eigen::Vector4d v = s * u;
  const double vn = v.norm();
  if (vn < 1e-12)
    throw std::domain_error("split_bivector: bivector is not simple");
  v /= vn;
  return {u, v};
}

namespace {

// Horizontal lift of frame coordinates to R^8 at gamma(t).
std::pair<Vec, Vec> lift_plane(const GeodesicFrame& gf, const Vec6& biv) {
  auto [uc, vc] = split_bivector(biv);
  Vec u = uc[0] * gf.dp, v = vc[0] * gf.dp;
  for (int i = 0; i < 3; ++i) {
    u += uc[i + 1] * gf.e[i];
    v += vc[i + 1] * gf.e[i];
  }
  return {u, v};
}

}  // namespace

double bivector_curvature(double t, const Vec6& biv) {
  const GeodesicFrame gf = geodesic_frame(t);
  auto [u, v] = lift_plane(gf, biv);
  const auto frame = frame_at(su2_action(), gf.p);
  return plane_curvature(su2_action(), frame, u, v).value;
}

double curvature_one_check(const GrassCirclePoint& point) {
  return std::abs(bivector_curvature(point.t, point.bivector) - 1.0);
}

Eigen::Vector3d normal_generator(double t, const Vec6& bivector) {
  const FrameFunctions f = su2_frame(t);
  const double s23 = bivector[3], s31 = bivector[4], s12 = bivector[5];
  Eigen::Vector3d raw(f.J * f.K * s23, f.K * f.I * s31, f.I * f.J * s12);
  const double n = raw.norm();
  if (n < 1e-12)
    throw std::domain_error(
        "normal_generator: plane contains the geodesic direction "
        "(sigma_23, sigma_31, sigma_12 all vanish)");
  return raw / n;
}

QuadraticFormValue quadratic_form(const GrassCirclePoint& point) {
  QuadraticFormValue qv;
  const double t = point.t;
  qv.closed = point.r[0] * point.r[0] * C1(t) +
              point.r[1] * point.r[1] * C2(t) +
              point.r[2] * point.r[2] * C3(t);

  const GeodesicFrame gf = geodesic_frame(t);
  auto [u, v] = lift_plane(gf, point.bivector);
  // bivector of the actual lifted pair, to keep the pair sign-consistent
  Eigen::Vector4d uc, vc;
  uc << u.dot(gf.dp), u.dot(gf.e[0]), u.dot(gf.e[1]), u.dot(gf.e[2]);
  vc << v.dot(gf.dp), v.dot(gf.e[0]), v.dot(gf.e[1]), v.dot(gf.e[2]);
  Vec6 lifted;
  lifted << uc[0] * vc[1] - uc[1] * vc[0], uc[0] * vc[2] - uc[2] * vc[0],
      uc[0] * vc[3] - uc[3] * vc[0], uc[2] * vc[3] - uc[3] * vc[2],
      uc[3] * vc[1] - uc[1] * vc[3], uc[1] * vc[2] - uc[2] * vc[1];
  const Eigen::Vector3d n = normal_generator(t, lifted);

  const auto& right = right_action();
  Mat nr = n[0] * right.generators[0] + n[1] * right.generators[1] +
           n[2] * right.generators[2];
  qv.raw_pairing = (nr * u).dot(v);
  qv.direct = qv.raw_pairing / kPairingOverClosed;
  return qv;
}

QuadraticFormValue quadratic_form(double t, double theta, int sign_main,
                                  int sign_r3) {
  return quadratic_form(circle_point(t, theta, sign_main, sign_r3));
}

BoundednessCertificate boundedness_certificate(int nt, int ntheta, double eps) {
  BoundednessCertificate cert;
  cert.nt = nt;
  cert.ntheta = ntheta;
  cert.t0 = su2_t0();
  cert.delta = 1e300;

  auto consider = [&](const GrassCirclePoint& pt) {
    const QuadraticFormValue qv = quadratic_form(pt);
    cert.max_plucker = std::max(cert.max_plucker, pt.plucker_residual);
    cert.max_dual_path_gap =
        std::max(cert.max_dual_path_gap, std::abs(qv.closed - qv.direct));
    if (std::abs(qv.closed) < cert.delta) {
      cert.delta = std::abs(qv.closed);
      cert.argmin_t = pt.t;
      cert.argmin_theta = pt.theta;
    }
  };

  for (int i = 0; i < nt; ++i) {
    const double t = eps + (kPi / 6 - 2 * eps) * (i + 0.5) / nt;
    if (std::abs(t - cert.t0) < 2e-4) continue;
    const double tmax = circle_theta_max(t);
    for (int j = 0; j < ntheta; ++j)
      consider(circle_point(t, tmax * j / ntheta, +1, +1));
    // the spec's literal window, pruned to admissible theta
    for (int j = 0; j < ntheta; ++j) {
      const double theta = 2 * kPi * j / ntheta;
      if (theta > tmax) break;
      consider(circle_point(t, theta, +1, -1));
    }
    // spot curvature-one checks on a thinned subgrid
    if (i % std::max(nt / 16, 1) == 0) {
      const auto pt = circle_point(t, 0.5 * tmax, +1, +1);
      cert.max_curvature_one =
          std::max(cert.max_curvature_one, curvature_one_check(pt));
    }
  }

  // endpoint limits by Richardson extrapolation in t (quadratic approach)
  auto riched = [](double f1, double f2) { return (100.0 * f2 - f1) / 99.0; };
  {
    const auto p1 = circle_point(1e-3, 0.0), p2 = circle_point(1e-4, 0.0);
    cert.r1_limit_at_0 = riched(std::abs(p1.r[0]), std::abs(p2.r[0]));
    cert.endpoint_value_at_0 =
        riched(p1.r[0] * p1.r[0] * C1(p1.t), p2.r[0] * p2.r[0] * C1(p2.t));
  }
  {
    const auto p1 = circle_point(kPi / 6 - 1e-3, 0.0),
               p2 = circle_point(kPi / 6 - 1e-4, 0.0);
    cert.r2_limit_at_pi6 = riched(std::abs(p1.r[1]), std::abs(p2.r[1]));
    cert.endpoint_value_at_pi6 =
        riched(p1.r[1] * p1.r[1] * C2(p1.t), p2.r[1] * p2.r[1] * C2(p2.t));
  }
  cert.delta = std::min({cert.delta, std::abs(cert.endpoint_value_at_0),
                         std::abs(cert.endpoint_value_at_pi6)});

  cert.passed = cert.delta > 1e-6 && cert.max_plucker < 1e-10 &&
                cert.max_dual_path_gap < 1e-9 && cert.max_curvature_one < 1e-6;
  std::ostringstream os;
  os << (cert.passed ? "ok" : "FAILED") << ": delta=" << cert.delta
     << " at (t=" << cert.argmin_t << ", theta=" << cert.argmin_theta << ")";
  cert.message = os.str();
  return cert;
}

std::string certificate_json(const BoundednessCertificate& cert) {
  nlohmann::json j;
  j["grid"] = {{"nt", cert.nt}, {"ntheta", cert.ntheta}};
  j["delta"] = cert.delta;
  j["argmin"] = {{"t", cert.argmin_t}, {"theta", cert.argmin_theta}};
  j["t0"] = cert.t0;
  j["max_identity_residuals"] = {
      {"plucker", cert.max_plucker},
      {"dual_path", cert.max_dual_path_gap},
      {"curvature_one", cert.max_curvature_one}};
  j["tolerances"] = {{"plucker", 1e-10},
                     {"dual_path", 1e-9},
                     {"curvature_one", 1e-6},
                     {"delta_min", 1e-6}};
  j["endpoints"] = {{"r1_limit_at_0", cert.r1_limit_at_0},
                    {"r2_limit_at_pi6", cert.r2_limit_at_pi6},
                    {"value_at_0", cert.endpoint_value_at_0},
                    {"value_at_pi6", cert.endpoint_value_at_pi6}};
  j["passed"] = cert.passed;
  return j.dump(2);
}

}  // namespace orbcurv
