#include "orbcurv/oneill.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

TangentFrame frame_at(const SphereAction& action, const Vec& p,
                      double rank_tol) {
  if (std::abs(p.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("frame_at: point not on the unit sphere");
  const int n1 = action.ambient_dim;
  const int g = static_cast<int>(action.generators.size());

  TangentFrame f;
  f.p = p;
  f.killing.resize(n1, g);
  for (int i = 0; i < g; ++i) f.killing.col(i) = action.generators[i] * p;

  const Mat gram = f.killing.transpose() * f.killing;
  EigenSym es = eig_sym(gram);
  const double lmax = es.eigenvalues.size() ? es.eigenvalues.maxCoeff() : 0.0;

  std::vector<int> kept;
  for (int i = 0; i < g; ++i)
    if (es.eigenvalues[i] > rank_tol * lmax) kept.push_back(i);
  f.vertical_dim = static_cast<int>(kept.size());
  f.vertical.resize(n1, f.vertical_dim);
  double lmin_kept = lmax;
  for (int c = 0; c < f.vertical_dim; ++c) {
    const int i = kept[c];
    f.vertical.col(c) =
        f.killing * es.eigenvectors.col(i) / std::sqrt(es.eigenvalues[i]);
    lmin_kept = std::min(lmin_kept, es.eigenvalues[i]);
  }
  f.gram_cond = (f.vertical_dim > 0 && lmin_kept > 0.0) ? lmax / lmin_kept : 1.0;
  f.gram_pinv = pinv_gram(gram, rank_tol);

  // Orthonormal complement of span{p, vertical}.
  Mat fixed(n1, 1 + f.vertical_dim);
  fixed.col(0) = p;
  if (f.vertical_dim > 0) fixed.rightCols(f.vertical_dim) = f.vertical;
  Eigen::HouseholderQR<Mat> qr(fixed);
  const Mat q = qr.householderQ() * Mat::Identity(n1, n1);
  f.horizontal = q.rightCols(n1 - 1 - f.vertical_dim);
  return f;
}

namespace {

double horizontal_defect(const TangentFrame& f, const Vec& x) {
  return (x - f.horizontal * (f.horizontal.transpose() * x)).norm();
}

}  // namespace

Vec a_tensor(const SphereAction& action, const TangentFrame& frame,
             const Vec& u, const Vec& v) {
  const double scale_u = std::max(1.0, u.norm()), scale_v = std::max(1.0, v.norm());
  if (horizontal_defect(frame, u) > 1e-8 * scale_u)
    throw std::invalid_argument("a_tensor: u not horizontal");
  if (horizontal_defect(frame, v) > 1e-8 * scale_v)
    throw std::invalid_argument("a_tensor: v not horizontal");
  const int g = static_cast<int>(action.generators.size());
  Vec b(g);
  for (int i = 0; i < g; ++i) b[i] = -v.dot(action.generators[i] * u);
  return frame.killing * (frame.gram_pinv * b);
}

PlaneCurvature plane_curvature(const SphereAction& action,
                               const TangentFrame& frame, const Vec& u,
                               const Vec& v) {
  const double area2 = u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2);
  if (area2 < 1e-12)
    throw std::invalid_argument("plane_curvature: degenerate plane");
  const Vec w = a_tensor(action, frame, u, v);
  PlaneCurvature pc;
  pc.a_norm_sq = w.squaredNorm() / area2;
  pc.value = 1.0 + 3.0 * pc.a_norm_sq;
  pc.u = u;
  pc.v = v;
  return pc;
}

int orbit_dim(const SphereAction& action, const Vec& p, double rank_tol) {
  const int g = static_cast<int>(action.generators.size());
  Mat killing(action.ambient_dim, g);
  for (int i = 0; i < g; ++i) killing.col(i) = action.generators[i] * p;
  return gram_rank(killing.transpose() * killing, rank_tol);
}

ScanReport kappa_scan(const SphereAction& action, int n_points, int n_planes,
                      std::uint64_t seed, bool regular_only) {
  if (n_points < 1 || n_planes < 1)
    throw std::invalid_argument("kappa_scan: need n_points, n_planes >= 1");
  const auto points = sample_sphere(action.ambient_dim, n_points, seed);

  std::vector<TangentFrame> frames;
  frames.reserve(points.size());
  int principal = 0;
  for (const auto& p : points) {
    frames.push_back(frame_at(action, p));
    principal = std::max(principal, frames.back().vertical_dim);
  }

  ScanReport rep;
  rep.principal_vertical_dim = principal;
  const std::uint64_t plane_seed = seed ^ 0x5DEECE66Dull;
  double best = 0.0, worst = 0.0;
  bool first = true;

  for (int pi = 0; pi < n_points; ++pi) {
    const TangentFrame& f = frames[pi];
    if (f.vertical_dim != principal) continue;
    if (regular_only && f.gram_cond > 1e8) continue;
    ++rep.regular_points;
    const int h = static_cast<int>(f.horizontal.cols());
    if (h < 2) continue;
    for (int pj = 0; pj < n_planes; ++pj) {
      const std::uint64_t base =
          (static_cast<std::uint64_t>(pi) * n_planes + pj) * 2ull * h;
      Vec a(h), b(h);
      for (int k = 0; k < h; ++k) {
        a[k] = counter_normal(plane_seed, base + k);
        b[k] = counter_normal(plane_seed, base + h + k);
      }
      a.normalize();
      b -= a.dot(b) * a;
      if (b.norm() < 1e-8) continue;
      b.normalize();
      const Vec u = f.horizontal * a, v = f.horizontal * b;
      const PlaneCurvature pc = plane_curvature(action, f, u, v);
      ScanSample s;
      s.index = pi * n_planes + pj;
      s.point = f.p;
      s.curvature = pc.value;
      rep.samples.push_back(s);
      ++rep.plane_count;
      if (first || pc.value < best) {
        best = pc.value;
        rep.argmin_point = f.p;
        rep.argmin_u = u;
        rep.argmin_v = v;
      }
      if (first || pc.value > worst) worst = pc.value;
      first = false;
    }
  }

  rep.empty = first;
  if (!rep.empty) {
    rep.min_value = best;
    rep.max_value = worst;
    rep.histogram.assign(20, 0);
    const double width = std::max(worst - best, 1e-300);
    for (const auto& s : rep.samples) {
      int bin = static_cast<int>(std::floor((s.curvature - best) / width * 20.0));
      bin = std::clamp(bin, 0, 19);
      ++rep.histogram[static_cast<std::size_t>(bin)];
    }
  }
  return rep;
}

TotallyRealCheck is_totally_real(const Vec& u, const Vec& v,
                                 const ComplexStructure& j) {
  const Vec ju = j.J * u, jv = j.J * v;
  double r = 0.0;
  r = std::max(r, std::abs(ju.dot(u)));
  r = std::max(r, std::abs(ju.dot(v)));
  r = std::max(r, std::abs(jv.dot(u)));
  r = std::max(r, std::abs(jv.dot(v)));
  return {r < 1e-10, r};
}

std::string scan_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "sample_index";
  const Eigen::Index dim = report.samples.empty() ? 0 : report.samples[0].point.size();
  for (Eigen::Index i = 0; i < dim; ++i) os << ",p" << i;
  os << ",curvature\n";
  char buf[64];
  for (const auto& s : report.samples) {
    os << s.index;
    for (Eigen::Index i = 0; i < dim; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", s.point[i]);
      os << ',' << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", s.curvature);
    os << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace orbcurv
