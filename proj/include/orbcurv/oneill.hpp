#pragma once

#include "orbcurv/actions.hpp"
#include "orbcurv/numkern.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbcurv {

// Vertical/horizontal splitting of the tangent space of S^n at p.
struct TangentFrame {
  Vec p;
  Mat killing;      // columns Z_i p, one per generator
  Mat vertical;     // orthonormal columns spanning {Z_i p}
  Mat horizontal;   // orthonormal columns, orthogonal to p and vertical
  int vertical_dim = 0;
  Mat gram_pinv;    // pseudo-inverse of the Killing Gram matrix
  double gram_cond = 1.0;  // ratio of kept Gram eigenvalues
};

struct PlaneCurvature {
  double value = 0.0;
  double a_norm_sq = 0.0;  // |A_u v|^2 (normalized by the plane area element)
  Vec u, v;
};

struct ScanSample {
  int index = 0;
  Vec point;
  double curvature = 0.0;
};

struct ScanReport {
  bool empty = true;
  double min_value = 0.0;
  double max_value = 0.0;
  int principal_vertical_dim = 0;
  std::size_t regular_points = 0;
  std::size_t plane_count = 0;
  Vec argmin_point;
  Vec argmin_u, argmin_v;
  std::vector<ScanSample> samples;
  std::vector<std::size_t> histogram;  // 20 bins over [min_value, max_value]
};

struct TotallyRealCheck {
  bool totally_real = false;
  double residual = 0.0;  // worst cross inner product
};

TangentFrame frame_at(const SphereAction& action, const Vec& p,
                      double rank_tol = 1e-9);

// O'Neill A-tensor value A_u v: the vertical vector w with
// <w, Z_i p> = -<v, Z_i u> for every generator Z_i.
Vec a_tensor(const SphereAction& action, const TangentFrame& frame,
             const Vec& u, const Vec& v);

// Quotient sectional curvature 1 + 3 |A_u v|^2 / |u ^ v|^2.
PlaneCurvature plane_curvature(const SphereAction& action,
                               const TangentFrame& frame, const Vec& u,
                               const Vec& v);

int orbit_dim(const SphereAction& action, const Vec& p,
              double rank_tol = 1e-9);

// Deterministic estimate of the curvature infimum over the regular part.
ScanReport kappa_scan(const SphereAction& action, int n_points, int n_planes,
                      std::uint64_t seed, bool regular_only = true);

TotallyRealCheck is_totally_real(const Vec& u, const Vec& v,
                                 const ComplexStructure& j);

// CSV (17 significant digits): sample_index, point..., curvature.
std::string scan_csv(const ScanReport& report);

}  // namespace orbcurv
