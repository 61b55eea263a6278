#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace orbcurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Largest |M(i,j) - M(j,i)|.
double max_asymmetry(const Mat& m);

// Largest |M(i,j) + M(j,i)|; zero exactly for antisymmetric matrices.
double antisymmetry_residual(const Mat& m);

struct EigenSym {
  Vec eigenvalues;   // ascending
  Mat eigenvectors;  // orthonormal columns, M = Q diag(l) Q^T
};

// Symmetric eigendecomposition. Rejects matrices whose asymmetry exceeds
// 1e-10 relative to the largest entry.
EigenSym eig_sym(const Mat& m);

// Moore-Penrose pseudo-inverse of a symmetric PSD matrix. Eigenvalues below
// rank_tol * lambda_max are treated as zero; an eigenvalue below
// -1e-8 * lambda_max rejects the input as not PSD.
Mat pinv_gram(const Mat& g, double rank_tol = 1e-9);

// Number of eigenvalues above rank_tol * lambda_max.
int gram_rank(const Mat& g, double rank_tol = 1e-9);

// Bracketing root finder (Brent: bisection + inverse quadratic stepping).
// Requires f(lo) * f(hi) <= 0; the result always lies inside [lo, hi].
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

// Deterministic counter-based streams: same (seed, index) always yields the
// same value, independent of call order.
double counter_uniform(std::uint64_t seed, std::uint64_t index);  // [0,1)
double counter_normal(std::uint64_t seed, std::uint64_t index);   // N(0,1)

// count unit vectors in R^dim, reproducible for a fixed seed.
std::vector<Vec> sample_sphere(int dim, int count, std::uint64_t seed);

}  // namespace orbcurv
