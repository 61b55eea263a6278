#pragma once

#include "orbcurv/numkern.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace orbcurv {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// An isometric linear action on the unit sphere of R^{ambient_dim}, given by
// a basis of the Lie algebra acting as antisymmetric matrices.
struct SphereAction {
  std::string name;
  int ambient_dim = 0;
  std::vector<Mat> generators;
  int group_dim = 0;
  int group_rank = 0;
  std::map<std::string, std::string> tags;
};

// Orthogonal antisymmetric J with J^2 = -I.
struct ComplexStructure {
  Mat J;
};

struct ValidationReport {
  bool passed = false;
  double max_antisymmetry = 0.0;       // max over generators of |Z + Z^T|
  double max_bracket_residual = 0.0;   // worst closure defect per entry
  int worst_generator = -1;            // offending generator (antisymmetry)
  std::pair<int, int> worst_pair{-1, -1};  // offending bracket pair
  bool dim_consistent = false;
  std::string message;
};

// --- realification helpers (complex coordinate j occupies real slots 2j, 2j+1)

Mat realify(const CMat& linear);            // v -> L v
Mat realify_antilinear(const CMat& anti);   // v -> A conj(v)
CVec to_complex(const Vec& x);
Vec to_real(const CVec& z);

// --- symmetric power machinery on Sym^d(C^2)
// Normalized monomial basis m_a = e1^{d-a} e2^a / sqrt((d-a)! a!), a = 0..d.

// Action of the su(2) basis (i, j, k) as complex (d+1)x(d+1) matrices.
std::array<CMat, 3> sym_power_generators(int d);

// Action of g = [[alpha, -conj(beta)], [beta, conj(alpha)]] in SU(2).
CMat sym_power_group_action(int d, std::complex<double> alpha,
                            std::complex<double> beta);

// Antilinear structure J v = Q conj(v) induced by e1 -> e2, e2 -> -e1
// (quaternionic for odd d, real for even d).
CMat sym_power_structure(int d);

// --- the concrete actions of the paper

// U(1) on C^k with integer weights; the weight list is repeated `copies`
// times. One generator with 2x2 blocks a_k * J2.
SphereAction u1_weights(const std::vector<int>& weights, int copies = 1);

// SU(2) on Sym^3(C^2*) = H^2, the displayed i_L, j_L, k_L on R^8.
SphereAction su2_sym3_dual();

// Sp(1) acting on H^2 on the right (i_R, j_R, k_R of the same realification).
SphereAction sp1_right_h2();

// U(2) on C^4: generators i_L, j_L, k_L, i_R.
SphereAction u2_c4();

// Sp(1) on H + Im H, q.(x,y) = (q x, q y q^{-1}), on R^7.
SphereAction sp1_h_imh();

// SO(3) on the real form of Sym^6(C^2), on R^7.
SphereAction so3_sym6_real();

// Sp(1) x Sp(1) on Sym^5(C^2) = H^3 (left symmetric-power action, right
// quaternionic multiplication), on R^12.
SphereAction sp1sp1_h3h();

// The two realified structures on Sym^5: multiplication by i, and the
// antilinear quaternionic map.
std::pair<ComplexStructure, ComplexStructure> sym5_quaternionic_structure();

// Sp(m) diagonal on C^{2m} + C^{2m} with U(1) weights (r, s), r != s.
SphereAction spm_u1(int m, int r, int s);

ValidationReport validate(const SphereAction& action);

// --- geodesic data for the H^2 analysis
// gamma(t) = cos t * u^3/sqrt6 + sin t * u v^2/sqrt2, as a vector in R^8.
Vec su2_geodesic(double t);
Vec su2_geodesic_dt(double t);

// Orthonormal basis vectors of the real form of Sym^6 inside the realified
// C^7, in the paper's listed order (index 6 is the singular-orbit point).
std::vector<Vec> sym6_real_form_basis();

// JSON catalog line for one action: {name, ambient_dim, group_dim,
// group_rank, tags}.
std::string catalog_json(const SphereAction& action);

}  // namespace orbcurv
