#include "orbcurv/actions.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

using std::complex;
using namespace std::complex_literals;

Mat realify(const CMat& linear) {
  const Eigen::Index n = linear.rows(), m = linear.cols();
  Mat out = Mat::Zero(2 * n, 2 * m);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < m; ++c) {
      const double re = linear(r, c).real(), im = linear(r, c).imag();
      out(2 * r, 2 * c) = re;
      out(2 * r, 2 * c + 1) = -im;
      out(2 * r + 1, 2 * c) = im;
      out(2 * r + 1, 2 * c + 1) = re;
    }
  return out;
}

Mat realify_antilinear(const CMat& anti) {
  const Eigen::Index n = anti.rows(), m = anti.cols();
  Mat out = Mat::Zero(2 * n, 2 * m);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < m; ++c) {
      const double re = anti(r, c).real(), im = anti(r, c).imag();
      out(2 * r, 2 * c) = re;
      out(2 * r, 2 * c + 1) = im;
      out(2 * r + 1, 2 * c) = im;
      out(2 * r + 1, 2 * c + 1) = -re;
    }
  return out;
}

CVec to_complex(const Vec& x) {
  if (x.size() % 2 != 0)
    throw std::invalid_argument("to_complex: odd real dimension");
  CVec z(x.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j)
    z[j] = complex<double>(x[2 * j], x[2 * j + 1]);
  return z;
}

Vec to_real(const CVec& z) {
  Vec x(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    x[2 * j] = z[j].real();
    x[2 * j + 1] = z[j].imag();
  }
  return x;
}

std::array<CMat, 3> sym_power_generators(int d) {
  if (d < 1) throw std::invalid_argument("sym_power_generators: d must be >= 1");
  const int n = d + 1;
  CMat gi = CMat::Zero(n, n), gj = CMat::Zero(n, n), gk = CMat::Zero(n, n);
  for (int a = 0; a <= d; ++a) {
    gi(a, a) = complex<double>(0.0, d - 2 * a);
    // ladder coefficients on the normalized monomial basis
    if (a + 1 <= d) {
      const double up = std::sqrt(double(d - a) * double(a + 1));
      gj(a + 1, a) += up;
      gk(a + 1, a) += complex<double>(0.0, -up);
    }
    if (a - 1 >= 0) {
      const double dn = std::sqrt(double(a) * double(d - a + 1));
      gj(a - 1, a) -= dn;
      gk(a - 1, a) += complex<double>(0.0, -dn);
    }
  }
  return {gi, gj, gk};
}

CMat sym_power_group_action(int d, complex<double> alpha, complex<double> beta) {
  const int n = d + 1;
  // Binomial coefficients up to d.
  std::vector<std::vector<double>> binom(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    binom[i][0] = 1.0;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0.0);
  }
  std::vector<double> lognorm(n);
  for (int a = 0; a <= d; ++a)
    lognorm[a] = 0.5 * (std::lgamma(double(d - a + 1)) + std::lgamma(double(a + 1)));

  CMat m = CMat::Zero(n, n);
  for (int a = 0; a <= d; ++a) {
    // e1^{d-a} e2^a -> (alpha e1 + beta e2)^{d-a} (-conj(beta) e1 + conj(alpha) e2)^a
    for (int k = 0; k <= d - a; ++k)
      for (int l = 0; l <= a; ++l) {
        const int b = k + l;  // resulting power of e2
        const complex<double> coeff =
            binom[d - a][k] * std::pow(alpha, d - a - k) * std::pow(beta, k) *
            binom[a][l] * std::pow(-std::conj(beta), a - l) *
            std::pow(std::conj(alpha), l);
        m(b, a) += coeff * std::exp(lognorm[b] - lognorm[a]);
      }
  }
  return m;
}

CMat sym_power_structure(int d) {
  const int n = d + 1;
  CMat q = CMat::Zero(n, n);
  for (int a = 0; a <= d; ++a) q(d - a, a) = (a % 2 == 0) ? 1.0 : -1.0;
  return q;
}

SphereAction u1_weights(const std::vector<int>& weights, int copies) {
  if (weights.empty()) throw std::invalid_argument("u1_weights: empty weight list");
  if (copies < 1) throw std::invalid_argument("u1_weights: copies must be >= 1");
  bool all_zero = true;
  for (int w : weights)
    if (w != 0) all_zero = false;
  if (all_zero) throw std::invalid_argument("u1_weights: trivial action (all weights zero)");

  const int k = static_cast<int>(weights.size()) * copies;
  Mat gen = Mat::Zero(2 * k, 2 * k);
  for (int c = 0; c < copies; ++c)
    for (size_t i = 0; i < weights.size(); ++i) {
      const int slot = 2 * (c * static_cast<int>(weights.size()) + static_cast<int>(i));
      gen(slot, slot + 1) = -weights[i];
      gen(slot + 1, slot) = weights[i];
    }

  SphereAction a;
  std::ostringstream name;
  name << "u1(";
  for (size_t i = 0; i < weights.size(); ++i)
    name << (i ? "," : "") << weights[i];
  name << ")";
  if (copies > 1) name << "x" << copies;
  a.name = name.str();
  a.ambient_dim = 2 * k;
  a.generators = {gen};
  a.group_dim = 1;
  a.group_rank = 1;
  a.tags = {{"family", "circle"}};
  return a;
}

namespace {

// The displayed 4x4 complex matrices of the Sym^3(C^2*) action, basis order
// (u^3/sqrt6, u v^2/sqrt2, v^3/sqrt6, u^2 v/sqrt2).
std::array<CMat, 3> su2_sym3_dual_complex() {
  const double s3 = std::sqrt(3.0);
  CMat iL = CMat::Zero(4, 4), jL = CMat::Zero(4, 4), kL = CMat::Zero(4, 4);
  iL(0, 0) = -3.0i; iL(1, 1) = 1.0i; iL(2, 2) = 3.0i; iL(3, 3) = -1.0i;
  jL(0, 3) = -s3; jL(1, 2) = -s3; jL(1, 3) = 2.0;
  jL(2, 1) = s3;  jL(3, 0) = s3;  jL(3, 1) = -2.0;
  kL(0, 3) = 1.0i * s3; kL(1, 2) = 1.0i * s3; kL(1, 3) = 2.0i;
  kL(2, 1) = 1.0i * s3; kL(3, 0) = 1.0i * s3; kL(3, 1) = 2.0i;
  return {iL, jL, kL};
}

// i_R is complex linear; j_R, k_R are antilinear. Coordinates (x1, x2, y1, y2)
// for (x1 + j y1, x2 + j y2) in H^2.
Mat right_iR() {
  CMat m = CMat::Zero(4, 4);
  m.diagonal().setConstant(-1.0i);
  return realify(m);
}

Mat right_jR() {
  CMat m = CMat::Zero(4, 4);  // (x1,x2,y1,y2) -> (conj y1, conj y2, -conj x1, -conj x2)
  m(0, 2) = 1.0; m(1, 3) = 1.0; m(2, 0) = -1.0; m(3, 1) = -1.0;
  return realify_antilinear(m);
}

Mat right_kR() {
  CMat m = CMat::Zero(4, 4);  // (x1,x2,y1,y2) -> (-i conj y1, -i conj y2, i conj x1, i conj x2)
  m(0, 2) = -1.0i; m(1, 3) = -1.0i; m(2, 0) = 1.0i; m(3, 1) = 1.0i;
  return realify_antilinear(m);
}

}  // namespace

SphereAction su2_sym3_dual() {
  auto [iL, jL, kL] = su2_sym3_dual_complex();
  SphereAction a;
  a.name = "su2-sym3";
  a.ambient_dim = 8;
  a.generators = {realify(iL), realify(jL), realify(kL)};
  a.group_dim = 3;
  a.group_rank = 1;
  a.tags = {{"family", "su2-on-h2"}, {"space", "Sym^3(C^2*)"}};
  return a;
}

SphereAction sp1_right_h2() {
  SphereAction a;
  a.name = "sp1-right-h2";
  a.ambient_dim = 8;
  a.generators = {right_iR(), right_jR(), right_kR()};
  a.group_dim = 3;
  a.group_rank = 1;
  a.tags = {{"family", "sp1-right"}, {"space", "H^2"}};
  return a;
}

SphereAction u2_c4() {
  auto [iL, jL, kL] = su2_sym3_dual_complex();
  SphereAction a;
  a.name = "u2-c4";
  a.ambient_dim = 8;
  a.generators = {realify(iL), realify(jL), realify(kL), right_iR()};
  a.group_dim = 4;
  a.group_rank = 2;
  a.tags = {{"family", "u2-on-c4"}, {"theorem_case", "i"}};
  return a;
}

SphereAction sp1_h_imh() {
  // Basis (1, i, j, k) of H and (i, j, k) of Im H.
  auto quat_left = [](int q) {
    Mat l = Mat::Zero(4, 4);
    // multiplication table rows: q * (1, i, j, k)
    static const int tab[3][4][2] = {
        // i*1=i, i*i=-1, i*j=k, i*k=-j
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
        // j*1=j, j*i=-k, j*j=-1, j*k=i
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
        // k*1=k, k*i=j, k*j=-i, k*k=-1
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
    for (int c = 0; c < 4; ++c) l(tab[q][c][0], c) = tab[q][c][1];
    return l;
  };
  auto ad_part = [](int q) {
    Mat m = Mat::Zero(3, 3);
    // ad_i: j -> 2k, k -> -2j (cyclic)
    const int j = (q + 1) % 3, k = (q + 2) % 3;
    m(k, j) = 2.0;
    m(j, k) = -2.0;
    return m;
  };
  SphereAction a;
  a.name = "sp1-h-imh";
  a.ambient_dim = 7;
  for (int q = 0; q < 3; ++q) {
    Mat z = Mat::Zero(7, 7);
    z.topLeftCorner(4, 4) = quat_left(q);
    z.bottomRightCorner(3, 3) = ad_part(q);
    a.generators.push_back(z);
  }
  a.group_dim = 3;
  a.group_rank = 1;
  a.tags = {{"family", "su2-c2+r3"}, {"theorem_case", "iv"}};
  return a;
}

std::vector<Vec> sym6_real_form_basis() {
  // Unit vectors in realified C^7 (monomial index = power of e2):
  //   (m0+m6)/s2, i(m0-m6)/s2, (m1-m5)/s2, i(m1+m5)/s2,
  //   (m2+m4)/s2, i(m2-m4)/s2, i m3.
  const double s = 1.0 / std::sqrt(2.0);
  auto unit = [](int slot) {
    CVec v = CVec::Zero(7);
    v[slot] = 1.0;
    return v;
  };
  std::vector<CVec> basis;
  basis.push_back(s * (unit(0) + unit(6)));
  basis.push_back(s * 1.0i * (unit(0) - unit(6)));
  basis.push_back(s * (unit(1) - unit(5)));
  basis.push_back(s * 1.0i * (unit(1) + unit(5)));
  basis.push_back(s * (unit(2) + unit(4)));
  basis.push_back(s * 1.0i * (unit(2) - unit(4)));
  basis.push_back(1.0i * unit(3));
  std::vector<Vec> out;
  for (const auto& b : basis) out.push_back(to_real(b));
  return out;
}

SphereAction so3_sym6_real() {
  auto gens = sym_power_generators(6);
  const auto basis = sym6_real_form_basis();
  Mat b(14, 7);
  for (int c = 0; c < 7; ++c) b.col(c) = basis[c];

  SphereAction a;
  a.name = "so3-sym6-real";
  a.ambient_dim = 7;
  for (const auto& g : gens) {
    const Mat gr = realify(g);
    const Mat restricted = b.transpose() * gr * b;
    // the real form must be invariant
    const double leak = (gr * b - b * restricted).cwiseAbs().maxCoeff();
    if (leak > 1e-12)
      throw std::logic_error("so3_sym6_real: real form not invariant");
    a.generators.push_back(restricted);
  }
  a.group_dim = 3;
  a.group_rank = 1;
  a.tags = {{"family", "so3-r7"}, {"space", "Sym^6(C^2) real form"}};
  return a;
}

SphereAction sp1sp1_h3h() {
  auto gens = sym_power_generators(5);
  const CMat q = sym_power_structure(5);
  CMat mi = CMat::Zero(6, 6);
  mi.diagonal().setConstant(1.0i);

  SphereAction a;
  a.name = "sp1sp1-h3h";
  a.ambient_dim = 12;
  for (const auto& g : gens) a.generators.push_back(realify(g));
  // right action of unit quaternions, v -> -v xi
  a.generators.push_back(realify(-mi));                 // v -> -v i
  a.generators.push_back(realify_antilinear(-q));       // v -> -v j = -J v
  a.generators.push_back(realify_antilinear(mi * q));   // v -> -v k = i J v
  a.group_dim = 6;
  a.group_rank = 2;
  a.tags = {{"family", "h3xh"}, {"space", "Sym^5(C^2)"}};
  return a;
}

std::pair<ComplexStructure, ComplexStructure> sym5_quaternionic_structure() {
  CMat mi = CMat::Zero(6, 6);
  mi.diagonal().setConstant(1.0i);
  ComplexStructure ji{realify(mi)};
  ComplexStructure jj{realify_antilinear(sym_power_structure(5))};
  return {ji, jj};
}

SphereAction spm_u1(int m, int r, int s) {
  if (m < 1) throw std::invalid_argument("spm_u1: m must be >= 1");
  if (r == s) throw std::invalid_argument("spm_u1: weights must satisfy r != s");
  if (r < 0 || s < 0) throw std::invalid_argument("spm_u1: weights must be >= 0");

  // sp(m) = { [[A, B], [-conj B, conj A]] : A anti-Hermitian, B symmetric }.
  std::vector<CMat> sp_basis;
  auto push = [&](const CMat& a, const CMat& b) {
    CMat x = CMat::Zero(2 * m, 2 * m);
    x.topLeftCorner(m, m) = a;
    x.topRightCorner(m, m) = b;
    x.bottomLeftCorner(m, m) = -b.conjugate();
    x.bottomRightCorner(m, m) = a.conjugate();
    sp_basis.push_back(x);
  };
  const CMat zero = CMat::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    CMat a = zero;
    a(p, p) = 1.0i;
    push(a, zero);
  }
  for (int p = 0; p < m; ++p)
    for (int t = p + 1; t < m; ++t) {
      CMat a = zero;
      a(p, t) = 1.0; a(t, p) = -1.0;
      push(a, zero);
      a = zero;
      a(p, t) = 1.0i; a(t, p) = 1.0i;
      push(a, zero);
    }
  for (int p = 0; p < m; ++p) {
    CMat b = zero;
    b(p, p) = 1.0;
    push(zero, b);
    b(p, p) = 1.0i;
    push(zero, b);
  }
  for (int p = 0; p < m; ++p)
    for (int t = p + 1; t < m; ++t) {
      CMat b = zero;
      b(p, t) = 1.0; b(t, p) = 1.0;
      push(zero, b);
      b = zero;
      b(p, t) = 1.0i; b(t, p) = 1.0i;
      push(zero, b);
    }

  SphereAction a;
  std::ostringstream name;
  name << "sp" << m << "-u1(" << r << "," << s << ")";
  a.name = name.str();
  a.ambient_dim = 8 * m;
  for (const auto& x : sp_basis) {
    CMat big = CMat::Zero(4 * m, 4 * m);
    big.topLeftCorner(2 * m, 2 * m) = x;
    big.bottomRightCorner(2 * m, 2 * m) = x;
    a.generators.push_back(realify(big));
  }
  CMat circle = CMat::Zero(4 * m, 4 * m);
  for (int p = 0; p < 2 * m; ++p) circle(p, p) = complex<double>(0.0, r);
  for (int p = 2 * m; p < 4 * m; ++p) circle(p, p) = complex<double>(0.0, s);
  a.generators.push_back(realify(circle));
  a.group_dim = m * (2 * m + 1) + 1;
  a.group_rank = m + 1;
  a.tags = {{"family", "spm-u1"}, {"theorem_case", "v"}};
  return a;
}

ValidationReport validate(const SphereAction& action) {
  ValidationReport rep;
  rep.dim_consistent =
      action.group_dim == static_cast<int>(action.generators.size());
  for (size_t i = 0; i < action.generators.size(); ++i) {
    const double r = antisymmetry_residual(action.generators[i]);
    if (r > rep.max_antisymmetry) {
      rep.max_antisymmetry = r;
      rep.worst_generator = static_cast<int>(i);
    }
  }

  // Bracket closure: [Z_i, Z_j] must be in the span of the generators.
  const int g = static_cast<int>(action.generators.size());
  const Eigen::Index n2 =
      static_cast<Eigen::Index>(action.ambient_dim) * action.ambient_dim;
  Mat span(n2, g);
  for (int i = 0; i < g; ++i)
    span.col(i) = action.generators[i].reshaped();
  const Mat gram_pinv_span = pinv_gram(span.transpose() * span);
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      const Mat bracket = action.generators[i] * action.generators[j] -
                          action.generators[j] * action.generators[i];
      const Vec coeffs = gram_pinv_span * (span.transpose() * bracket.reshaped());
      const double resid = (bracket.reshaped() - span * coeffs).cwiseAbs().maxCoeff();
      if (resid > rep.max_bracket_residual) {
        rep.max_bracket_residual = resid;
        rep.worst_pair = {i, j};
      }
    }

  rep.passed = rep.dim_consistent && rep.max_antisymmetry < 1e-12 &&
               rep.max_bracket_residual < 1e-9;
  std::ostringstream msg;
  if (!rep.dim_consistent)
    msg << "group_dim " << action.group_dim << " != generator count " << g << "; ";
  if (rep.max_antisymmetry >= 1e-12)
    msg << "generator " << rep.worst_generator << " fails antisymmetry ("
        << rep.max_antisymmetry << "); ";
  if (rep.max_bracket_residual >= 1e-9)
    msg << "bracket [" << rep.worst_pair.first << "," << rep.worst_pair.second
        << "] not in span (" << rep.max_bracket_residual << "); ";
  rep.message = msg.str().empty() ? "ok" : msg.str();
  return rep;
}

Vec su2_geodesic(double t) {
  Vec p = Vec::Zero(8);
  p[0] = std::cos(t);  // Re x1
  p[2] = std::sin(t);  // Re x2
  return p;
}

Vec su2_geodesic_dt(double t) {
  Vec p = Vec::Zero(8);
  p[0] = -std::sin(t);
  p[2] = std::cos(t);
  return p;
}

std::string catalog_json(const SphereAction& action) {
  nlohmann::json j;
  j["name"] = action.name;
  j["ambient_dim"] = action.ambient_dim;
  j["group_dim"] = action.group_dim;
  j["group_rank"] = action.group_rank;
  j["tags"] = action.tags;
  return j.dump();
}

}  // namespace orbcurv
