#include "orbcurv/numkern.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

double max_asymmetry(const Mat& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

double antisymmetry_residual(const Mat& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

EigenSym eig_sym(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = max_asymmetry(m);
  if (asym > 1e-10 * scale) {
    std::ostringstream os;
    os << "eig_sym: input not symmetric, max asymmetry " << asym;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (m + m.transpose()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_sym: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Mat pinv_gram(const Mat& g, double rank_tol) {
  EigenSym es = eig_sym(g);
  const double lmax = es.eigenvalues.size() ? es.eigenvalues.maxCoeff() : 0.0;
  const double lmin = es.eigenvalues.size() ? es.eigenvalues.minCoeff() : 0.0;
  if (lmin < -1e-8 * std::max(lmax, 1.0)) {
    std::ostringstream os;
    os << "pinv_gram: input not PSD, eigenvalue " << lmin;
    throw std::invalid_argument(os.str());
  }
  Vec inv = Vec::Zero(es.eigenvalues.size());
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
    if (es.eigenvalues[i] > rank_tol * lmax) inv[i] = 1.0 / es.eigenvalues[i];
  return es.eigenvectors * inv.asDiagonal() * es.eigenvectors.transpose();
}

int gram_rank(const Mat& g, double rank_tol) {
  EigenSym es = eig_sym(g);
  const double lmax = es.eigenvalues.size() ? es.eigenvalues.maxCoeff() : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
    if (es.eigenvalues[i] > rank_tol * lmax) ++rank;
  return rank;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb))
    throw std::invalid_argument("find_root: non-finite endpoint value");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::invalid_argument("find_root: no sign change on bracket");

  // Brent's method.
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 400; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a; fc = fa; d = b - a; e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = xm; e = d;
      }
    } else {
      d = xm; e = d;
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0xD1B54A32D192ED03ull));
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(mix(seed, index) >> 11) * 0x1.0p-53;
}

double counter_normal(std::uint64_t seed, std::uint64_t index) {
  // Box-Muller on two sub-streams; (0,1] for the log argument.
  const double u1 = 1.0 - counter_uniform(seed, 2 * index);
  const double u2 = counter_uniform(seed, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Vec> sample_sphere(int dim, int count, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("sample_sphere: dim must be >= 2");
  if (count < 1) throw std::invalid_argument("sample_sphere: count must be >= 1");
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec v(dim);
    std::uint64_t salt = 0;
    do {
      for (int j = 0; j < dim; ++j)
        v[j] = counter_normal(seed, static_cast<std::uint64_t>(i) * dim + j +
                                        salt * 0x100000000ull);
      ++salt;
    } while (v.norm() < 1e-8);
    out.push_back(v / v.norm());
  }
  return out;
}

}  // namespace orbcurv
