#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbcurv/actions.hpp"
#include "orbcurv/closedform.hpp"
#include "orbcurv/oneill.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

using namespace orbcurv;
namespace {
constexpr double kPi = std::numbers::pi;

Vec horizontal_part(const TangentFrame& f, const Vec& x) {
  return f.horizontal * (f.horizontal.transpose() * x);
}

Vec wcp1_point(double r, double theta) {
  Vec p(4);
  p << std::cos(r), 0.0, std::sin(r) * std::cos(theta),
      std::sin(r) * std::sin(theta);
  return p;
}
}  // namespace

TEST_CASE("frame_at splits the tangent space") {
  const auto hopf = u1_weights({1, 1});
  const auto pts = sample_sphere(4, 5, 21);
  for (const auto& p : pts) {
    const auto f = frame_at(hopf, p);
    CHECK(f.vertical_dim == 1);
    CHECK(f.horizontal.cols() == 2);
    // orthogonality of the pieces
    CHECK((f.vertical.transpose() * p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((f.horizontal.transpose() * p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((f.horizontal.transpose() * f.vertical).cwiseAbs().maxCoeff() < 1e-10);
  }

  const auto su2 = su2_sym3_dual();
  CHECK(frame_at(su2, su2_geodesic(kPi / 12)).vertical_dim == 3);

  const auto c2r3 = sp1_h_imh();
  Vec v = Vec::Zero(7);
  v[5] = 1.0;  // (0 | j): the singular orbit
  CHECK(frame_at(c2r3, v).vertical_dim == 2);
}

TEST_CASE("a_tensor on the Hopf action gives |A| = 1") {
  const auto hopf = u1_weights({1, 1});
  const auto pts = sample_sphere(4, 8, 3);
  for (const auto& p : pts) {
    const auto f = frame_at(hopf, p);
    const Vec u = f.horizontal.col(0), v = f.horizontal.col(1);
    CHECK(std::abs(a_tensor(hopf, f, u, v).norm() - 1.0) < 1e-12);
    CHECK(plane_curvature(hopf, f, u, v).value == doctest::Approx(4.0));
  }
}

TEST_CASE("a_tensor antisymmetry and bilinearity") {
  const auto act = su2_sym3_dual();
  const auto pts = sample_sphere(8, 4, 9);
  for (const auto& p : pts) {
    const auto f = frame_at(act, p);
    if (f.horizontal.cols() < 2) continue;
    const Vec u = f.horizontal.col(0), v = f.horizontal.col(1);
    const Vec uv = a_tensor(act, f, u, v);
    const Vec vu = a_tensor(act, f, v, u);
    CHECK((uv + vu).cwiseAbs().maxCoeff() < 1e-12);
    const Vec scaled = a_tensor(act, f, (2.5 * u).eval(), v);
    CHECK((scaled - 2.5 * uv).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("a_tensor rejects non-horizontal input") {
  const auto hopf = u1_weights({1, 1});
  Vec p = Vec::Zero(4);
  p[0] = 1.0;
  const auto f = frame_at(hopf, p);
  CHECK_THROWS_AS((void)a_tensor(hopf, f, p, f.horizontal.col(0)),
                  std::invalid_argument);
}

TEST_CASE("A-tensor vanishes on w1 ^ w2 for both S^11 submersions") {
  const auto full = sp1sp1_h3h();
  Vec p = Vec::Zero(12);
  p[0] = 1.0;  // e1^5
  Vec w1 = Vec::Zero(12);
  w1[4] = 1.0;  // e1^3 e2^2
  Vec w2 = Vec::Zero(12);
  w2[8] = 1.0;  // e1 e2^4

  SphereAction left = full, right = full;
  left.generators.resize(3);
  left.group_dim = 3;
  left.group_rank = 1;
  right.generators.erase(right.generators.begin(), right.generators.begin() + 3);
  right.group_dim = 3;
  right.group_rank = 1;

  for (const auto& sub : {left, right}) {
    const auto f = frame_at(sub, p);
    CHECK(f.vertical_dim == 3);
    const Vec u = horizontal_part(f, w1), v = horizontal_part(f, w2);
    CHECK(std::abs(u.norm() - 1.0) < 1e-12);  // already horizontal
    CHECK(a_tensor(sub, f, u, v).norm() < 1e-10);
  }
}

TEST_CASE("plane_curvature agrees with the weighted projective line") {
  for (auto [a, b] :
       {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    const auto act = u1_weights({a, b});
    const auto params = make_wcp1(a, b);
    for (int i = 0; i < 25; ++i) {
      const double r = 0.1 + i * (1.4 - 0.1) / 24.0;
      const auto f = frame_at(act, wcp1_point(r, 0.3 + 0.1 * i));
      const auto pc =
          plane_curvature(act, f, f.horizontal.col(0), f.horizontal.col(1));
      CHECK(std::abs(pc.value - wcp1_K(params, r)) < 1e-8);
    }
  }
}

TEST_CASE("plane_curvature agrees with the closed form on (i_R^h, j_R^h)") {
  const auto su2 = su2_sym3_dual();
  const auto right = sp1_right_h2();
  const double t = 0.3;
  const Vec p = su2_geodesic(t);
  const auto f = frame_at(su2, p);
  const Vec irh = horizontal_part(f, right.generators[0] * p);
  const Vec jrh = horizontal_part(f, right.generators[1] * p);
  const auto pc = plane_curvature(su2, f, irh, jrh);
  CHECK(std::abs(pc.value - su2_K_ij(t)) < 1e-8);
}

TEST_CASE("plane_curvature rejects a degenerate plane") {
  const auto hopf = u1_weights({1, 1});
  Vec p = Vec::Zero(4);
  p[0] = 1.0;
  const auto f = frame_at(hopf, p);
  const Vec u = f.horizontal.col(0);
  CHECK_THROWS_AS((void)plane_curvature(hopf, f, u, (2.0 * u).eval()),
                  std::invalid_argument);
}

TEST_CASE("plane_curvature is equivariant under the flow of a generator") {
  const auto act = su2_sym3_dual();
  const Vec p = su2_geodesic(0.22);
  const auto f = frame_at(act, p);
  const Vec u = f.horizontal.col(0), v = f.horizontal.col(2);
  const double k0 = plane_curvature(act, f, u, v).value;
  for (double s : {-1.0, -0.3, 0.4, 1.0}) {
    const Mat g = (s * act.generators[1]).exp();
    const auto fg = frame_at(act, (g * p).eval());
    const double ks = plane_curvature(act, fg, g * u, g * v).value;
    CHECK(std::abs(ks - k0) < 1e-8);
  }
}

TEST_CASE("orbit_dim examples") {
  const auto hopf = u1_weights({1, 1});
  for (const auto& p : sample_sphere(4, 4, 17)) CHECK(orbit_dim(hopf, p) == 1);

  const auto so3 = so3_sym6_real();
  Vec p7 = Vec::Zero(7);
  p7[6] = 1.0;
  CHECK(orbit_dim(so3, p7) == 2);

  const auto h3h = sp1sp1_h3h();
  for (const auto& p : sample_sphere(12, 3, 33)) CHECK(orbit_dim(h3h, p) == 6);
}

TEST_CASE("kappa_scan on the Hopf action") {
  const auto rep = kappa_scan(u1_weights({1, 1}), 100, 10, 0);
  REQUIRE_FALSE(rep.empty);
  CHECK(std::abs(rep.min_value - 4.0) < 1e-9);
  CHECK(std::abs(rep.max_value - 4.0) < 1e-9);
}

TEST_CASE("kappa_scan on u1(2,1) approaches the infimum 1.75") {
  const auto rep = kappa_scan(u1_weights({2, 1}), 2000, 20, 1);
  REQUIRE_FALSE(rep.empty);
  CHECK(rep.min_value >= 1.75);
  CHECK(rep.min_value <= 1.80);
}

TEST_CASE("kappa_scan on sp1_h_imh lands in the kappa = 7/4 window") {
  const auto rep = kappa_scan(sp1_h_imh(), 2000, 20, 1);
  REQUIRE_FALSE(rep.empty);
  CHECK(rep.min_value >= 1.75);
  CHECK(rep.min_value <= 1.85);
}

TEST_CASE("kappa_scan reports an empty scan when no plane exists") {
  // the circle on S^1 leaves no horizontal plane to sample
  const auto rep = kappa_scan(u1_weights({1}), 10, 2, 0);
  CHECK(rep.empty);
  CHECK(rep.plane_count == 0);
}

TEST_CASE("kappa_scan determinism") {
  const auto a = kappa_scan(u1_weights({2, 1}), 50, 5, 42);
  const auto b = kappa_scan(u1_weights({2, 1}), 50, 5, 42);
  REQUIRE(a.samples.size() == b.samples.size());
  CHECK(a.min_value == b.min_value);
  for (size_t i = 0; i < a.samples.size(); ++i)
    CHECK(a.samples[i].curvature == b.samples[i].curvature);
  CHECK(scan_csv(a) == scan_csv(b));
}

TEST_CASE("kappa_scan positivity across actions") {
  for (const auto& act : {u1_weights({3, 2}), su2_sym3_dual(), sp1_h_imh(),
                          u2_c4(), spm_u1(1, 1, 0)}) {
    const auto rep = kappa_scan(act, 150, 6, 2);
    REQUIRE_FALSE(rep.empty);
    CHECK(rep.min_value >= 1.0 - 1e-9);
  }
}

TEST_CASE("is_totally_real") {
  // the S^11 plane (w1, w2) under the quaternionic structures
  const auto [ji, jj] = sym5_quaternionic_structure();
  Vec w1 = Vec::Zero(12);
  w1[4] = 1.0;
  Vec w2 = Vec::Zero(12);
  w2[8] = 1.0;
  CHECK(is_totally_real(w1, w2, ji).totally_real);
  CHECK(is_totally_real(w1, w2, jj).totally_real);

  // (u, J u) is a complex line, never totally real
  CHECK_FALSE(is_totally_real(w1, (ji.J * w1).eval(), ji).totally_real);

  // standard structure on R^4 with the obvious real form
  ComplexStructure std4{Mat::Zero(4, 4)};
  std4.J(0, 1) = -1;
  std4.J(1, 0) = 1;
  std4.J(2, 3) = -1;
  std4.J(3, 2) = 1;
  Vec u = Vec::Zero(4), v = Vec::Zero(4);
  u[0] = 1.0;
  v[2] = 1.0;
  CHECK(is_totally_real(u, v, std4).totally_real);
}

TEST_CASE("scan CSV has 17 significant digits and a header") {
  const auto rep = kappa_scan(u1_weights({1, 1}), 5, 2, 0);
  const auto csv = scan_csv(rep);
  CHECK(csv.find("sample_index,p0,p1,p2,p3,curvature") == 0);
  CHECK(csv.find("3.9999999") != std::string::npos);
}
