#include "orbcurv/actions.hpp"
#include "orbcurv/closedform.hpp"
#include "orbcurv/eliminator.hpp"
#include "orbcurv/oneill.hpp"
#include "orbcurv/thorpe.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace orbcurv;
constexpr double kPi = std::numbers::pi;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + out_path);
  os << text;
}

SphereAction action_by_name(const std::string& name, int a, int b, int m,
                            int r, int s) {
  if (name == "hopf") return u1_weights({1, 1});
  if (name == "u1" || name == "wcp1") return u1_weights({a, b});
  if (name == "su2-sym3" || name == "su2-h2") return su2_sym3_dual();
  if (name == "sp1-right") return sp1_right_h2();
  if (name == "u2-c4") return u2_c4();
  if (name == "sp1-h-imh" || name == "c2r3") return sp1_h_imh();
  if (name == "so3-sym6") return so3_sym6_real();
  if (name == "sp1sp1-h3h") return sp1sp1_h3h();
  if (name == "spm-u1") return spm_u1(m, r, s);
  throw CLI::ValidationError("--action",
                             "unknown action '" + name +
                                 "' (try: hopf, u1, su2-sym3, sp1-right, "
                                 "u2-c4, sp1-h-imh, so3-sym6, sp1sp1-h3h, "
                                 "spm-u1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit-space curvature toolkit"};
  app.require_subcommand(1);

  std::string action_name = "hopf", out_path, format = "csv",
              catalog_path;
  int wa = 2, wb = 1, pm = 1, pr = 1, ps = 0;
  int grid = 500, points = 2000, planes = 20;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  app.add_option("--action", action_name, "action selector");
  app.add_option("--a", wa, "first circle weight");
  app.add_option("--b", wb, "second circle weight");
  app.add_option("--m", pm, "Sp(m) size");
  app.add_option("--r", pr, "first U(1) weight");
  app.add_option("--s", ps, "second U(1) weight");
  app.add_option("--grid", grid, "grid size");
  app.add_option("--points", points, "sample points");
  app.add_option("--planes", planes, "planes per point");
  app.add_option("--seed", seed, "sampler seed");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", tol, "certificate tolerance");

  auto* scan = app.add_subcommand("kappa-scan",
                                  "scan the curvature infimum of a quotient");
  auto* wcp1 = app.add_subcommand("wcp1", "weighted projective line K(r)");
  auto* c2r3 = app.add_subcommand("c2r3", "warped-product curvature table");
  auto* su2h2 = app.add_subcommand("su2-h2", "frame functions and K(i^j)");
  auto* audit = app.add_subcommand("thorpe-audit",
                                   "curvature-one family certificate");
  auto* fkij = app.add_subcommand("figure-kij", "K(i_R^h ^ j_R^h) curve data");
  auto* fca = app.add_subcommand("figure-c-over-alpha",
                                 "C_i/alpha_i panel data");
  auto* elim = app.add_subcommand("eliminate", "run the candidate catalog");
  elim->add_option("--catalog", catalog_path, "candidate JSON file");
  auto* cata = app.add_subcommand("catalog", "built-in actions and cases");
  auto* vali = app.add_subcommand("validate", "action invariant checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) {
      const auto act = action_by_name(action_name, wa, wb, pm, pr, ps);
      const auto rep = kappa_scan(act, points, planes, seed);
      if (rep.empty) {
        std::cerr << "empty scan: no regular points found\n";
        return 1;
      }
      if (format == "json") {
        nlohmann::json j;
        j["action"] = act.name;
        j["min"] = rep.min_value;
        j["max"] = rep.max_value;
        j["principal_vertical_dim"] = rep.principal_vertical_dim;
        j["regular_points"] = rep.regular_points;
        j["planes"] = rep.plane_count;
        j["histogram"] = rep.histogram;
        j["seed"] = seed;
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit(scan_csv(rep), out_path);
      }
      std::cerr << act.name << ": min " << fmt17(rep.min_value) << ", max "
                << fmt17(rep.max_value) << " over " << rep.plane_count
                << " planes\n";
      return rep.min_value >= 1.0 - 1e-9 ? 0 : 1;
    }

    if (wcp1->parsed()) {
      const auto params = make_wcp1(wa, wb);
      std::ostringstream os;
      os << "r,K\n";
      for (int i = 0; i < grid; ++i) {
        const double r = (i + 0.5) * (kPi / 2) / grid;
        os << fmt17(r) << ',' << fmt17(wcp1_K(params, r)) << '\n';
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (c2r3->parsed()) {
      std::ostringstream os;
      os << "r,f,fp,fpp,radial,spherical\n";
      for (int i = 0; i < grid; ++i) {
        const double r = (i + 0.5) * (kPi / 2) / grid;
        const auto w = c2r3_f(r);
        os << fmt17(r) << ',' << fmt17(w.f) << ',' << fmt17(w.fp) << ','
           << fmt17(w.fpp) << ',' << fmt17(c2r3_radial_curvature(r)) << ','
           << fmt17(c2r3_spherical_curvature(r)) << '\n';
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (su2h2->parsed()) {
      std::ostringstream os;
      os << "t,i0,j0,k0,I,J,K,K_ij\n";
      for (int i = 0; i < grid; ++i) {
        const double t = 1e-4 + (i + 0.5) * (kPi / 6 - 2e-4) / grid;
        const auto f = su2_frame(t);
        os << fmt17(t) << ',' << fmt17(f.i0) << ',' << fmt17(f.j0) << ','
           << fmt17(f.k0) << ',' << fmt17(f.I) << ',' << fmt17(f.J) << ','
           << fmt17(f.K) << ',' << fmt17(su2_K_ij(t)) << '\n';
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (audit->parsed()) {
      const auto cert = boundedness_certificate(200, 64);
      emit(certificate_json(cert) + "\n", out_path);
      std::cerr << cert.message << '\n';
      return cert.passed && cert.delta > tol ? 0 : 1;
    }

    if (fkij->parsed()) {
      std::ostringstream os;
      os << "t,K_ij\n";
      for (int i = 0; i < grid; ++i) {
        const double t = (i + 0.5) * (kPi / 6) / grid;
        os << fmt17(t) << ',' << fmt17(su2_K_ij(t)) << '\n';
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (fca->parsed()) {
      std::ostringstream os;
      os << "t,C1_over_alpha1,C2_over_alpha2,C3_over_alpha3\n";
      for (int i = 0; i < grid; ++i) {
        const double t = 1e-4 + (i + 0.5) * (kPi / 6 - 2e-4) / grid;
        os << fmt17(t) << ',' << fmt17(eq54_lhs(t)) << ','
           << fmt17(eq54_lhs(t + kPi / 3)) << ','
           << fmt17(eq54_lhs(t + 2 * kPi / 3)) << '\n';
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (elim->parsed()) {
      std::vector<CatalogEntry> entries;
      if (catalog_path.empty()) {
        entries = builtin_catalog();
      } else {
        std::ifstream is(catalog_path);
        if (!is) {
          std::cerr << "cannot read catalog file " << catalog_path << '\n';
          return 2;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        entries = parse_catalog_json(buf.str());
      }
      const auto rows = run_catalog(entries);
      emit(format == "json" ? catalog_rows_json(rows) + "\n"
                            : catalog_rows_csv(rows),
           out_path);
      for (const auto& r : rows)
        if (!r.verdict.self_check()) {
          std::cerr << "verdict self-check failed for "
                    << r.entry.candidate.name << '\n';
          return 1;
        }
      std::cerr << rows.size() << " candidates, "
                << rows.size() - survivors(rows).size() << " eliminated\n";
      return 0;
    }

    if (cata->parsed()) {
      std::ostringstream os;
      os << "[\n";
      bool first = true;
      for (const auto& act :
           {u1_weights({1, 1}), u1_weights({wa, wb}), su2_sym3_dual(),
            sp1_right_h2(), u2_c4(), sp1_h_imh(), so3_sym6_real(),
            sp1sp1_h3h(), spm_u1(pm, pr == ps ? pr + 1 : pr, ps)}) {
        os << (first ? "  " : ",\n  ") << catalog_json(act);
        first = false;
      }
      os << "\n]\n";
      nlohmann::json cases = nlohmann::json::array();
      for (const auto& tc : theorem_catalog())
        cases.push_back({{"case", tc.id},
                         {"description", tc.description},
                         {"kappa", tc.kappa},
                         {"certificate", tc.certificate}});
      os << cases.dump(2) << "\n";
      emit(os.str(), out_path);
      return 0;
    }

    if (vali->parsed()) {
      const auto act = action_by_name(action_name, wa, wb, pm, pr, ps);
      const auto rep = validate(act);
      nlohmann::json j;
      j["action"] = act.name;
      j["passed"] = rep.passed;
      j["max_antisymmetry"] = rep.max_antisymmetry;
      j["max_bracket_residual"] = rep.max_bracket_residual;
      j["message"] = rep.message;
      emit(j.dump(2) + "\n", out_path);
      return rep.passed ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
