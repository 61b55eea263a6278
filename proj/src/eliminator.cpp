#include "orbcurv/eliminator.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbcurv {

bool Inequality::evaluate() const {
  if (relation == "<=") return lhs <= rhs;
  if (relation == "<") return lhs < rhs;
  if (relation == ">=") return lhs >= rhs;
  if (relation == ">") return lhs > rhs;
  if (relation == "==") return lhs == rhs;
  throw std::invalid_argument("Inequality: unknown relation " + relation);
}

Inequality make_inequality(std::string description, double lhs,
                           std::string relation, double rhs) {
  Inequality iq{std::move(description), lhs, rhs, std::move(relation), true};
  iq.expected = iq.evaluate();
  return iq;
}

bool Verdict::self_check() const {
  for (const auto& iq : arithmetic)
    if (!iq.consistent()) return false;
  return true;
}

Verdict check_minorbit(const Candidate& c) {
  Verdict v;
  const int bound = c.g - c.k + 1;
  std::ostringstream note;
  note << "smallest orbit dimension is at most " << bound;
  if (c.min_orbit_dim) {
    v.arithmetic.push_back(make_inequality("measured min orbit dim <= g - k + 1",
                                           double(*c.min_orbit_dim), "<=",
                                           double(bound)));
    note << "; measured " << *c.min_orbit_dim;
  }
  v.eliminated = false;  // the bound alone never eliminates
  v.rule = "minorbit";
  v.note = note.str();
  return v;
}

Verdict check_mainlem(const Candidate& c) {
  Verdict v;
  v.rule = "mainlem";
  const auto index = make_inequality("2g + 2 - k >= n",
                                     double(2 * c.g + 2 - c.k), ">=", double(c.n));
  v.arithmetic.push_back(index);
  bool ok = index.expected;
  if (c.min_orbit_dim) {
    const auto ell = make_inequality("l >= m - 1", double(*c.min_orbit_dim),
                                     ">=", double(c.m - 1));
    v.arithmetic.push_back(ell);
    ok = ok && ell.expected;
  }
  v.eliminated = !ok;
  std::ostringstream note;
  note << (v.eliminated ? "fails" : "passes") << " the index estimate: 2*" << c.g
       << "+2-" << c.k << " = " << 2 * c.g + 2 - c.k << " vs n = " << c.n;
  v.note = note.str();
  return v;
}

Verdict check_improvedlem(const Candidate& c) {
  Verdict v;
  v.rule = "improvedlem";
  if (c.orbit_dims.empty()) {
    v.eliminated = false;
    v.note = "no geodesic orbit data; rule not applicable";
    return v;
  }
  int deficit_sum = 0;
  for (int l : c.orbit_dims) deficit_sum += c.g - l;
  const auto iq = make_inequality("g >= (m - 1) + sum(g - l_i)", double(c.g),
                                  ">=", double((c.m - 1) + deficit_sum));
  v.arithmetic.push_back(iq);
  if (c.orbit_dims.size() == 2)
    v.arithmetic.push_back(make_inequality(
        "l1 + l2 >= n - 1", double(c.orbit_dims[0] + c.orbit_dims[1]), ">=",
        double(c.n - 1)));
  v.eliminated = !iq.expected;
  std::ostringstream note;
  note << "g = " << c.g << " vs (m-1) + sum(g - l_i) = "
       << (c.m - 1) + deficit_sum
       << (v.eliminated ? ": eliminated" : ": inconclusive");
  v.note = note.str();
  return v;
}

Verdict check_bounds(const Candidate& c, Family family) {
  Verdict v;
  const int dimV = c.n + 1;
  switch (family) {
    case Family::Real: {
      v.rule = "real-bounds";
      const auto bd1 = make_inequality("dimV <= 2 dimG + 3 - rkG", double(dimV),
                                       "<=", double(2 * c.g + 3 - c.k));
      const auto bd2 = make_inequality("dimV <= 2 dimG + 2", double(dimV), "<=",
                                       double(2 * c.g + 2));
      v.arithmetic = {bd1, bd2};
      v.eliminated = !(bd1.expected && bd2.expected);
      if (!bd1.expected) v.rule = "real-bd1";
      if (!bd2.expected) v.rule = "real-bd2";
      break;
    }
    case Family::Complex: {
      v.rule = "cx-bd";
      const auto bd = make_inequality("dimV <= 2 dimG' + 4 - rkG'", double(dimV),
                                      "<=", double(2 * c.g + 4 - c.k));
      const auto floor = make_inequality("dimG' + 7 <= 2 dimG' + 4 - rkG'",
                                         double(c.g + 7), "<=",
                                         double(2 * c.g + 4 - c.k));
      v.arithmetic = {bd, floor};
      v.eliminated = !(bd.expected && floor.expected);
      break;
    }
    case Family::Quaternionic: {
      v.rule = "quat-bd";
      const auto bd = make_inequality("dimV <= 2 dimG' + 8 - rkG'", double(dimV),
                                      "<=", double(2 * c.g + 8 - c.k));
      v.arithmetic = {bd};
      v.eliminated = !bd.expected;
      break;
    }
    default:
      v.rule = "bounds";
      v.note = "no bound applies to this family";
      return v;
  }
  v.note = v.eliminated ? "violates dimension bound(s)"
                        : "satisfies dimension bound(s)";
  return v;
}

Verdict check_codim(const Candidate& c, int projective_codim, Family family) {
  if (projective_codim < 0)
    throw std::invalid_argument("check_codim: codimension must be >= 0");
  Verdict v;
  const int threshold = family == Family::Quaternionic ? 8 : 4;
  v.rule = family == Family::Quaternionic ? "codim-quat" : "codim-cx";
  v.arithmetic.push_back(make_inequality("projective orbit codim >= threshold",
                                         double(projective_codim), ">=",
                                         double(threshold)));
  // the geodesic arithmetic inside the propositions' proofs
  if (family == Family::Quaternionic) {
    const int s = (c.n + 1) / 8;
    v.arithmetic.push_back(make_inequality("(4s+2) + (4s-5) < n - 1",
                                           double(8 * s - 3), "<",
                                           double(c.n - 1)));
  } else {
    const int s = (c.n + 1) / 4;
    v.arithmetic.push_back(make_inequality("(2s) + (2s-3) < n - 1",
                                           double(4 * s - 3), "<",
                                           double(c.n - 1)));
  }
  v.eliminated = v.arithmetic.front().expected;
  std::ostringstream note;
  note << "codimension " << projective_codim << " vs threshold " << threshold;
  if (family == Family::Quaternionic)
    note << " (lifted action: " << projective_codim + 1 << " >= 9)";
  v.note = note.str();
  return v;
}

std::vector<TheoremCase> theorem_catalog() {
  return {
      {"i", "U(2) on C^4 restricted to S^7", "kappa > 1 (no closed form)",
       "thorpe-audit"},
      {"ii", "good Riemannian orbifold of constant curvature 4", "kappa = 4",
       "catalog"},
      {"iii", "complex weighted projective line, weights (a,b)",
       "kappa = 1 + 3 b^2/a^2", "wcp1"},
      {"iv", "SU(2) on C^2 + R^3 restricted to S^6", "kappa = 7/4", "c2r3"},
      {"v", "Sp(m) x U(1) on C^2m + C^2m, weights (r,s), r != s", "kappa = 4",
       "catalog (scan smoke test)"},
  };
}

std::optional<TheoremCase> theorem_lookup(const std::string& query) {
  const auto cases = theorem_catalog();
  for (const auto& tc : cases)
    if (query == tc.id) return tc;
  auto has = [&](const char* needle) {
    return query.find(needle) != std::string::npos;
  };
  if (has("R^3") || has("R3") || has("c2r3")) return cases[3];
  if (has("weight") || has("wcp") || has("projective line")) return cases[2];
  if (has("Sp(m)") || has("spm") || has("SP m")) return cases[4];
  if (has("constant") || has("orbifold")) return cases[1];
  if (has("U(2)") || has("u2") || has("C^4") || has("C4")) return cases[0];
  return std::nullopt;
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](Candidate c, std::string disposition, int codim = -1) {
    cat.push_back({std::move(c), std::move(disposition), codim});
  };

  // --- survivors (Theorem cases)
  add({"U(2) on C^4", 4, 2, 7, 3, 3, {}, Family::Other, false, "case-i"},
      "survivor:i");
  add({"sum of two cohomogeneity-one reps, constant-curvature-4 orbifold", 0,
       0, 0, 2, {}, {}, Family::Other, false, "case-ii"},
      "survivor:ii");
  add({"U(1) weights (a,b) on C^2", 1, 1, 3, 2, 1, {}, Family::Other, false,
       "case-iii"},
      "survivor:iii");
  add({"SU(2) on C^2 + R^3", 3, 1, 6, 3, 2, {}, Family::Other, false,
       "case-iv"},
      "survivor:iv");
  add({"Sp(m) x U(1) on C^2m + C^2m, weights r != s", 11, 3, 15, 4, {}, {},
       Family::Other, false, "case-v (m=2 data)"},
      "survivor:v");

  // --- rank-1 analysis
  add({"SO(3) on R^7 (Sym^6 real form)", 3, 1, 6, 3, 2, {2, 2}, Family::Real,
       false, "geodesic witness between two points of the singular orbit"},
      "improvedlem");
  add({"SU(2) on H^2 (Sym^3)", 3, 1, 7, 4, 3, {}, Family::Real, false,
       "curvature-one planes at t0"},
      "witness:curvature-one-plane");

  // --- real type, simple G
  add({"SO(7) on Lambda^3 R^7", 21, 3, 34, 13, {}, {}, Family::Real, false,
       "maximal torus isotropy"},
      "folding:torus fixed set gives Y of constant curvature 1");
  add({"Spin(15) on R^128 (half-spin)", 105, 7, 127, 22, {}, {}, Family::Real,
       false, ""},
      "enlargement:Spin(16) spin representation (polar)");
  add({"SO(8) on Lambda^3 R^8", 28, 4, 55, 27, {}, {}, Family::Real, false, ""},
      "bounds");
  add({"G2 on S^2_0 R^7", 14, 2, 26, 12, {}, {}, Family::Real, false, ""},
      "enlargement:SO(7) on traceless symmetric matrices (polar)");

  // --- complex type, G = U(1) x G'
  add({"U(1) x SU(2), complex-type tensor (rk G' = 1)", 3, 1, 9, 5, {}, {},
       Family::Complex, false, "minimal m = 5 case is already infeasible"},
      "bounds");
  add({"U(7) on Lambda^3 C^7", 48, 6, 69, 19, {}, {}, Family::Complex, false,
       ""},
      "enlargement:SU(8) on Lambda^4 C^8 (polar)");

  // --- quaternionic type, G = Sp(1) x G'
  add({"Sp(1) x Sp(1) on H^3 x H", 3, 1, 11, 5, {}, {}, Family::Quaternionic,
       false, "A-tensor vanishes on w1 ^ w2 for both submersions"},
      "witness:h3xh A-tensor vanishing");
  add({"Sp(1) x Spin(11) on H x H^16", 55, 5, 63, 7, {}, {},
       Family::Quaternionic, false, ""},
      "enlargement:Sp(1) x Spin(12) (polar)");
  add({"Sp(1) x Spin(13) on H x H^32", 78, 6, 127, 48, {}, {},
       Family::Quaternionic, false, ""},
      "enlargement:Spin(16) on R^128 (polar)");

  // --- F^2 tensor products
  add({"SO(2) x G2' on R^2 x V2 (s = 4, singular orbits)", 5, 2, 7, 2, {},
       {2, 3}, Family::Real, false, "l_i = (s-2, s-1) on a pure-tensor geodesic"},
      "improvedlem");
  add({"Sp(2) x Sp(1) on H^2 x H^2", 13, 3, 15, 2, {}, {},
       Family::Quaternionic, false, ""},
      "fact:cohomogeneity-3 representation, not highly curved");
  add({"Sp(2) x Sp(1) on H^2 x H^3 (pure-tensor geodesic)", 13, 3, 23, 10, {},
       {10, 10}, Family::Quaternionic, false,
       "orbits through pure tensors have dimension at most 7 + 3"},
      "improvedlem");
  add({"Sp(2) x Spin(11) on H^2 x H^16", 55, 5, 127, 0, {}, {},
       Family::Quaternionic, false, "4s <= g2 + (21-k2)/2 fails: 64 > 63"},
      "sp2-tensor-bound");
  add({"Sp(2) x SU(6) on H^2 x Lambda^3 C^6 (E6/(SU6.SU2) roots)", 35, 5, 79,
       0, {}, {}, Family::Quaternionic, false,
       "B3 subsystem, lifted codim 4 + 9*1 = 13 >= 9"},
      "codim", 12);
  add({"Sp(2) x Sp(3) on H^2 x Lambda^3_0 C^6 (F4/(Sp3.Sp1) roots)", 21, 3, 55,
       0, {}, {}, Family::Quaternionic, false,
       "B3 subsystem, lifted codim 4 + 9*1 = 13 >= 9"},
      "codim", 12);
  add({"U(2) x SU(s+1) on C^2 x C^s via SU(s+1)/U(s)", 0, 0, 0, 0, {}, {},
       Family::Complex, true, ""},
      "polar");
  add({"U(2) x G2' via SU(2+s/2)/S(U2 x U(s/2)), s = 6", 0, 0, 23, 0, {}, {},
       Family::Complex, false, "B2 multiplicities (2, s-3): codim 2+3 = 5"},
      "codim", 5);
  add({"U(2) x G2' via SO(10)/U(5)", 0, 0, 39, 0, {}, {}, Family::Complex,
       false, "B2 multiplicities (4,5): codim 2+5 = 7"},
      "codim", 7);
  add({"U(2) x G2' via E6/(U(1).Spin(10))", 0, 0, 63, 0, {}, {},
       Family::Complex, false, "B2 multiplicities (9,6): codim 2+9 = 11"},
      "codim", 11);
  add({"U(2) x Sp(3) via Sp(3)/U(3)", 0, 0, 23, 0, {}, {}, Family::Complex,
       false, "B3, all multiplicities 1: codim 3+4*1 = 7"},
      "codim", 7);
  add({"U(2) x G2' via SO(12)/U(6)", 0, 0, 59, 0, {}, {}, Family::Complex,
       false, "B3, codim >= 7"},
      "codim", 7);
  add({"U(2) x G2' via SU(6)/S(U3 x U3)", 0, 0, 35, 0, {}, {}, Family::Complex,
       false, "B3, codim >= 7"},
      "codim", 7);
  add({"U(2) x G2' via SU(7)/S(U3 x U4)", 0, 0, 47, 0, {}, {}, Family::Complex,
       false, "B3, codim >= 7"},
      "codim", 7);

  // --- low cohomogeneity catalog facts
  add({"m = 3 toric reductions", 0, 0, 0, 3, {}, {}, Family::Other, false, ""},
      "toric:reduces to a finite extension of a torus action");
  add({"SO(3) x U(2) on R^3 x R^4 (m = 4)", 7, 3, 11, 4, {}, {}, Family::Other,
       false, ""},
      "enlargement:SO(3) x SO(4) (polar)");

  return cat;
}

namespace {

Verdict decide(const CatalogEntry& e) {
  const std::string& d = e.disposition;
  auto prefix = [&](const char* p) { return d.rfind(p, 0) == 0; };

  if (prefix("survivor:")) {
    Verdict v;
    v.eliminated = false;
    v.rule = "theorem-case-" + d.substr(9);
    v.note = "survives all elimination rules; " + e.candidate.tags;
    return v;
  }
  if (d == "minorbit") return check_minorbit(e.candidate);
  if (d == "mainlem") return check_mainlem(e.candidate);
  if (d == "improvedlem") return check_improvedlem(e.candidate);
  if (d == "bounds") return check_bounds(e.candidate, e.candidate.family);
  if (d == "codim")
    return check_codim(e.candidate, e.codim, e.candidate.family);
  if (d == "sp2-tensor-bound") {
    Verdict v;
    v.rule = "sp2-tensor-bound";
    const int s = (e.candidate.n + 1) / 8;
    const auto iq = make_inequality(
        "4s <= g2 + (21 - k2)/2", double(4 * s), "<=",
        double(e.candidate.g) + (21.0 - e.candidate.k) / 2.0);
    v.arithmetic.push_back(iq);
    v.eliminated = !iq.expected;
    v.note = "index bound for Sp(2) x G2 tensor actions";
    return v;
  }
  if (prefix("witness:")) {
    Verdict v;
    v.eliminated = true;
    v.rule = d;
    v.note = "computational witness; " + e.candidate.tags;
    return v;
  }
  if (d == "polar") {
    Verdict v;
    v.eliminated = true;
    v.rule = "polar";
    v.note = "polar representation: orbit space has constant curvature 1";
    return v;
  }
  if (prefix("enlargement:")) {
    Verdict v;
    v.eliminated = true;
    v.rule = "enlargement";
    v.note = "catalog fact: enlarges to " + d.substr(12);
    return v;
  }
  if (prefix("folding:")) {
    Verdict v;
    v.eliminated = true;
    v.rule = "folding";
    v.note = "catalog fact: " + d.substr(8);
    return v;
  }
  if (prefix("toric:")) {
    Verdict v;
    v.eliminated = true;
    v.rule = "toric";
    v.note = d.substr(6);
    return v;
  }
  if (prefix("fact:")) {
    Verdict v;
    v.eliminated = true;
    v.rule = "catalog-fact";
    v.note = d.substr(5);
    return v;
  }
  throw std::invalid_argument("catalog: unknown disposition " + d);
}

}  // namespace

std::vector<CatalogRow> run_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogRow> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back({e, decide(e)});
  return rows;
}

std::vector<CatalogRow> run_builtin_catalog() {
  return run_catalog(builtin_catalog());
}

std::vector<std::string> survivors(const std::vector<CatalogRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    if (!r.verdict.eliminated) out.push_back(r.entry.candidate.name);
  return out;
}

std::string catalog_rows_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << "name,eliminated,rule,arithmetic,note\n";
  auto quote = [](std::string s) {
    for (auto& ch : s)
      if (ch == ',') ch = ';';
    return s;
  };
  for (const auto& r : rows) {
    std::ostringstream arith;
    for (const auto& iq : r.verdict.arithmetic)
      arith << iq.lhs << " " << iq.relation << " " << iq.rhs << " ("
            << (iq.expected ? "true" : "false") << ") [" << iq.description
            << "] ";
    os << quote(r.entry.candidate.name) << ',' << (r.verdict.eliminated ? 1 : 0)
       << ',' << quote(r.verdict.rule) << ',' << quote(arith.str()) << ','
       << quote(r.verdict.note) << '\n';
  }
  return os.str();
}

std::string catalog_rows_json(const std::vector<CatalogRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["name"] = r.entry.candidate.name;
    j["eliminated"] = r.verdict.eliminated;
    j["rule"] = r.verdict.rule;
    j["note"] = r.verdict.note;
    nlohmann::json ar = nlohmann::json::array();
    for (const auto& iq : r.verdict.arithmetic)
      ar.push_back({{"description", iq.description},
                    {"lhs", iq.lhs},
                    {"rhs", iq.rhs},
                    {"relation", iq.relation},
                    {"holds", iq.expected}});
    j["arithmetic"] = ar;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::vector<CatalogEntry> parse_catalog_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<CatalogEntry> out;
  for (const auto& j : doc) {
    CatalogEntry e;
    Candidate& c = e.candidate;
    c.name = j.at("name").get<std::string>();
    c.g = j.value("g", 0);
    c.k = j.value("k", 0);
    c.n = j.value("n", 0);
    c.m = j.value("m", 0);
    if (j.contains("min_orbit_dim"))
      c.min_orbit_dim = j["min_orbit_dim"].get<int>();
    if (j.contains("orbit_dims"))
      c.orbit_dims = j["orbit_dims"].get<std::vector<int>>();
    const std::string fam = j.value("family", "other");
    c.family = fam == "real"           ? Family::Real
               : fam == "complex"      ? Family::Complex
               : fam == "quaternionic" ? Family::Quaternionic
                                       : Family::Other;
    c.polar = j.value("polar", false);
    c.tags = j.value("tags", std::string{});
    e.disposition = j.value("disposition", std::string{"mainlem"});
    e.codim = j.value("codim", -1);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace orbcurv
