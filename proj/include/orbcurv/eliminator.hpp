#pragma once

#include <optional>
#include <string>
#include <vector>

namespace orbcurv {

enum class Family { Real, Complex, Quaternionic, Other };

// A representation descriptor with the integers the elimination rules need.
// For tensor families (Complex/Quaternionic), g and k describe the simple
// factor G' of the paper's case analysis.
struct Candidate {
  std::string name;
  int g = 0;         // dim G (or G')
  int k = 0;         // rank G (or G')
  int n = 0;         // sphere dimension, V = R^{n+1}
  int m = 0;         // dim of the orbit space
  std::optional<int> min_orbit_dim;       // smallest orbit dimension, if known
  std::vector<int> orbit_dims;            // singular orbit dims met by a
                                          // regular horizontal geodesic
  Family family = Family::Other;
  bool polar = false;
  std::string tags;
};

// Instantiated inequality plus the boolean it evaluated to when recorded;
// re-evaluation must reproduce it (self-certifying verdicts).
struct Inequality {
  std::string description;
  double lhs = 0.0, rhs = 0.0;
  std::string relation;  // "<=", "<", ">=", ">", "=="
  bool expected = true;
  bool evaluate() const;
  bool consistent() const { return evaluate() == expected; }
};

Inequality make_inequality(std::string description, double lhs,
                           std::string relation, double rhs);

struct Verdict {
  bool eliminated = false;
  std::string rule;
  std::vector<Inequality> arithmetic;
  std::string note;
  bool self_check() const;  // every stored inequality re-evaluates correctly
};

// Lemma: the smallest orbit dimension is at most g - k + 1.
Verdict check_minorbit(const Candidate& c);

// Index lemma: highly curved forces l >= m - 1 and 2g + 2 - k >= n.
Verdict check_mainlem(const Candidate& c);

// Improved index lemma: a regular horizontal geodesic of length < pi meeting
// singular orbits of dimensions l_1..l_s forces
// g >= (m - 1) + sum (g - l_i); with s = 2 this reads l_1 + l_2 >= n - 1.
Verdict check_improvedlem(const Candidate& c);

// Dimension bounds: real (bd1) dimV <= 2g + 3 - k, (bd2) dimV <= 2g + 2;
// complex dimV <= 2g' + 4 - k' (with the feasibility floor dimV >= g' + 7);
// quaternionic dimV <= 2g' + 8 - k'.
Verdict check_bounds(const Candidate& c, Family family);

// Projective-codimension tests: an orbit of codimension >= 8 on HP^{s-1}
// (equivalently >= 9 for the lifted action) or >= 4 on CP^{s-1} forces
// kappa = 1.
Verdict check_codim(const Candidate& c, int projective_codim, Family family);

// Theorem catalog: the five highly-curved cases with their kappa data.
struct TheoremCase {
  std::string id;  // "i".."v"
  std::string description;
  std::string kappa;        // closed form or catalog value
  std::string certificate;  // which subsystem certifies it
};

std::vector<TheoremCase> theorem_catalog();
std::optional<TheoremCase> theorem_lookup(const std::string& query);

// The built-in candidate list covering the paper's elimination run.
struct CatalogEntry {
  Candidate candidate;
  // how this entry is decided: "minorbit", "mainlem", "improvedlem",
  // "bounds", "codim", "sp2-tensor-bound", "witness:<tag>", "polar",
  // "enlargement:<target>", "folding:<note>", "toric:<note>", "fact:<note>",
  // "survivor:<case>"
  std::string disposition;
  int codim = -1;  // for codim entries
};

std::vector<CatalogEntry> builtin_catalog();

struct CatalogRow {
  CatalogEntry entry;
  Verdict verdict;
};

std::vector<CatalogRow> run_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogRow> run_builtin_catalog();

// Names of the entries a catalog run did not eliminate.
std::vector<std::string> survivors(const std::vector<CatalogRow>& rows);

std::string catalog_rows_csv(const std::vector<CatalogRow>& rows);
std::string catalog_rows_json(const std::vector<CatalogRow>& rows);

// Parse candidates from a JSON array of CatalogEntry-shaped objects.
std::vector<CatalogEntry> parse_catalog_json(const std::string& text);

}  // namespace orbcurv
