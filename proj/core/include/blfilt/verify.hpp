#pragma once

#include "blfilt/taxonomy.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace blfilt {

// Membership grid: every map from the carrier into {0, 1/d, ..., d/d}.
struct GridSpec {
  int denominator = 2;
};

// Streams all (d+1)^n fuzzy sets in lexicographic order over the declared
// element order; the first one is constant 0. Throws std::invalid_argument
// when the denominator is < 1.
void for_each_grid_fuzzy_set(const FiniteBLAlgebra& alg, const GridSpec& grid,
                             const std::function<void(const FuzzySet&)>& fn);

std::uint64_t grid_size(const FiniteBLAlgebra& alg, const GridSpec& grid);

struct EquivalenceEntry {
  std::string id;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples; // first few, for reports
  bool pass() const { return failures == 0; }
};

struct EquivalenceReport {
  bool all_pass = false;
  std::vector<EquivalenceEntry> entries;
};

// Exhaustive cross-checks over the whole membership grid:
//   threshold_iff_level            inequality route == level route, for the
//                                  named variants plus (2/5,3/5] and (3/10,9/10]
//   threshold_iff_profile          inequality route == profile containment
//   overline_point_iff_inequalities  point route == (1/2,1] inequalities (plain)
//   eqvq_point_iff_level           point route == (0,1/2] level route (plain)
//   point_grid_reduction           breakpoint grid == exhaustive dense grid
EquivalenceReport verify_equivalences(const FiniteBLAlgebra& alg, const GridSpec& grid);

// The decomposition of the implicative kind over the (1/2,1] thresholds:
// implicative == positive implicative && fantastic, over the whole grid,
// plus the crisp counterpart via enumerate_filters.
EquivalenceReport verify_implicative_decomposition(const FiniteBLAlgebra& alg,
                                                   const GridSpec& grid);

// All algebras passing validate_bl on carriers of the given size, one
// representative per isomorphism class, deterministically ordered.
// Supported sizes: 2 through 6.
std::vector<FiniteBLAlgebra> generate_bl_algebras(int n);

// Reference enumerator: no search-space pruning beyond the defining axioms,
// written independently of the optimized one. Supported sizes: 2 through 4.
std::vector<FiniteBLAlgebra> generate_bl_algebras_naive(int n);

// Canonical table encoding under relabelings that fix bottom and top;
// equal encodings == isomorphic algebras.
std::vector<int> canonical_tables(const FiniteBLAlgebra& alg);
bool isomorphic(const FiniteBLAlgebra& a, const FiniteBLAlgebra& b);

// Straight-line evaluation of the threshold inequalities from raw tables and
// membership values. Kept free of the taxonomy module's code on purpose: it
// is the second opinion the audit compares against.
bool oracle_threshold_filter(const std::vector<std::vector<int>>& odot,
                             const std::vector<std::vector<int>>& imp, int bottom, int top,
                             const std::vector<BigRat>& membership, const BigRat& alpha,
                             const BigRat& beta, FilterKind kind);

struct AuditClaim {
  std::string text;     // claim line as written in the corpus file
  Thresholds thresholds;
  FilterKind kind = FilterKind::Plain;
  bool claimed = false;
  bool machine = false;
  bool oracle = false;
  bool tool_oracle_agree = false;
  bool claim_agree = false;
  std::optional<std::string> witness; // rendered; set when the machine verdict is false
};

struct AuditFinding {
  std::string case_id;
  std::string algebra_name;
  std::string fuzzyset_name;
  std::vector<AuditClaim> claims;
  bool all_claims_agree = false;
};

struct AuditReport {
  std::vector<AuditFinding> findings;      // sorted by case id
  std::vector<std::string> file_errors;    // per-file parse or validation failures
  std::uint64_t disagreements = 0;         // machine verdict != recorded claim
  std::uint64_t oracle_mismatches = 0;     // machine verdict != oracle verdict
};

// Scans a directory for *.audit sidecars:
//   case <id>
//   algebra <file>
//   fuzzyset <file>
//   claim <variant> <kind> <true|false>
//   claim thresholds <alpha> <beta> <kind> <true|false>
//   end
// Paths are resolved relative to the sidecar. Every claim is evaluated twice,
// by the taxonomy route and by the independent oracle.
AuditReport audit_examples(const std::filesystem::path& dir);

} // namespace blfilt
