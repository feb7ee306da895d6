#include "blfilt/verify.hpp"

#include <algorithm>
#include <numeric>

namespace blfilt {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

struct Tally {
  EquivalenceEntry entry;
  void check(bool equal, const FuzzySet& f, const std::string& detail) {
    ++entry.instances;
    if (equal) return;
    ++entry.failures;
    if (entry.counterexamples.size() < kMaxCounterexamples)
      entry.counterexamples.push_back(f.describe() + " [" + detail + "]");
  }
};

EquivalenceReport finish(std::vector<Tally> tallies) {
  EquivalenceReport report;
  for (Tally& t : tallies) report.entries.push_back(std::move(t.entry));
  report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                [](const EquivalenceEntry& e) { return e.pass(); });
  return report;
}

// Smallest denominator whose multiples hit every breakpoint and every gap
// between breakpoints of a grid-valued fuzzy set: twice lcm(d, 2).
int dense_denominator(int d) {
  int base = std::lcm(d, 2);
  return 2 * base;
}

const std::vector<Thresholds>& battery() {
  static const std::vector<Thresholds> pairs = {
      {UnitRational::zero(), UnitRational::one()},
      {UnitRational::zero(), UnitRational::half()},
      {UnitRational::half(), UnitRational::one()},
      {UnitRational(2, 5), UnitRational(3, 5)},
      {UnitRational(3, 10), UnitRational(9, 10)},
  };
  return pairs;
}

} // namespace

EquivalenceReport verify_equivalences(const FiniteBLAlgebra& alg, const GridSpec& grid) {
  static const FilterKind kinds[] = {FilterKind::Plain, FilterKind::Implicative,
                                     FilterKind::PositiveImplicative, FilterKind::Fantastic};

  std::vector<Tally> tallies(5);
  tallies[0].entry.id = "threshold_iff_level";
  tallies[1].entry.id = "threshold_iff_profile";
  tallies[2].entry.id = "overline_point_iff_inequalities";
  tallies[3].entry.id = "eqvq_point_iff_level";
  tallies[4].entry.id = "point_grid_reduction";

  const int dense = dense_denominator(grid.denominator);

  for_each_grid_fuzzy_set(alg, grid, [&](const FuzzySet& f) {
    for (FilterKind kind : kinds) {
      IntervalSet profile = threshold_profile(f, kind);
      for (const Thresholds& t : battery()) {
        bool ineq = threshold_check(f, t, kind);
        bool level = level_form_check(f, t.alpha, t.beta, kind);
        bool prof = profile.contains({t.alpha, t.beta});
        std::string detail = std::string(kind_token(kind)) + " (" + t.alpha.str() + "," +
                             t.beta.str() + "]";
        tallies[0].check(ineq == level, f, detail);
        tallies[1].check(ineq == prof, f, detail);
      }
    }

    bool over_point = point_form_check(f, VariantKind::Overline);
    bool over_ineq =
        threshold_check(f, variant_thresholds(VariantKind::Overline), FilterKind::Plain);
    tallies[2].check(over_point == over_ineq, f, "plain (1/2,1]");

    bool eqvq_point = point_form_check(f, VariantKind::EqVq);
    bool eqvq_level =
        level_form_check(f, UnitRational::zero(), UnitRational::half(), FilterKind::Plain);
    tallies[3].check(eqvq_point == eqvq_level, f, "plain (0,1/2]");

    bool over_dense = point_form_check_dense(f, VariantKind::Overline, dense);
    bool eqvq_dense = point_form_check_dense(f, VariantKind::EqVq, dense);
    tallies[4].check(over_point == over_dense, f, "overline dense 1/" + std::to_string(dense));
    tallies[4].check(eqvq_point == eqvq_dense, f, "eq_vq dense 1/" + std::to_string(dense));
  });

  return finish(std::move(tallies));
}

EquivalenceReport verify_implicative_decomposition(const FiniteBLAlgebra& alg,
                                                   const GridSpec& grid) {
  std::vector<Tally> tallies(1);
  tallies[0].entry.id = "overline_implicative_iff_pi_and_fantastic";

  const Thresholds over = variant_thresholds(VariantKind::Overline);
  for_each_grid_fuzzy_set(alg, grid, [&](const FuzzySet& f) {
    bool impl = threshold_check(f, over, FilterKind::Implicative);
    bool pos = threshold_check(f, over, FilterKind::PositiveImplicative);
    bool fant = threshold_check(f, over, FilterKind::Fantastic);
    tallies[0].check(impl == (pos && fant), f, "overline");
  });

  EquivalenceReport report = finish(std::move(tallies));

  // Crisp counterpart over all nonempty subsets.
  FilterTheoremReport crisp = check_filter_theorems(alg);
  const std::uint64_t subsets = (1ull << alg.size()) - 1;
  for (const FilterTheoremEntry& e : crisp.entries) {
    EquivalenceEntry entry;
    entry.id = e.id;
    entry.instances = subsets;
    entry.failures = e.pass ? 0 : 1;
    if (e.counterexample) entry.counterexamples.push_back(subset_str(alg, *e.counterexample));
    report.entries.push_back(std::move(entry));
  }
  report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                [](const EquivalenceEntry& e) { return e.failures == 0; });
  return report;
}

} // namespace blfilt
