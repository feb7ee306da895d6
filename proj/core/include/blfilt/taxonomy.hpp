#pragma once

#include "blfilt/crisp.hpp"
#include "blfilt/fuzzy.hpp"
#include "blfilt/intervals.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace blfilt {

// Named threshold pairs: Ordinary uses (0,1], EqVq (0,1/2], Overline (1/2,1].
enum class VariantKind { Ordinary, EqVq, Overline };

const char* variant_token(VariantKind v); // "ordinary", "eq_vq", "overline"
std::optional<VariantKind> parse_variant_token(std::string_view token);

struct Thresholds {
  UnitRational alpha;
  UnitRational beta;
};

// A lower threshold of 0 is admitted; it realizes the ordinary conditions.
Thresholds variant_thresholds(VariantKind v);

// First failing instance of one of the defining inequalities.
// law is "product", "monotone", or the kind token of the triple condition.
struct Witness {
  std::string law;
  std::vector<int> tuple;
  std::string str(const FiniteBLAlgebra& alg) const;
};

// Inequality route. Conditions, for all elements:
//   max{F(x*y), alpha} >= min{F(x), F(y), beta}
//   x <= y  implies  max{F(y), alpha} >= min{F(x), beta}
// plus one triple condition per stronger kind, for all x, y, z:
//   implicative:           max{F(x->z), a} >= min{F(x->(z'->y)), F(y->z), b}
//   positive implicative:  max{F(x->z), a} >= min{F(x->(y->z)), F(x->y), b}
//   fantastic:             max{F(((x->y)->y)->x), a} >= min{F(z->(y->x)), F(z), b}
// Requires 0 <= alpha < beta <= 1; throws std::invalid_argument otherwise.
std::optional<Witness> threshold_violation(const FuzzySet& f, const Thresholds& t,
                                           FilterKind kind);
bool threshold_check(const FuzzySet& f, const Thresholds& t, FilterKind kind);

// Fuzzy-point route for the plain conditions of the EqVq and Overline
// variants. Quantification over (0,1] is reduced to the finite breakpoint
// grid built from the image of F, the complements of the image, 1/2 and 1.
// Throws std::invalid_argument for Ordinary.
bool point_form_check(const FuzzySet& f, VariantKind variant);

// Same predicates evaluated over every multiple of 1/denominator in (0,1].
// Exists to cross-check the breakpoint grid reduction; a denominator that is
// a multiple of 2 and of every membership denominator makes it exhaustive.
bool point_form_check_dense(const FuzzySet& f, VariantKind variant, int denominator);

// Level route: every level set at t in (lo, hi] is empty or a filter of the
// requested kind. Evaluated on one representative per constant piece.
// Requires 0 <= lo < hi <= 1.
bool level_form_check(const FuzzySet& f, const UnitRational& lo, const UnitRational& hi,
                      FilterKind kind);

// All t in (0,1] whose level set is empty or a filter of the kind,
// as a normalized union of half-open intervals.
IntervalSet threshold_profile(const FuzzySet& f, FilterKind kind);

struct CustomVerdict {
  Thresholds thresholds;
  std::array<bool, 4> verdict{};                 // indexed by FilterKind
  std::array<std::optional<Witness>, 4> witness;
};

struct TaxonomyRecord {
  // verdict[variant][kind], variants in enum order, kinds in enum order.
  std::array<std::array<bool, 4>, 3> verdict{};
  std::array<std::array<std::optional<Witness>, 4>, 3> witness;
  std::array<IntervalSet, 4> profile;
  std::vector<CustomVerdict> custom;
};

// Runs the inequality route for the three named variants (plus any extra
// threshold pairs), cross-fills every verdict through the level route, and
// throws std::logic_error if the two routes ever disagree.
TaxonomyRecord classify(const FuzzySet& f, const std::vector<Thresholds>& extra = {});

} // namespace blfilt
