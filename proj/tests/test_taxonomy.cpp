#include "blfilt/taxonomy.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <string>
#include <vector>

using namespace blfilt;
using testutil::el;
using testutil::load_algebra;
using testutil::load_fuzzy;

namespace {

Interval iv(int nlo, int dlo, int nhi, int dhi) {
  return {UnitRational(nlo, dlo), UnitRational(nhi, dhi)};
}

std::string witness_str(const FuzzySet& f, const Thresholds& t, FilterKind kind) {
  auto w = threshold_violation(f, t, kind);
  return w ? w->str(f.algebra()) : "";
}

const Thresholds kOrdinary = variant_thresholds(VariantKind::Ordinary);
const Thresholds kEqVq = variant_thresholds(VariantKind::EqVq);
const Thresholds kOverline = variant_thresholds(VariantKind::Overline);
const Thresholds kMiddle{UnitRational(2, 5), UnitRational(3, 5)};

} // namespace

TEST_SUITE("interval sets") {

TEST_CASE("pieces normalize sorted and merged") {
  IntervalSet s = IntervalSet::from_pieces({iv(2, 5, 3, 5), iv(0, 1, 1, 5), iv(4, 5, 1, 1)});
  CHECK(s.str() == "(0,1/5] (2/5,3/5] (4/5,1]");
  CHECK(IntervalSet::from_pieces({iv(0, 1, 1, 2), iv(1, 2, 1, 1)}).str() == "(0,1]");
  CHECK(IntervalSet{}.str() == "empty");
  CHECK(IntervalSet{}.empty());
}

TEST_CASE("degenerate or overlapping pieces are rejected") {
  CHECK_THROWS_AS(IntervalSet::from_pieces({iv(1, 2, 1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::from_pieces({iv(0, 1, 1, 2), iv(1, 3, 2, 3)}),
                  std::invalid_argument);
}

TEST_CASE("containment is whole-interval") {
  IntervalSet s = IntervalSet::from_pieces({iv(0, 1, 1, 5), iv(2, 5, 3, 5)});
  CHECK(s.contains(iv(0, 1, 1, 5)));
  CHECK(s.contains(iv(2, 5, 1, 2)));
  CHECK(s.contains(iv(9, 20, 11, 20)));
  CHECK_FALSE(s.contains(iv(1, 5, 2, 5)));   // gap
  CHECK_FALSE(s.contains(iv(1, 2, 7, 10)));  // runs past a piece
  CHECK_FALSE(s.contains(iv(0, 1, 1, 2)));   // spans the gap
}

} // TEST_SUITE

TEST_SUITE("threshold route") {

TEST_CASE("named variants carry their threshold pairs") {
  CHECK(kOrdinary.alpha == UnitRational::zero());
  CHECK(kOrdinary.beta == UnitRational::one());
  CHECK(kEqVq.alpha == UnitRational::zero());
  CHECK(kEqVq.beta == UnitRational::half());
  CHECK(kOverline.alpha == UnitRational::half());
  CHECK(kOverline.beta == UnitRational::one());
}

TEST_CASE("variant tokens round-trip") {
  for (VariantKind v : {VariantKind::Ordinary, VariantKind::EqVq, VariantKind::Overline})
    CHECK(parse_variant_token(variant_token(v)) == v);
  CHECK(parse_variant_token("nope") == std::nullopt);
}

TEST_CASE("two-block chain set passes only above the half line") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);

  CHECK(threshold_check(f, kOverline, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kOrdinary, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kEqVq, FilterKind::Plain));

  CHECK(witness_str(f, kOrdinary, FilterKind::Plain) == "product x=a y=a");
  CHECK(witness_str(f, kEqVq, FilterKind::Plain) == "product x=a y=a");
  CHECK(witness_str(f, kOverline, FilterKind::Plain).empty());
}

TEST_CASE("middle-band thresholds accept the staircase set") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f2.fz", alg);

  CHECK(threshold_check(f, kMiddle, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kOrdinary, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kEqVq, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kOverline, FilterKind::Plain));
  CHECK(witness_str(f, kOverline, FilterKind::Plain) == "monotone x=b y=1");
}

TEST_CASE("order violations defeat the stronger kinds early") {
  FiniteBLAlgebra alg = load_algebra("mv2_mv3.alg");
  FuzzySet f1 = load_fuzzy("mv2_mv3_f1.fz", alg);
  FuzzySet f2 = load_fuzzy("mv2_mv3_f2.fz", alg);
  FuzzySet f3 = load_fuzzy("mv2_mv3_f3.fz", alg);

  CHECK_FALSE(threshold_check(f1, kOverline, FilterKind::Implicative));
  CHECK(witness_str(f1, kOverline, FilterKind::Implicative) == "monotone x=a y=b");

  CHECK_FALSE(threshold_check(f2, kMiddle, FilterKind::Implicative));
  CHECK(witness_str(f2, kMiddle, FilterKind::Implicative) == "monotone x=a y=b");

  CHECK_FALSE(threshold_check(f3, Thresholds{UnitRational(1, 5), UnitRational(3, 5)},
                              FilterKind::Fantastic));
  CHECK(witness_str(f3, Thresholds{UnitRational(1, 5), UnitRational(3, 5)},
                    FilterKind::Fantastic) == "monotone x=a y=b");
}

TEST_CASE("triple-condition violations carry three-variable witnesses") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  CHECK(witness_str(f, kOverline, FilterKind::Implicative) == "implicative x=b y=a z=a");
  CHECK(witness_str(f, kOverline, FilterKind::PositiveImplicative) ==
        "positive_implicative x=a y=a z=0");
}

TEST_CASE("degenerate threshold pairs are rejected") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  CHECK_THROWS_AS(
      threshold_check(f, Thresholds{UnitRational::half(), UnitRational::half()},
                      FilterKind::Plain),
      std::invalid_argument);
  CHECK_THROWS_AS(
      threshold_check(f, Thresholds{UnitRational(3, 5), UnitRational(2, 5)}, FilterKind::Plain),
      std::invalid_argument);
}

} // TEST_SUITE

TEST_SUITE("level route and profiles") {

TEST_CASE("level route matches the inequality route on the corpus") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f2.fz", alg);
  for (const Thresholds& t : {kOrdinary, kEqVq, kOverline, kMiddle})
    for (FilterKind kind : {FilterKind::Plain, FilterKind::Implicative,
                            FilterKind::PositiveImplicative, FilterKind::Fantastic}) {
      CAPTURE(t.alpha.str());
      CAPTURE(t.beta.str());
      CAPTURE(kind_token(kind));
      CHECK(threshold_check(f, t, kind) == level_form_check(f, t.alpha, t.beta, kind));
    }
}

TEST_CASE("the piece between the last interior critical value and the upper "
          "threshold is checked") {
  // Membership 0, 0, 1/2, 1 over the two-block chain: inside (2/5, 3/5] the
  // level sets are {b, 1} and then {1}, and {1} is not a fantastic filter
  // here, so both routes must reject.
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f(alg, "step",
             {UnitRational::zero(), UnitRational::zero(), UnitRational::half(),
              UnitRational::one()});
  CHECK_FALSE(level_form_check(f, UnitRational(2, 5), UnitRational(3, 5),
                               FilterKind::Fantastic));
  CHECK_FALSE(threshold_check(f, Thresholds{UnitRational(2, 5), UnitRational(3, 5)},
                              FilterKind::Fantastic));
  CHECK(witness_str(f, Thresholds{UnitRational(2, 5), UnitRational(3, 5)},
                    FilterKind::Fantastic) == "fantastic x=b y=0 z=1");
}

TEST_CASE("staircase profiles enumerate the acceptable bands") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f1 = load_fuzzy("mv3_mv2_f1.fz", alg);
  FuzzySet f2 = load_fuzzy("mv3_mv2_f2.fz", alg);

  CHECK(threshold_profile(f1, FilterKind::Plain).str() == "(0,1/5] (1/2,1]");
  CHECK(threshold_profile(f1, FilterKind::Implicative).str() == "(0,1/5] (3/5,1]");
  CHECK(threshold_profile(f1, FilterKind::PositiveImplicative).str() == "(0,1/5] (3/5,1]");
  CHECK(threshold_profile(f1, FilterKind::Fantastic).str() == "(0,1/5] (1/2,1]");

  CHECK(threshold_profile(f2, FilterKind::Plain).str() == "(0,1/5] (2/5,3/5] (4/5,1]");
  CHECK(threshold_profile(f2, FilterKind::Implicative).str() == "(0,1/5] (4/5,1]");
  CHECK(threshold_profile(f2, FilterKind::Fantastic).str() == "(0,1/5] (2/5,3/5] (4/5,1]");
}

TEST_CASE("profiles on the other corpus algebras") {
  FiniteBLAlgebra b4 = load_algebra("mv2_b4.alg");
  CHECK(threshold_profile(load_fuzzy("mv2_b4_f1.fz", b4), FilterKind::PositiveImplicative).str() ==
        "(0,1/5] (2/5,1]");
  FiniteBLAlgebra mv4 = load_algebra("mv4.alg");
  CHECK(threshold_profile(load_fuzzy("mv4_f1.fz", mv4), FilterKind::Fantastic).str() ==
        "(0,1/5] (1/2,1]");
}

TEST_CASE("a threshold pair is accepted exactly when the profile contains it") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f2.fz", alg);
  IntervalSet profile = threshold_profile(f, FilterKind::Plain);
  CHECK(profile.contains({kMiddle.alpha, kMiddle.beta}));
  CHECK_FALSE(profile.contains({kOverline.alpha, kOverline.beta}));
  CHECK(threshold_check(f, kMiddle, FilterKind::Plain));
  CHECK_FALSE(threshold_check(f, kOverline, FilterKind::Plain));
}

} // TEST_SUITE

TEST_SUITE("point route") {

TEST_CASE("point route agrees with the named variants it encodes") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f1 = load_fuzzy("mv3_mv2_f1.fz", alg);
  FuzzySet f2 = load_fuzzy("mv3_mv2_f2.fz", alg);

  CHECK(point_form_check(f1, VariantKind::Overline) ==
        threshold_check(f1, kOverline, FilterKind::Plain));
  CHECK(point_form_check(f1, VariantKind::EqVq) ==
        threshold_check(f1, kEqVq, FilterKind::Plain));
  CHECK(point_form_check(f2, VariantKind::Overline) ==
        threshold_check(f2, kOverline, FilterKind::Plain));
  CHECK(point_form_check(f2, VariantKind::EqVq) ==
        threshold_check(f2, kEqVq, FilterKind::Plain));
}

TEST_CASE("breakpoint grid matches the exhaustive dense scan") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  for (const char* file : {"mv3_mv2_f1.fz", "mv3_mv2_f2.fz"}) {
    CAPTURE(file);
    FuzzySet f = load_fuzzy(file, alg);
    // Denominator 20 covers every membership denominator and the half line.
    CHECK(point_form_check(f, VariantKind::Overline) ==
          point_form_check_dense(f, VariantKind::Overline, 20));
    CHECK(point_form_check(f, VariantKind::EqVq) ==
          point_form_check_dense(f, VariantKind::EqVq, 20));
  }
}

TEST_CASE("the ordinary variant has no point encoding") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  CHECK_THROWS_AS(point_form_check(f, VariantKind::Ordinary), std::invalid_argument);
}

} // TEST_SUITE

TEST_SUITE("classification records") {

TEST_CASE("two-block chain set: full grid") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  TaxonomyRecord rec = classify(load_fuzzy("mv3_mv2_f1.fz", alg));

  // variant-major order: ordinary, eq_vq, overline / kind order: plain,
  // implicative, positive implicative, fantastic
  CHECK(rec.verdict[0] == std::array<bool, 4>{false, false, false, false});
  CHECK(rec.verdict[1] == std::array<bool, 4>{false, false, false, false});
  CHECK(rec.verdict[2] == std::array<bool, 4>{true, false, false, true});

  REQUIRE(rec.witness[0][0].has_value());
  CHECK(rec.witness[0][0]->str(alg) == "product x=a y=a");
  CHECK_FALSE(rec.witness[2][0].has_value());
  CHECK_FALSE(rec.witness[2][3].has_value());
  REQUIRE(rec.witness[2][1].has_value());
  CHECK(rec.witness[2][1]->str(alg) == "implicative x=b y=a z=a");

  CHECK(rec.profile[0].str() == "(0,1/5] (1/2,1]");
  CHECK(rec.custom.empty());
}

TEST_CASE("diamond algebra set goes positive implicative above the half line") {
  FiniteBLAlgebra alg = load_algebra("mv2_b4.alg");
  TaxonomyRecord rec = classify(load_fuzzy("mv2_b4_f1.fz", alg));
  CHECK(rec.verdict[2] == std::array<bool, 4>{true, false, true, false});
  REQUIRE(rec.witness[0][2].has_value());
  CHECK(rec.witness[0][2]->str(alg) == "monotone x=a y=c");
  REQUIRE(rec.witness[2][3].has_value());
  CHECK(rec.witness[2][3]->str(alg) == "fantastic x=a y=0 z=b");
}

TEST_CASE("MV chain set goes fantastic above the half line") {
  FiniteBLAlgebra alg = load_algebra("mv4.alg");
  TaxonomyRecord rec = classify(load_fuzzy("mv4_f1.fz", alg));
  CHECK(rec.verdict[2] == std::array<bool, 4>{true, false, false, true});
  REQUIRE(rec.witness[0][3].has_value());
  CHECK(rec.witness[0][3]->str(alg) == "product x=a y=a");
}

TEST_CASE("extra threshold pairs produce custom verdicts") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  TaxonomyRecord rec = classify(load_fuzzy("mv3_mv2_f2.fz", alg), {kMiddle});
  REQUIRE(rec.custom.size() == 1);
  CHECK(rec.custom[0].verdict == std::array<bool, 4>{true, false, false, true});
  REQUIRE(rec.custom[0].witness[1].has_value());
  CHECK(rec.custom[0].witness[1]->str(alg) == "implicative x=b y=a z=a");
  CHECK_FALSE(rec.custom[0].witness[0].has_value());
}

} // TEST_SUITE
