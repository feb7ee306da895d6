#include "blfilt/fuzzy.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <vector>

using namespace blfilt;
using testutil::el;
using testutil::load_algebra;
using testutil::load_fuzzy;

TEST_SUITE("fuzzy set parsing") {

TEST_CASE("corpus file yields the declared membership") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  CHECK(f.name() == "mv3_mv2_f1");
  CHECK(f.at(el(alg, "0")) == UnitRational(1, 5));
  CHECK(f.at(el(alg, "a")) == UnitRational(1, 2));
  CHECK(f.at(el(alg, "b")) == UnitRational(3, 5));
  CHECK(f.at(el(alg, "1")) == UnitRational(3, 5));
  CHECK(f.describe() == "0=1/5 a=1/2 b=3/5 1=3/5");
  CHECK(&f.algebra() == &alg);
}

TEST_CASE("assignments may come in any order") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = parse_fuzzy_set(
      "fuzzyset g over mv3_mv2\n1 = 1\nb = 0.5\n0 = 0\na = 1/4\nend\n", alg);
  CHECK(f.at(el(alg, "a")) == UnitRational(1, 4));
  CHECK(f.at(el(alg, "1")) == UnitRational::one());
}

TEST_CASE("malformed sources are rejected with positions") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");

  // header names a different algebra
  CHECK_THROWS_WITH_AS(
      parse_fuzzy_set("fuzzyset g over other\n0 = 0\na = 0\nb = 0\n1 = 0\nend\n", alg),
      doctest::Contains("other"), ParseError);

  // missing element assignment
  CHECK_THROWS_AS(parse_fuzzy_set("fuzzyset g over mv3_mv2\n0 = 0\na = 0\nb = 0\nend\n", alg),
                  ParseError);

  // duplicate assignment
  CHECK_THROWS_AS(parse_fuzzy_set(
                      "fuzzyset g over mv3_mv2\n0 = 0\n0 = 1\na = 0\nb = 0\n1 = 0\nend\n", alg),
                  ParseError);

  // unknown element
  CHECK_THROWS_AS(parse_fuzzy_set(
                      "fuzzyset g over mv3_mv2\nq = 0\n0 = 0\na = 0\nb = 0\n1 = 0\nend\n", alg),
                  ParseError);

  // value outside the unit interval
  CHECK_THROWS_AS(parse_fuzzy_set(
                      "fuzzyset g over mv3_mv2\n0 = 3/2\na = 0\nb = 0\n1 = 0\nend\n", alg),
                  ParseError);

  // missing end marker
  CHECK_THROWS_AS(parse_fuzzy_set("fuzzyset g over mv3_mv2\n0 = 0\na = 0\nb = 0\n1 = 0\n", alg),
                  ParseError);
}

} // TEST_SUITE

TEST_SUITE("levels and points") {

TEST_CASE("level sets shrink as the cut rises") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  int o = el(alg, "0"), a = el(alg, "a"), b = el(alg, "b"), t = el(alg, "1");

  CHECK(level_set(f, UnitRational(1, 5)) == CrispSubset::of({o, a, b, t}));
  CHECK(level_set(f, UnitRational(1, 2)) == CrispSubset::of({a, b, t}));
  CHECK(level_set(f, UnitRational(3, 5)) == CrispSubset::of({b, t}));
  CHECK(level_set(f, UnitRational(4, 5)).empty());
  CHECK_THROWS_AS(level_set(f, UnitRational::zero()), std::invalid_argument);
}

TEST_CASE("critical values are the distinct image ascending") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  CHECK(critical_values(load_fuzzy("mv3_mv2_f1.fz", alg)) ==
        std::vector<UnitRational>{UnitRational(1, 5), UnitRational(1, 2), UnitRational(3, 5)});
  CHECK(critical_values(load_fuzzy("mv3_mv2_f2.fz", alg)) ==
        std::vector<UnitRational>{UnitRational(1, 5), UnitRational(2, 5), UnitRational(3, 5),
                                  UnitRational(4, 5)});
}

TEST_CASE("point relations at the half boundary") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f1.fz", alg);
  int a = el(alg, "a");

  // F(a) = 1/2; a point with value 1/2 belongs but is not quasi-coincident.
  FuzzyPoint at_half(a, UnitRational::half());
  CHECK(point_relation(f, at_half, PointRelation::Belongs));
  CHECK_FALSE(point_relation(f, at_half, PointRelation::Quasi));
  CHECK(point_relation(f, at_half, PointRelation::BelongsOrQuasi));
  CHECK_FALSE(point_relation(f, at_half, PointRelation::NotBelongs));
  CHECK(point_relation(f, at_half, PointRelation::NotQuasi));
  CHECK(point_relation(f, at_half, PointRelation::NotBelongsOrNotQuasi));

  // A higher value flips membership but turns on quasi-coincidence.
  FuzzyPoint above(a, UnitRational(3, 5));
  CHECK_FALSE(point_relation(f, above, PointRelation::Belongs));
  CHECK(point_relation(f, above, PointRelation::Quasi));
  CHECK(point_relation(f, above, PointRelation::BelongsOrQuasi));
  CHECK(point_relation(f, above, PointRelation::NotBelongsOrNotQuasi));

  // A lower value belongs and stays short of quasi-coincidence.
  FuzzyPoint below(a, UnitRational(2, 5));
  CHECK(point_relation(f, below, PointRelation::Belongs));
  CHECK_FALSE(point_relation(f, below, PointRelation::Quasi));
  CHECK_FALSE(point_relation(f, below, PointRelation::NotBelongs));
}

TEST_CASE("quasi-coincidence needs the sum to exceed one") {
  FiniteBLAlgebra alg = load_algebra("mv3_mv2.alg");
  FuzzySet f = load_fuzzy("mv3_mv2_f2.fz", alg); // F(b) = 4/5
  int b = el(alg, "b");
  CHECK(point_relation(f, FuzzyPoint(b, UnitRational(1, 5)), PointRelation::NotQuasi));
  CHECK(point_relation(f, FuzzyPoint(b, UnitRational(1, 4)), PointRelation::Quasi));
  CHECK(point_relation(f, FuzzyPoint(b, UnitRational::one()), PointRelation::Quasi));
}

TEST_CASE("zero-valued points are rejected") {
  CHECK_THROWS_AS(FuzzyPoint(0, UnitRational::zero()), std::invalid_argument);
}

} // TEST_SUITE
