#pragma once

#include "blfilt/algebra.hpp"
#include "blfilt/crisp.hpp"
#include "blfilt/rational.hpp"

#include <string>
#include <vector>

namespace blfilt {

// Total membership map from a carrier into [0, 1]. Immutable after
// construction; keeps a non-owning pointer to its algebra.
class FuzzySet {
public:
  FuzzySet(const FiniteBLAlgebra& alg, std::string name, std::vector<UnitRational> membership);

  const FiniteBLAlgebra& algebra() const { return *alg_; }
  const std::string& name() const { return name_; }
  const UnitRational& at(int x) const { return membership_[x]; }
  const std::vector<UnitRational>& membership() const { return membership_; }

  // "0=1/5 a=1/2 b=3/5 1=3/5" in declared element order.
  std::string describe() const;

private:
  const FiniteBLAlgebra* alg_;
  std::string name_;
  std::vector<UnitRational> membership_;
};

// Single-support fuzzy point; the value must be positive.
struct FuzzyPoint {
  FuzzyPoint(int support, UnitRational value);
  int support;
  UnitRational value;
};

enum class PointRelation {
  Belongs,              // F(x) >= t
  Quasi,                // F(x) + t > 1
  BelongsOrQuasi,
  NotBelongs,           // F(x) < t
  NotQuasi,             // F(x) + t <= 1
  NotBelongsOrNotQuasi,
};

bool point_relation(const FuzzySet& f, const FuzzyPoint& p, PointRelation rel);

// {x : F(x) >= t} for t in (0, 1]. Throws std::invalid_argument when t is 0.
CrispSubset level_set(const FuzzySet& f, const UnitRational& t);

// Distinct image values, strictly ascending.
std::vector<UnitRational> critical_values(const FuzzySet& f);

// Line-oriented source format:
//   fuzzyset <name> over <algebra-name>
//   <element> = <value>   (one line per carrier element, any order)
//   end
// Values are rationals "p/q", exact decimals, or bare integers. Every carrier
// element must be assigned exactly once. Throws ParseError.
FuzzySet parse_fuzzy_set(std::string_view text, const FiniteBLAlgebra& alg);

} // namespace blfilt
