#pragma once

#include "blfilt/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blfilt {

enum class FilterKind { Plain, Implicative, PositiveImplicative, Fantastic };

const char* kind_token(FilterKind kind); // "plain", "implicative", ...
std::optional<FilterKind> parse_kind_token(std::string_view token);

// Subset of a carrier with at most 12 elements, element i <-> bit i.
struct CrispSubset {
  std::uint32_t bits = 0;

  static CrispSubset full(int n) { return {static_cast<std::uint32_t>((1u << n) - 1u)}; }
  static CrispSubset of(std::initializer_list<int> xs) {
    CrispSubset s;
    for (int x : xs) s.add(x);
    return s;
  }

  bool contains(int x) const { return (bits >> x) & 1u; }
  void add(int x) { bits |= (1u << x); }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }

  friend bool operator==(const CrispSubset& a, const CrispSubset& b) { return a.bits == b.bits; }
  friend bool operator<(const CrispSubset& a, const CrispSubset& b) { return a.bits < b.bits; }
};

// "{a,b,1}" in declared element order.
std::string subset_str(const FiniteBLAlgebra& alg, CrispSubset s);

// Closure-style definitions: membership of top plus modus ponens, and for the
// stronger kinds one additional triple condition each.
// Throws std::invalid_argument on the empty subset.
bool is_filter(const FiniteBLAlgebra& alg, CrispSubset a, FilterKind kind);

// Independent route: product/upward closure for the plain case, single
// two-variable conditions for the stronger kinds. Must agree with is_filter
// on every input; the pair acts as its own oracle.
bool filter_via_characterization(const FiniteBLAlgebra& alg, CrispSubset a, FilterKind kind);

// All subsets of the given kind, ascending by bit mask. Carrier capped at 12.
std::vector<CrispSubset> enumerate_filters(const FiniteBLAlgebra& alg, FilterKind kind);

struct FilterTheoremEntry {
  std::string id;
  bool pass = false;
  std::optional<CrispSubset> counterexample;
};

struct FilterTheoremReport {
  bool all_pass = false;
  std::vector<FilterTheoremEntry> entries;
};

// Exhaustive containment checks between the enumerated filter families:
// implicative within positive implicative, implicative within fantastic,
// and implicative equal to their intersection.
FilterTheoremReport check_filter_theorems(const FiniteBLAlgebra& alg);

} // namespace blfilt
