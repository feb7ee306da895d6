#pragma once

#include "blfilt/rational.hpp"

#include <string>
#include <vector>

namespace blfilt {

// Half-open interval (lo, hi] inside (0, 1]. Requires lo < hi.
struct Interval {
  UnitRational lo;
  UnitRational hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Finite union of half-open intervals, kept normalized: sorted, pairwise
// disjoint, adjacent pieces merged.
class IntervalSet {
public:
  IntervalSet() = default;
  static IntervalSet from_pieces(std::vector<Interval> pieces);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Whole-interval containment of (lo, hi].
  bool contains(const Interval& i) const;

  // "(0,1/5] (2/5,3/5] (4/5,1]"; "empty" when there are no parts.
  std::string str() const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.parts_ == b.parts_;
  }

private:
  std::vector<Interval> parts_;
};

} // namespace blfilt
