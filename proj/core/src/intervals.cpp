#include "blfilt/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace blfilt {

IntervalSet IntervalSet::from_pieces(std::vector<Interval> pieces) {
  for (const Interval& p : pieces)
    if (!(p.lo < p.hi)) throw std::invalid_argument("interval requires lo < hi");
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (const Interval& p : pieces) {
    if (!out.parts_.empty()) {
      Interval& last = out.parts_.back();
      if (p.lo < last.hi) throw std::invalid_argument("overlapping intervals");
      if (p.lo == last.hi) { // adjacent: (a,b] followed by (b,c]
        last.hi = p.hi;
        continue;
      }
    }
    out.parts_.push_back(p);
  }
  return out;
}

bool IntervalSet::contains(const Interval& i) const {
  for (const Interval& p : parts_)
    if (p.lo <= i.lo && i.hi <= p.hi) return true;
  return false;
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "empty";
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += " ";
    out += "(" + parts_[k].lo.str() + "," + parts_[k].hi.str() + "]";
  }
  return out;
}

} // namespace blfilt
