#include "blfilt/taxonomy.hpp"

#include <algorithm>

namespace blfilt {

const char* variant_token(VariantKind v) {
  switch (v) {
    case VariantKind::Ordinary: return "ordinary";
    case VariantKind::EqVq: return "eq_vq";
    case VariantKind::Overline: return "overline";
  }
  return "?";
}

std::optional<VariantKind> parse_variant_token(std::string_view token) {
  if (token == "ordinary") return VariantKind::Ordinary;
  if (token == "eq_vq") return VariantKind::EqVq;
  if (token == "overline") return VariantKind::Overline;
  return std::nullopt;
}

Thresholds variant_thresholds(VariantKind v) {
  switch (v) {
    case VariantKind::Ordinary: return {UnitRational::zero(), UnitRational::one()};
    case VariantKind::EqVq: return {UnitRational::zero(), UnitRational::half()};
    case VariantKind::Overline: return {UnitRational::half(), UnitRational::one()};
  }
  return {};
}

std::string Witness::str(const FiniteBLAlgebra& alg) const {
  static const char* const vars[] = {"x", "y", "z"};
  std::string out = law;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out += std::string(" ") + vars[i] + "=" + alg.element_name(tuple[i]);
  return out;
}

namespace {

void require_threshold_pair(const UnitRational& lo, const UnitRational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("thresholds require lo < hi");
}

} // namespace

std::optional<Witness> threshold_violation(const FuzzySet& f, const Thresholds& t,
                                           FilterKind kind) {
  require_threshold_pair(t.alpha, t.beta);
  const FiniteBLAlgebra& alg = f.algebra();
  const int n = alg.size();
  const UnitRational& a = t.alpha;
  const UnitRational& b = t.beta;

  auto holds2 = [&](const UnitRational& lhs_val, const UnitRational& r1, const UnitRational& r2) {
    return max(lhs_val, a) >= min(min(r1, r2), b);
  };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!holds2(f.at(alg.odot(x, y)), f.at(x), f.at(y)))
        return Witness{"product", {x, y}};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (alg.leq(x, y) && !(max(f.at(y), a) >= min(f.at(x), b)))
        return Witness{"monotone", {x, y}};

  if (kind == FilterKind::Plain) return std::nullopt;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool ok = true;
        switch (kind) {
          case FilterKind::Implicative:
            ok = holds2(f.at(alg.imp(x, z)), f.at(alg.imp(x, alg.imp(alg.neg(z), y))),
                        f.at(alg.imp(y, z)));
            break;
          case FilterKind::PositiveImplicative:
            ok = holds2(f.at(alg.imp(x, z)), f.at(alg.imp(x, alg.imp(y, z))),
                        f.at(alg.imp(x, y)));
            break;
          case FilterKind::Fantastic:
            ok = holds2(f.at(alg.imp(alg.imp(alg.imp(x, y), y), x)),
                        f.at(alg.imp(z, alg.imp(y, x))), f.at(z));
            break;
          case FilterKind::Plain:
            break;
        }
        if (!ok) return Witness{kind_token(kind), {x, y, z}};
      }
  return std::nullopt;
}

bool threshold_check(const FuzzySet& f, const Thresholds& t, FilterKind kind) {
  return !threshold_violation(f, t, kind).has_value();
}

namespace {

// Breakpoints of t -> [F(x) >= t] and t -> [F(x) + t > 1] over all x,
// restricted to (0, 1]. Any violation region of the point conditions is an
// intersection of left-open right-closed intervals with endpoints drawn from
// this set, so checking the grid decides the full quantification.
std::vector<UnitRational> point_grid(const FuzzySet& f) {
  std::vector<UnitRational> grid{UnitRational::one(), UnitRational::half()};
  for (const UnitRational& v : f.membership()) {
    if (v > UnitRational::zero()) grid.push_back(v);
    UnitRational c = v.complement();
    if (c > UnitRational::zero()) grid.push_back(c);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

bool point_form_over(const FuzzySet& f, VariantKind variant,
                     const std::vector<UnitRational>& values) {
  const FiniteBLAlgebra& alg = f.algebra();
  const int n = alg.size();

  auto belongs = [&](int x, const UnitRational& t) { return f.at(x) >= t; };
  auto quasi = [&](int x, const UnitRational& t) { return t > f.at(x).complement(); };

  if (variant == VariantKind::EqVq) {
    // Points in F propagate through the product, value min{t,r}.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = alg.odot(x, y);
        for (const UnitRational& t : values) {
          if (!belongs(x, t)) continue;
          for (const UnitRational& r : values) {
            if (!belongs(y, r)) continue;
            const UnitRational& m = min(t, r);
            if (!belongs(xy, m) && !quasi(xy, m)) return false;
          }
        }
      }
    // Points in F propagate upward along the order.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!alg.leq(x, y)) continue;
        for (const UnitRational& r : values) {
          if (!belongs(x, r)) continue;
          if (!belongs(y, r) && !quasi(y, r)) return false;
        }
      }
    return true;
  }
  if (variant == VariantKind::Overline) {
    // A product point outside F forces one factor point outside or non-quasi.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = alg.odot(x, y);
        for (const UnitRational& t : values)
          for (const UnitRational& r : values) {
            if (belongs(xy, min(t, r))) continue;
            bool escape = !belongs(x, t) || !quasi(x, t) || !belongs(y, r) || !quasi(y, r);
            if (!escape) return false;
          }
      }
    // A point outside F below y forces the same below x <= y.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!alg.leq(x, y)) continue;
        for (const UnitRational& r : values) {
          if (belongs(y, r)) continue;
          if (belongs(x, r) && quasi(x, r)) return false;
        }
      }
    return true;
  }
  throw std::invalid_argument("point form exists only for the eq_vq and overline variants");
}

} // namespace

bool point_form_check(const FuzzySet& f, VariantKind variant) {
  return point_form_over(f, variant, point_grid(f));
}

bool point_form_check_dense(const FuzzySet& f, VariantKind variant, int denominator) {
  if (denominator < 1) throw std::invalid_argument("denominator must be positive");
  std::vector<UnitRational> values;
  values.reserve(denominator);
  for (int k = 1; k <= denominator; ++k) values.emplace_back(k, denominator);
  return point_form_over(f, variant, values);
}

namespace {

bool level_acceptable(const FuzzySet& f, const UnitRational& t, FilterKind kind) {
  CrispSubset s = level_set(f, t);
  return s.empty() || is_filter(f.algebra(), s, kind);
}

} // namespace

bool level_form_check(const FuzzySet& f, const UnitRational& lo, const UnitRational& hi,
                      FilterKind kind) {
  require_threshold_pair(lo, hi);
  // Level sets are piecewise constant in t, with pieces delimited by the
  // critical values, and the level set on a piece equals the one at the
  // piece's right endpoint. The pieces meeting (lo, hi] end at the critical
  // values strictly inside it and at hi itself.
  for (const UnitRational& v : critical_values(f))
    if (v > lo && v < hi && !level_acceptable(f, v, kind)) return false;
  return level_acceptable(f, hi, kind);
}

IntervalSet threshold_profile(const FuzzySet& f, FilterKind kind) {
  std::vector<Interval> good;
  UnitRational lo = UnitRational::zero();
  for (const UnitRational& v : critical_values(f)) {
    if (v == UnitRational::zero()) continue;
    if (level_acceptable(f, v, kind)) good.push_back({lo, v});
    lo = v;
  }
  if (lo < UnitRational::one()) good.push_back({lo, UnitRational::one()}); // empty level sets
  return IntervalSet::from_pieces(std::move(good));
}

TaxonomyRecord classify(const FuzzySet& f, const std::vector<Thresholds>& extra) {
  TaxonomyRecord rec;
  static const FilterKind kinds[] = {FilterKind::Plain, FilterKind::Implicative,
                                     FilterKind::PositiveImplicative, FilterKind::Fantastic};
  static const VariantKind variants[] = {VariantKind::Ordinary, VariantKind::EqVq,
                                         VariantKind::Overline};

  auto checked_verdict = [&](const Thresholds& t, FilterKind kind,
                             std::optional<Witness>& witness_out) {
    std::optional<Witness> w = threshold_violation(f, t, kind);
    bool verdict = !w.has_value();
    bool level = level_form_check(f, t.alpha, t.beta, kind);
    if (verdict != level)
      throw std::logic_error("internal inconsistency: inequality and level routes disagree at (" +
                             t.alpha.str() + "," + t.beta.str() + "] for kind " +
                             kind_token(kind) + " on " + f.describe());
    witness_out = std::move(w);
    return verdict;
  };

  for (std::size_t vi = 0; vi < 3; ++vi) {
    Thresholds t = variant_thresholds(variants[vi]);
    for (std::size_t ki = 0; ki < 4; ++ki)
      rec.verdict[vi][ki] = checked_verdict(t, kinds[ki], rec.witness[vi][ki]);
  }
  for (std::size_t ki = 0; ki < 4; ++ki) rec.profile[ki] = threshold_profile(f, kinds[ki]);
  for (const Thresholds& t : extra) {
    CustomVerdict cv;
    cv.thresholds = t;
    for (std::size_t ki = 0; ki < 4; ++ki)
      cv.verdict[ki] = checked_verdict(t, kinds[ki], cv.witness[ki]);
    rec.custom.push_back(std::move(cv));
  }
  return rec;
}

} // namespace blfilt
