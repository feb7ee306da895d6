#include "blfilt/verify.hpp"

// Second opinion for the audit: evaluates the defining threshold inequalities
// straight off the raw tables, with its own helpers. Deliberately does not
// call into the taxonomy module.

namespace blfilt {

namespace {

const BigRat& rat_min(const BigRat& a, const BigRat& b) { return b < a ? b : a; }
const BigRat& rat_max(const BigRat& a, const BigRat& b) { return a < b ? b : a; }

} // namespace

bool oracle_threshold_filter(const std::vector<std::vector<int>>& odot,
                             const std::vector<std::vector<int>>& imp, int bottom, int top,
                             const std::vector<BigRat>& membership, const BigRat& alpha,
                             const BigRat& beta, FilterKind kind) {
  const int n = static_cast<int>(membership.size());
  auto f = [&](int e) -> const BigRat& { return membership[e]; };
  auto below = [&](int x, int y) { return imp[x][y] == top; };
  auto ok2 = [&](int lhs, int r1, int r2) {
    return rat_max(f(lhs), alpha) >= rat_min(rat_min(f(r1), f(r2)), beta);
  };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!ok2(odot[x][y], x, y)) return false;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (below(x, y) && !(rat_max(f(y), alpha) >= rat_min(f(x), beta))) return false;

  if (kind == FilterKind::Plain) return true;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool ok = true;
        switch (kind) {
          case FilterKind::Implicative: {
            int znot = imp[z][bottom];
            ok = ok2(imp[x][z], imp[x][imp[znot][y]], imp[y][z]);
            break;
          }
          case FilterKind::PositiveImplicative:
            ok = ok2(imp[x][z], imp[x][imp[y][z]], imp[x][y]);
            break;
          case FilterKind::Fantastic:
            ok = ok2(imp[imp[imp[x][y]][y]][x], imp[z][imp[y][x]], z);
            break;
          case FilterKind::Plain:
            break;
        }
        if (!ok) return false;
      }
  return true;
}

} // namespace blfilt
