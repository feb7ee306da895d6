#include "blfilt/verify.hpp"

namespace blfilt {

void for_each_grid_fuzzy_set(const FiniteBLAlgebra& alg, const GridSpec& grid,
                             const std::function<void(const FuzzySet&)>& fn) {
  const int d = grid.denominator;
  if (d < 1) throw std::invalid_argument("grid denominator must be positive");
  const int n = alg.size();

  std::vector<UnitRational> steps;
  steps.reserve(d + 1);
  for (int k = 0; k <= d; ++k) steps.emplace_back(k, d);

  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<UnitRational> membership;
    membership.reserve(n);
    for (int i = 0; i < n; ++i) membership.push_back(steps[idx[i]]);
    fn(FuzzySet(alg, "grid", std::move(membership)));

    int i = n - 1; // last element varies fastest
    while (i >= 0 && idx[i] == d) idx[i--] = 0;
    if (i < 0) return;
    ++idx[i];
  }
}

std::uint64_t grid_size(const FiniteBLAlgebra& alg, const GridSpec& grid) {
  std::uint64_t total = 1;
  for (int i = 0; i < alg.size(); ++i) total *= static_cast<std::uint64_t>(grid.denominator) + 1;
  return total;
}

} // namespace blfilt
