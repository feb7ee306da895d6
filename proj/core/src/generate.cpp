#include "blfilt/verify.hpp"

#include <algorithm>
#include <set>

namespace blfilt {

namespace {

std::vector<std::string> carrier_names(int n) {
  static const char* const mids[] = {"a", "b", "c", "d"};
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 0; i < n - 2; ++i) names.push_back(mids[i]);
  names.push_back("1");
  return names;
}

FiniteBLAlgebra from_tables(std::string name, int n, const std::vector<std::vector<int>>& odot,
                            const std::vector<std::vector<int>>& imp) {
  return FiniteBLAlgebra(std::move(name), carrier_names(n), 0, n - 1, odot, imp);
}

std::vector<FiniteBLAlgebra> materialize(int n, const std::set<std::vector<int>>& canon) {
  std::vector<FiniteBLAlgebra> out;
  int seq = 0;
  for (const std::vector<int>& code : canon) {
    std::vector<std::vector<int>> odot(n, std::vector<int>(n));
    std::vector<std::vector<int>> imp(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        odot[x][y] = code[x * n + y];
        imp[x][y] = code[n * n + x * n + y];
      }
    ++seq;
    out.push_back(from_tables("bl" + std::to_string(n) + "_" + std::to_string(seq), n, odot, imp));
  }
  return out;
}

struct LabeledLattice {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
};

// Greatest lower / least upper bound tables for an explicit order relation;
// false when some pair has none.
bool bound_tables(const std::vector<std::vector<bool>>& leq, std::vector<std::vector<int>>& meet,
                  std::vector<std::vector<int>>& join) {
  const int n = static_cast<int>(leq.size());
  meet.assign(n, std::vector<int>(n, -1));
  join.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!leq[z][x] || !leq[z][y]) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w)
          if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
        if (greatest) {
          meet[x][y] = z;
          break;
        }
      }
      if (meet[x][y] < 0) return false;
      for (int z = 0; z < n; ++z) {
        if (!leq[x][z] || !leq[y][z]) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
          if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
        if (least) {
          join[x][y] = z;
          break;
        }
      }
      if (join[x][y] < 0) return false;
    }
  return true;
}

// All bounded lattice orders on {0..n-1} with bottom 0 and top n-1, every
// labeling included. The relation between the n-2 middle elements is a free
// poset; bottom and top relations are forced.
std::vector<LabeledLattice> labeled_lattices(int n) {
  const int m = n - 2;
  std::vector<std::pair<int, int>> pairs; // ordered middle pairs, carrier indexes
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) pairs.emplace_back(i, j);

  std::vector<LabeledLattice> out;
  const std::uint32_t limit = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) {
      leq[x][x] = true;
      leq[0][x] = true;
      leq[x][n - 1] = true;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) leq[pairs[k].first][pairs[k].second] = true;

    bool ok = true;
    for (std::size_t k = 0; k < pairs.size() && ok; ++k) {
      auto [i, j] = pairs[k];
      if (leq[i][j] && leq[j][i]) ok = false; // antisymmetry among middles
    }
    for (int x = 1; x <= m && ok; ++x)
      for (int y = 1; y <= m && ok; ++y)
        for (int z = 1; z <= m && ok; ++z)
          if (leq[x][y] && leq[y][z] && !leq[x][z]) ok = false;
    if (!ok) continue;

    LabeledLattice lat;
    lat.n = n;
    lat.leq = std::move(leq);
    if (!bound_tables(lat.leq, lat.meet, lat.join)) continue;
    out.push_back(std::move(lat));
  }
  return out;
}

// Residuum of a total product table over an explicit order: the greatest z
// with x*z <= y, or -1 when the set of candidates has no greatest member.
int residuum(const std::vector<std::vector<bool>>& leq, const std::vector<std::vector<int>>& odot,
             int x, int y) {
  const int n = static_cast<int>(leq.size());
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq[odot[x][z]][y]) continue;
    bool greatest = true;
    for (int w = 0; w < n && greatest; ++w)
      if (leq[odot[x][w]][y] && !leq[w][z]) greatest = false;
    if (greatest) {
      best = z;
      break;
    }
  }
  return best;
}

void search_products(const LabeledLattice& lat, std::set<std::vector<int>>& canon) {
  const int n = lat.n;
  const int top = n - 1;
  std::vector<std::vector<int>> odot(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    odot[0][x] = odot[x][0] = 0;        // bottom is absorbing in any valid table
    odot[top][x] = odot[x][top] = x;    // top is the unit
  }

  std::vector<std::pair<int, int>> cells; // unordered middle pairs
  for (int x = 1; x < top; ++x)
    for (int y = x; y < top; ++y) cells.emplace_back(x, y);

  // Monotonicity against every already known cell; both tables stay symmetric.
  auto monotone_ok = [&](int x, int y, int v) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int w = odot[p][q];
        if (w < 0) continue;
        if (lat.leq[p][x] && lat.leq[q][y] && !lat.leq[w][v]) return false;
        if (lat.leq[x][p] && lat.leq[y][q] && !lat.leq[v][w]) return false;
      }
    return true;
  };

  auto associative_so_far = [&]() {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int pq = odot[p][q];
        if (pq < 0) continue;
        for (int r = 0; r < n; ++r) {
          int qr = odot[q][r];
          if (qr < 0) continue;
          int left = odot[pq][r];
          int right = odot[p][qr];
          if (left < 0 || right < 0) continue;
          if (left != right) return false;
        }
      }
    return true;
  };

  auto emit = [&]() {
    std::vector<std::vector<int>> imp(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        imp[x][y] = residuum(lat.leq, odot, x, y);
        if (imp[x][y] < 0) return;
      }
    FiniteBLAlgebra alg = from_tables("candidate", n, odot, imp);
    if (!validate_bl(alg).valid) return;
    canon.insert(canonical_tables(alg));
  };

  auto dfs = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      emit();
      return;
    }
    auto [x, y] = cells[cell];
    for (int v = 0; v < n; ++v) {
      if (!lat.leq[v][lat.meet[x][y]]) continue; // products never exceed the meet
      if (!monotone_ok(x, y, v)) continue;
      odot[x][y] = odot[y][x] = v;
      if (associative_so_far()) self(self, cell + 1);
      odot[x][y] = odot[y][x] = -1;
    }
  };
  dfs(dfs, 0);
}

void require_size(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::out_of_range("carrier size " + std::to_string(n) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace

std::vector<int> canonical_tables(const FiniteBLAlgebra& alg) {
  const int n = alg.size();
  // Base relabeling: bottom first, middles in declared order, top last.
  std::vector<int> middles;
  for (int i = 0; i < n; ++i)
    if (i != alg.bottom() && i != alg.top()) middles.push_back(i);

  std::vector<int> best;
  std::vector<int> arrangement = middles;
  std::sort(arrangement.begin(), arrangement.end());
  do {
    std::vector<int> sigma(n);
    sigma[alg.bottom()] = 0;
    sigma[alg.top()] = n - 1;
    for (std::size_t k = 0; k < arrangement.size(); ++k)
      sigma[arrangement[k]] = static_cast<int>(k) + 1;

    std::vector<int> code(2 * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        code[sigma[x] * n + sigma[y]] = sigma[alg.odot(x, y)];
        code[n * n + sigma[x] * n + sigma[y]] = sigma[alg.imp(x, y)];
      }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return best;
}

bool isomorphic(const FiniteBLAlgebra& a, const FiniteBLAlgebra& b) {
  if (a.size() != b.size()) return false;
  return canonical_tables(a) == canonical_tables(b);
}

std::vector<FiniteBLAlgebra> generate_bl_algebras(int n) {
  require_size(n, 2, 6);
  std::set<std::vector<int>> canon;
  for (const LabeledLattice& lat : labeled_lattices(n)) search_products(lat, canon);
  return materialize(n, canon);
}

std::vector<FiniteBLAlgebra> generate_bl_algebras_naive(int n) {
  require_size(n, 2, 4);
  const int top = n - 1;
  std::set<std::vector<int>> canon;

  const std::uint32_t rel_limit = 1u << (n * n);
  for (std::uint32_t rel = 0; rel < rel_limit; ++rel) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) leq[x][y] = (rel >> (x * n + y)) & 1u;

    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!leq[x][x] || !leq[0][x] || !leq[x][top]) ok = false;
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && leq[x][y] && leq[y][x]) ok = false;
        for (int z = 0; z < n && ok; ++z)
          if (leq[x][y] && leq[y][z] && !leq[x][z]) ok = false;
      }
    }
    if (!ok) continue;

    std::vector<std::vector<int>> meet, join;
    if (!bound_tables(leq, meet, join)) continue;

    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < top; ++x)
      for (int y = x; y < top; ++y) cells.emplace_back(x, y);

    std::vector<int> choice(cells.size(), 0);
    while (true) {
      std::vector<std::vector<int>> odot(n, std::vector<int>(n, -1));
      for (int x = 0; x < n; ++x) odot[top][x] = odot[x][top] = x;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [x, y] = cells[k];
        odot[x][y] = odot[y][x] = choice[k];
      }

      bool good = true;
      for (int x = 0; x < n && good; ++x)
        for (int y = 0; y < n && good; ++y)
          for (int z = 0; z < n && good; ++z)
            if (odot[odot[x][y]][z] != odot[x][odot[y][z]]) good = false;

      std::vector<std::vector<int>> imp(n, std::vector<int>(n, -1));
      for (int x = 0; x < n && good; ++x)
        for (int y = 0; y < n && good; ++y) {
          imp[x][y] = residuum(leq, odot, x, y);
          if (imp[x][y] < 0) good = false;
        }

      for (int x = 0; x < n && good; ++x)
        for (int y = 0; y < n && good; ++y) {
          for (int z = 0; z < n && good; ++z)
            if (leq[z][imp[x][y]] != leq[odot[x][z]][y]) good = false;
          if (good && meet[x][y] != odot[x][imp[x][y]]) good = false;
          if (good && join[imp[x][y]][imp[y][x]] != top) good = false;
        }

      if (good) canon.insert(canonical_tables(from_tables("candidate", n, odot, imp)));

      std::size_t k = 0;
      while (k < cells.size() && choice[k] == n - 1) choice[k++] = 0;
      if (k == cells.size()) break;
      ++choice[k];
    }
  }
  return materialize(n, canon);
}

} // namespace blfilt
