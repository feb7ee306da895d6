#include "blfilt/crisp.hpp"

#include <algorithm>

namespace blfilt {

const char* kind_token(FilterKind kind) {
  switch (kind) {
    case FilterKind::Plain: return "plain";
    case FilterKind::Implicative: return "implicative";
    case FilterKind::PositiveImplicative: return "positive_implicative";
    case FilterKind::Fantastic: return "fantastic";
  }
  return "?";
}

std::optional<FilterKind> parse_kind_token(std::string_view token) {
  if (token == "plain") return FilterKind::Plain;
  if (token == "implicative") return FilterKind::Implicative;
  if (token == "positive_implicative") return FilterKind::PositiveImplicative;
  if (token == "fantastic") return FilterKind::Fantastic;
  return std::nullopt;
}

std::string subset_str(const FiniteBLAlgebra& alg, CrispSubset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < alg.size(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ",";
    out += alg.element_name(i);
    first = false;
  }
  out += "}";
  return out;
}

namespace {

bool plain_by_definition(const FiniteBLAlgebra& alg, CrispSubset a) {
  if (!a.contains(alg.top())) return false;
  const int n = alg.size();
  for (int x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (a.contains(alg.imp(x, y)) && !a.contains(y)) return false;
  }
  return true;
}

bool plain_by_closure(const FiniteBLAlgebra& alg, CrispSubset a) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (a.contains(y) && !a.contains(alg.odot(x, y))) return false;
      if (alg.leq(x, y) && !a.contains(y)) return false;
    }
  }
  return true;
}

void require_nonempty(CrispSubset a) {
  if (a.empty()) throw std::invalid_argument("empty subset");
}

} // namespace

bool is_filter(const FiniteBLAlgebra& alg, CrispSubset a, FilterKind kind) {
  require_nonempty(a);
  if (!plain_by_definition(alg, a)) return false;
  const int n = alg.size();
  switch (kind) {
    case FilterKind::Plain:
      return true;
    case FilterKind::Implicative:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (a.contains(alg.imp(x, alg.imp(alg.neg(z), y))) && a.contains(alg.imp(y, z)) &&
                !a.contains(alg.imp(x, z)))
              return false;
      return true;
    case FilterKind::PositiveImplicative:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (a.contains(alg.imp(x, alg.imp(y, z))) && a.contains(alg.imp(x, y)) &&
                !a.contains(alg.imp(x, z)))
              return false;
      return true;
    case FilterKind::Fantastic:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (a.contains(alg.imp(z, alg.imp(y, x))) && a.contains(z) &&
                !a.contains(alg.imp(alg.imp(alg.imp(x, y), y), x)))
              return false;
      return true;
  }
  return false;
}

bool filter_via_characterization(const FiniteBLAlgebra& alg, CrispSubset a, FilterKind kind) {
  require_nonempty(a);
  if (!plain_by_closure(alg, a)) return false;
  const int n = alg.size();
  switch (kind) {
    case FilterKind::Plain:
      return true;
    case FilterKind::Implicative:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a.contains(alg.imp(alg.imp(x, y), x)) && !a.contains(x)) return false;
      return true;
    case FilterKind::PositiveImplicative:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a.contains(alg.imp(x, alg.imp(x, y))) && !a.contains(alg.imp(x, y))) return false;
      return true;
    case FilterKind::Fantastic:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a.contains(alg.imp(y, x)) &&
              !a.contains(alg.imp(alg.imp(alg.imp(x, y), y), x)))
            return false;
      return true;
  }
  return false;
}

std::vector<CrispSubset> enumerate_filters(const FiniteBLAlgebra& alg, FilterKind kind) {
  const int n = alg.size();
  if (n > 12) throw std::invalid_argument("carrier too large for subset enumeration");
  std::vector<CrispSubset> out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    CrispSubset s{bits};
    if (is_filter(alg, s, kind)) out.push_back(s);
  }
  return out;
}

FilterTheoremReport check_filter_theorems(const FiniteBLAlgebra& alg) {
  auto impl = enumerate_filters(alg, FilterKind::Implicative);
  auto pos = enumerate_filters(alg, FilterKind::PositiveImplicative);
  auto fant = enumerate_filters(alg, FilterKind::Fantastic);

  auto contains = [](const std::vector<CrispSubset>& xs, CrispSubset s) {
    return std::binary_search(xs.begin(), xs.end(), s);
  };

  FilterTheoremReport report;
  auto inclusion = [&](const char* id, const std::vector<CrispSubset>& sub,
                       const std::vector<CrispSubset>& super) {
    FilterTheoremEntry entry{id, true, std::nullopt};
    for (CrispSubset s : sub)
      if (!contains(super, s)) {
        entry.pass = false;
        entry.counterexample = s;
        break;
      }
    report.entries.push_back(entry);
  };

  inclusion("implicative_subset_positive_implicative", impl, pos);
  inclusion("implicative_subset_fantastic", impl, fant);

  std::vector<CrispSubset> both;
  std::set_intersection(pos.begin(), pos.end(), fant.begin(), fant.end(),
                        std::back_inserter(both));
  FilterTheoremEntry eq{"implicative_equals_intersection", both == impl, std::nullopt};
  if (!eq.pass) {
    std::vector<CrispSubset> diff;
    std::set_symmetric_difference(both.begin(), both.end(), impl.begin(), impl.end(),
                                  std::back_inserter(diff));
    eq.counterexample = diff.front();
  }
  report.entries.push_back(eq);

  report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                [](const FilterTheoremEntry& e) { return e.pass; });
  return report;
}

} // namespace blfilt
