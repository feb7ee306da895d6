#include "blfilt/fuzzy.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace blfilt {

FuzzySet::FuzzySet(const FiniteBLAlgebra& alg, std::string name,
                   std::vector<UnitRational> membership)
    : alg_(&alg), name_(std::move(name)), membership_(std::move(membership)) {
  if (membership_.size() != static_cast<std::size_t>(alg.size()))
    throw std::invalid_argument("membership size does not match carrier");
}

std::string FuzzySet::describe() const {
  std::string out;
  for (int i = 0; i < alg_->size(); ++i) {
    if (i) out += " ";
    out += alg_->element_name(i) + "=" + membership_[i].str();
  }
  return out;
}

FuzzyPoint::FuzzyPoint(int support, UnitRational value) : support(support), value(std::move(value)) {
  if (this->value == UnitRational::zero())
    throw std::invalid_argument("fuzzy point value must be positive");
}

bool point_relation(const FuzzySet& f, const FuzzyPoint& p, PointRelation rel) {
  if (p.support < 0 || p.support >= f.algebra().size())
    throw std::out_of_range("unknown element index");
  const UnitRational& fx = f.at(p.support);
  // F(x) + t > 1 is evaluated as t > 1 - F(x) to stay inside [0, 1].
  switch (rel) {
    case PointRelation::Belongs: return fx >= p.value;
    case PointRelation::Quasi: return p.value > fx.complement();
    case PointRelation::BelongsOrQuasi: return fx >= p.value || p.value > fx.complement();
    case PointRelation::NotBelongs: return fx < p.value;
    case PointRelation::NotQuasi: return p.value <= fx.complement();
    case PointRelation::NotBelongsOrNotQuasi:
      return fx < p.value || p.value <= fx.complement();
  }
  return false;
}

CrispSubset level_set(const FuzzySet& f, const UnitRational& t) {
  if (t == UnitRational::zero()) throw std::invalid_argument("level threshold must be positive");
  CrispSubset s;
  for (int x = 0; x < f.algebra().size(); ++x)
    if (f.at(x) >= t) s.add(x);
  return s;
}

std::vector<UnitRational> critical_values(const FuzzySet& f) {
  std::vector<UnitRational> values = f.membership();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

FuzzySet parse_fuzzy_set(std::string_view text, const FiniteBLAlgebra& alg) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream ls(raw);
      toks.assign(std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>());
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks)) throw ParseError("expected 'fuzzyset' header", 1, 1);
  if (toks.size() != 4 || toks[0] != "fuzzyset" || toks[2] != "over")
    throw ParseError("expected 'fuzzyset <name> over <algebra>'", line_no, 1);
  std::string name = toks[1];
  if (toks[3] != alg.name())
    throw ParseError("fuzzy set declared over '" + toks[3] + "', expected '" + alg.name() + "'",
                     line_no, 1);

  std::vector<UnitRational> membership(alg.size());
  std::vector<bool> seen(alg.size(), false);
  while (true) {
    if (!next_tokens(toks)) throw ParseError("expected 'end'", line_no + 1, 1);
    if (toks[0] == "end") {
      if (toks.size() != 1) throw ParseError("unexpected tokens after 'end'", line_no, 1);
      break;
    }
    if (toks.size() != 3 || toks[1] != "=")
      throw ParseError("expected '<element> = <value>'", line_no, 1);
    auto idx = alg.index_of(toks[0]);
    if (!idx) throw ParseError("unknown element '" + toks[0] + "'", line_no, 1);
    if (seen[*idx]) throw ParseError("duplicate assignment for '" + toks[0] + "'", line_no, 1);
    try {
      membership[*idx] = UnitRational::parse(toks[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, 1);
    }
    seen[*idx] = true;
  }
  for (int i = 0; i < alg.size(); ++i)
    if (!seen[i])
      throw ParseError("missing assignment for element '" + alg.element_name(i) + "'", line_no, 1);

  return FuzzySet(alg, std::move(name), std::move(membership));
}

} // namespace blfilt
