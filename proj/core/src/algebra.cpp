#include "blfilt/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace blfilt {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Whitespace-separated tokens grouped by line, comments stripped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({std::string(line.substr(i, j - i)), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

} // namespace

FiniteBLAlgebra::FiniteBLAlgebra(std::string name, std::vector<std::string> elements, int bottom,
                                 int top, std::vector<std::vector<int>> odot,
                                 std::vector<std::vector<int>> imp)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      bottom_(bottom),
      top_(top),
      odot_(std::move(odot)),
      imp_(std::move(imp)) {
  const int n = size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq_[x][y] = imp_[x][y] == top_;

  meet_.assign(n, std::vector<int>(n, -1));
  join_.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) { // greatest lower bound if one exists
        if (!leq_[z][x] || !leq_[z][y]) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w)
          if (leq_[w][x] && leq_[w][y] && !leq_[w][z]) greatest = false;
        if (greatest) {
          meet_[x][y] = z;
          break;
        }
      }
      for (int z = 0; z < n; ++z) { // least upper bound if one exists
        if (!leq_[x][z] || !leq_[y][z]) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
          if (leq_[x][w] && leq_[y][w] && !leq_[z][w]) least = false;
        if (least) {
          join_[x][y] = z;
          break;
        }
      }
    }
  }
}

std::optional<int> FiniteBLAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == name) return i;
  return std::nullopt;
}

FiniteBLAlgebra parse_algebra(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t row = 0;

  auto need_line = [&](const char* what) -> const std::vector<Token>& {
    if (row >= lines.size()) {
      int last_line = lines.empty() ? 1 : lines.back().front().line + 1;
      throw ParseError(std::string("expected ") + what, last_line, 1);
    }
    return lines[row];
  };

  auto keyword_line = [&](const char* kw, std::size_t exact_tokens) -> const std::vector<Token>& {
    const auto& toks = need_line(kw);
    if (toks[0].text != kw)
      throw ParseError("expected '" + std::string(kw) + "', found '" + toks[0].text + "'",
                       toks[0].line, toks[0].column);
    if (exact_tokens != 0 && toks.size() != exact_tokens)
      throw ParseError("expected " + std::to_string(exact_tokens - 1) + " argument(s) after '" +
                           kw + "'",
                       toks[0].line, toks[0].column);
    return toks;
  };

  const auto& header = keyword_line("algebra", 2);
  std::string name = header[1].text;
  ++row;

  const auto& elem_line = keyword_line("elements", 0);
  if (elem_line.size() < 3)
    throw ParseError("at least two elements required", elem_line[0].line, elem_line[0].column);
  std::vector<std::string> elements;
  for (std::size_t i = 1; i < elem_line.size(); ++i) {
    const Token& t = elem_line[i];
    if (std::find(elements.begin(), elements.end(), t.text) != elements.end())
      throw ParseError("duplicate element '" + t.text + "'", t.line, t.column);
    elements.push_back(t.text);
  }
  const int n = static_cast<int>(elements.size());
  ++row;

  auto element_index = [&](const Token& t) -> int {
    auto it = std::find(elements.begin(), elements.end(), t.text);
    if (it == elements.end())
      throw ParseError("unknown element '" + t.text + "'", t.line, t.column);
    return static_cast<int>(it - elements.begin());
  };

  const auto& bottom_line = keyword_line("bottom", 2);
  int bottom = element_index(bottom_line[1]);
  ++row;
  const auto& top_line = keyword_line("top", 2);
  int top = element_index(top_line[1]);
  ++row;

  auto read_table = [&](const char* label) {
    const auto& head = need_line(label);
    if (head[0].text != label || head.size() != 1)
      throw ParseError("expected '" + std::string(label) + "'", head[0].line, head[0].column);
    ++row;
    std::vector<std::vector<int>> table;
    for (int r = 0; r < n; ++r) {
      const auto& toks = need_line("table row");
      if (toks.size() != static_cast<std::size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " entries in table row, found " +
                             std::to_string(toks.size()),
                         toks[0].line, toks[0].column);
      std::vector<int> cells;
      cells.reserve(n);
      for (const Token& t : toks) cells.push_back(element_index(t));
      table.push_back(std::move(cells));
      ++row;
    }
    return table;
  };

  auto odot = read_table("odot:");
  auto imp = read_table("imp:");

  keyword_line("end", 1);
  ++row;
  if (row != lines.size()) {
    const Token& t = lines[row][0];
    throw ParseError("unexpected content after 'end'", t.line, t.column);
  }

  return FiniteBLAlgebra(std::move(name), std::move(elements), bottom, top, std::move(odot),
                         std::move(imp));
}

std::string serialize_algebra(const FiniteBLAlgebra& alg) {
  std::ostringstream out;
  out << "algebra " << alg.name() << "\n";
  out << "elements";
  for (const auto& e : alg.elements()) out << " " << e;
  out << "\n";
  out << "bottom " << alg.element_name(alg.bottom()) << "\n";
  out << "top " << alg.element_name(alg.top()) << "\n";
  const int n = alg.size();
  auto table = [&](const char* label, auto&& op) {
    out << label << "\n";
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) out << " ";
        out << alg.element_name(op(x, y));
      }
      out << "\n";
    }
  };
  table("odot:", [&](int x, int y) { return alg.odot(x, y); });
  table("imp:", [&](int x, int y) { return alg.imp(x, y); });
  out << "end\n";
  return out.str();
}

AxiomReport validate_bl(const FiniteBLAlgebra& alg) {
  AxiomReport report;
  const int n = alg.size();
  auto fail = [&](const char* axiom, std::vector<int> witness) {
    report.violations.push_back({axiom, std::move(witness)});
  };

  for (int x = 0; x < n; ++x) {
    if (alg.odot(alg.top(), x) != x || alg.odot(x, alg.top()) != x) {
      fail("monoid_identity", {x});
      break;
    }
  }

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (alg.odot(x, y) != alg.odot(y, x)) {
          fail("monoid_commutative", {x, y});
          return;
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (alg.odot(alg.odot(x, y), z) != alg.odot(x, alg.odot(y, z))) {
            fail("monoid_associative", {x, y, z});
            return;
          }
  }();

  for (int x = 0; x < n; ++x) {
    if (!alg.leq(x, x)) {
      fail("order_reflexive", {x});
      break;
    }
  }

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && alg.leq(x, y) && alg.leq(y, x)) {
          fail("order_antisymmetric", {x, y});
          return;
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (alg.leq(x, y) && alg.leq(y, z) && !alg.leq(x, z)) {
            fail("order_transitive", {x, y, z});
            return;
          }
  }();

  for (int x = 0; x < n; ++x) {
    if (!alg.leq(alg.bottom(), x) || !alg.leq(x, alg.top())) {
      fail("order_bounds", {x});
      break;
    }
  }

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (alg.meet(x, y) < 0) {
          fail("meet_exists", {x, y});
          return;
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (alg.join(x, y) < 0) {
          fail("join_exists", {x, y});
          return;
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (alg.leq(z, alg.imp(x, y)) != alg.leq(alg.odot(x, z), y)) {
            fail("adjointness", {x, y, z});
            return;
          }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (alg.meet(x, y) < 0) continue; // reported by meet_exists
        if (alg.meet(x, y) != alg.odot(x, alg.imp(x, y))) {
          fail("divisibility", {x, y});
          return;
        }
      }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int j = alg.join(alg.imp(x, y), alg.imp(y, x));
        if (j < 0) continue; // reported by join_exists
        if (j != alg.top()) {
          fail("prelinearity", {x, y});
          return;
        }
      }
  }();

  report.valid = report.violations.empty();
  return report;
}

PropertyReport check_arithmetic_properties(const FiniteBLAlgebra& alg) {
  if (!validate_bl(alg).valid)
    throw std::invalid_argument("check_arithmetic_properties requires a valid algebra");

  PropertyReport report;
  const int n = alg.size();

  auto scan2 = [&](const char* id, auto&& pred) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!pred(x, y)) {
          report.results.push_back({id, false, {x, y}});
          return;
        }
    report.results.push_back({id, true, {}});
  };
  auto scan3 = [&](const char* id, auto&& pred) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!pred(x, y, z)) {
            report.results.push_back({id, false, {x, y, z}});
            return;
          }
    report.results.push_back({id, true, {}});
  };
  auto scan1 = [&](const char* id, auto&& pred) {
    for (int x = 0; x < n; ++x)
      if (!pred(x)) {
        report.results.push_back({id, false, {x}});
        return;
      }
    report.results.push_back({id, true, {}});
  };

  scan2("order_from_implication",
        [&](int x, int y) { return alg.leq(x, y) == (alg.imp(x, y) == alg.top()); });

  scan3("curry", [&](int x, int y, int z) {
    int lhs = alg.imp(x, alg.imp(y, z));
    return lhs == alg.imp(alg.odot(x, y), z) && lhs == alg.imp(y, alg.imp(x, z));
  });

  scan2("product_below_meet",
        [&](int x, int y) { return alg.leq(alg.odot(x, y), alg.meet(x, y)); });

  scan3("implication_monotone", [&](int x, int y, int z) {
    int xy = alg.imp(x, y);
    return alg.leq(xy, alg.imp(alg.imp(z, x), alg.imp(z, y))) &&
           alg.leq(xy, alg.imp(alg.imp(y, z), alg.imp(x, z)));
  });

  scan1("negation_shift", [&](int x) {
    return alg.imp(x, alg.neg(x)) == alg.imp(alg.neg(alg.neg(x)), alg.neg(x));
  });

  scan1("complement_disjoint", [&](int x) {
    if (alg.join(x, alg.neg(x)) != alg.top()) return true;
    return alg.meet(x, alg.neg(x)) == alg.bottom();
  });

  scan2("join_from_implication", [&](int x, int y) {
    int left = alg.imp(alg.imp(x, y), y);
    int right = alg.imp(alg.imp(y, x), x);
    return alg.join(x, y) == alg.meet(left, right);
  });

  report.all_pass = std::all_of(report.results.begin(), report.results.end(),
                                [](const PropertyResult& r) { return r.pass; });
  return report;
}

} // namespace blfilt
