#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blfilt {

// Raised by the text parsers. Positions are 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Finite residuated structure given by two n-by-n operation tables.
// The order is derived from the implication table (x <= y iff imp(x,y) == top),
// never taken from the element declaration order. Meet and join are computed
// from that order; a missing bound is stored as -1 and surfaces during
// validation. Instances are immutable after construction.
class FiniteBLAlgebra {
public:
  FiniteBLAlgebra(std::string name, std::vector<std::string> elements, int bottom, int top,
                  std::vector<std::vector<int>> odot, std::vector<std::vector<int>> imp);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int odot(int x, int y) const { return odot_[x][y]; }
  int imp(int x, int y) const { return imp_[x][y]; }
  bool leq(int x, int y) const { return leq_[x][y]; }
  int meet(int x, int y) const { return meet_[x][y]; } // -1 when no greatest lower bound
  int join(int x, int y) const { return join_[x][y]; } // -1 when no least upper bound
  int neg(int x) const { return imp_[x][bottom_]; }

  const std::string& element_name(int x) const { return elements_[x]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<int> index_of(std::string_view name) const;

private:
  std::string name_;
  std::vector<std::string> elements_;
  int bottom_;
  int top_;
  std::vector<std::vector<int>> odot_;
  std::vector<std::vector<int>> imp_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
};

struct AxiomViolation {
  std::string axiom;        // e.g. "adjointness"
  std::vector<int> witness; // first failing tuple in scan order
};

struct AxiomReport {
  bool valid = false;
  std::vector<AxiomViolation> violations; // at most one entry per axiom
};

struct PropertyResult {
  std::string property;
  bool pass = false;
  std::vector<int> witness; // empty when pass
};

struct PropertyReport {
  bool all_pass = false;
  std::vector<PropertyResult> results; // fixed order, one entry per law
};

// Line-oriented source format:
//   algebra <name>
//   elements <e1> ... <en>
//   bottom <ei>
//   top <ej>
//   odot:
//   <n rows of n element tokens>
//   imp:
//   <n rows of n element tokens>
//   end
// '#' starts a comment anywhere on a line. Throws ParseError.
FiniteBLAlgebra parse_algebra(std::string_view text);

// Inverse of parse_algebra up to comments and spacing.
std::string serialize_algebra(const FiniteBLAlgebra& alg);

// Checks the full axiom set: commutative monoid with unit top, derived order
// a bounded lattice, adjointness, divisibility, prelinearity. Records the
// lexicographically first witness per violated axiom.
AxiomReport validate_bl(const FiniteBLAlgebra& alg);

// Derived laws every valid algebra satisfies; each is evaluated exhaustively.
// Precondition: validate_bl(alg).valid. Throws std::invalid_argument otherwise.
PropertyReport check_arithmetic_properties(const FiniteBLAlgebra& alg);

} // namespace blfilt
