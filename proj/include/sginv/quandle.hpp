#pragma once

#include "sginv/diagram.hpp"
#include "sginv/laurent.hpp"

#include <string>
#include <vector>

namespace sginv {

class QuandleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using QuandleTable = std::vector<std::vector<int>>;

struct QuandleViolation {
  std::string axiom;  // "axiom-1", "axiom-2", "axiom-3", "range"
  std::vector<int> witnesses;
  friend bool operator==(const QuandleViolation&, const QuandleViolation&) = default;
};
std::string to_string(const QuandleViolation& v);

// Checks x > x = x, right-invertibility via inv, and right self-distributivity.
// Throws QuandleError on ragged or mismatched tables.
std::vector<QuandleViolation> verify_quandle(const QuandleTable& op, const QuandleTable& inv);
// Same, with inv derived from op where each column map is a bijection.
std::vector<QuandleViolation> verify_quandle(const QuandleTable& op);

class FiniteQuandle {
 public:
  // Throws QuandleError unless op is a quandle.
  static FiniteQuandle from_table(const QuandleTable& op);

  int order() const { return static_cast<int>(op_.size()); }
  int op(int x, int y) const { return op_[x][y]; }
  int inv(int x, int y) const { return inv_[x][y]; }
  // x >^e y for e = +-1.
  int act(int x, int y, int e) const { return e > 0 ? op_[x][y] : inv_[x][y]; }
  const QuandleTable& table() const { return op_; }

 private:
  QuandleTable op_;
  QuandleTable inv_;
};

FiniteQuandle dihedral_quandle(int n);  // x > y = 2y - x mod n
FiniteQuandle trivial_quandle(int n);   // x > y = x

// {"n": 3, "op": [[...], ...]}
FiniteQuandle parse_quandle(const std::string& json_text);

// Arc colorings with under_out = under_in >^sign over at every crossing, and
// at every vertex the map x -> (..(x >^e1 b1)..) >^en bn, taken in stored
// order, fixing the color of every arc. Free loops are arcs touching no
// crossing.
Integer count_colorings(const Diagram& d, const FiniteQuandle& q);

// A non-constant coloring by the dihedral quandle of odd prime order p exists.
bool is_p_colorable(const Diagram& d, int p);

}  // namespace sginv
