#pragma once

#include "sginv/diagram.hpp"
#include "sginv/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace sginv {

class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Edge name ("e1", "e2", ...) to integer weight.
using WeightMap = std::map<std::string, long long>;

struct BalanceReport {
  bool balanced = true;
  std::vector<std::pair<int, long long>> residuals;  // (vertex id, sum of eps_i * w_i)
};

// Throws InvariantError if an edge has no weight or a weight names no edge.
BalanceReport check_balanced(const Diagram& d, const WeightMap& w);

struct AlexanderMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  PolyMatrix entries;  // crossing rows, then vertex rows; one column per arc
};

AlexanderMatrix build_alexander_matrix(const Diagram& d, const WeightMap& w);

// Gcd of all k x k minors, unit-normalized; 1 when k = 0, 0 when every minor
// vanishes.
LaurentPoly gcd_of_minors(const AlexanderMatrix& m, std::size_t k);
Integer gcd_of_minors(const IntMatrix& m, std::size_t rows, std::size_t cols, std::size_t k);

// Gcd of the (r - 1)-minors for r relations. Each closed component that
// never passes under (a free loop, or a closed arc with no endpoints) raises
// the minor size by one, so split diagrams give 0 consistently. A diagram
// with no relations and at most one such component gets 1.
LaurentPoly alexander_polynomial(const Diagram& d, const WeightMap& w);
Integer graph_determinant(const Diagram& d, const WeightMap& w);

// Letters are +-(generator index + 1).
using Word = std::vector<int>;

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;  // crossing relators, then vertex relators
};

Word free_reduce(const Word& w);
std::string to_string(const Word& w);  // "x1 x2^-1 ..."; "1" for the empty word

// Arc generators; c^-1 b^-1 a b at each crossing (roles as in the matrix) and
// a_1^eps_1 ... a_n^eps_n at each vertex. Relators are freely reduced.
Presentation wirtinger_presentation(const Diagram& d);

// Free rank of the abelianized group.
std::size_t abelianization_rank(const Presentation& p);

}  // namespace sginv
