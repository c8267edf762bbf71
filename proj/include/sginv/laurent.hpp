#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sginv {

using Integer = boost::multiprecision::cpp_int;

class LaurentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Single-variable Laurent polynomial with arbitrary-precision integer
// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  explicit LaurentPoly(char var = 't') : var_(var) {}
  LaurentPoly(char var, Terms terms);

  static LaurentPoly constant(char var, const Integer& c);
  static LaurentPoly monomial(char var, const Integer& c, int exponent);

  char var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Undefined (throws) for the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  Integer coefficient(int exponent) const;
  Integer lowest_coefficient() const { return terms_.begin()->second; }
  Integer leading_coefficient() const { return terms_.rbegin()->second; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  // Multiplies by c * x^k.
  LaurentPoly shifted(int k, const Integer& c = 1) const;
  // x -> x^-1.
  LaurentPoly inverted_variable() const;
  // x -> x^k.
  LaurentPoly substitute_power(int k) const;
  LaurentPoly pow(unsigned n) const;
  Integer evaluate(const Integer& x) const;  // x must be +-1 if negative exponents occur

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(int exponent, const Integer& c);
  void check_var(const LaurentPoly& other) const;

  char var_;
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

// The unit +-x^k making the lowest-degree term a positive constant.
LaurentPoly normalize_units(const LaurentPoly& p);

// Exact quotient a / b in the Laurent ring; throws if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& d, const LaurentPoly& p);

Integer content(const LaurentPoly& p);

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
using IntMatrix = std::vector<std::vector<Integer>>;

// Fraction-free determinant.
LaurentPoly bareiss_det(const PolyMatrix& m);
Integer bareiss_det(const IntMatrix& m);

// Ascending exponents, e.g. "-1 - A - A^2 + A^16".
std::string to_string(const LaurentPoly& p);
// [[exponent, coefficient], ...] ascending; coefficients outside the exactly
// representable double range become decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json integer_to_json(const Integer& n);

}  // namespace sginv
