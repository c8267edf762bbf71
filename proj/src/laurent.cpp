#include "sginv/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sginv {

namespace {

// Dense ordinary polynomial, index = degree, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Dense dense_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Dense dense_scale(Dense a, const Integer& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

// Exact quotient; returns false when b does not divide a over Z.
bool dense_divide(Dense a, const Dense& b, Dense& quotient) {
  if (b.empty()) throw LaurentError("division by zero polynomial");
  quotient.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
  const Integer& lead = b.back();
  while (!a.empty()) {
    if (a.size() < b.size()) return false;
    Integer q, r;
    boost::multiprecision::divide_qr(a.back(), lead, q, r);
    if (r != 0) return false;
    std::size_t shift = a.size() - b.size();
    quotient[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  trim(quotient);
  return true;
}

Dense dense_exact_divide(const Dense& a, const Dense& b) {
  Dense q;
  if (!dense_divide(a, b, q)) throw LaurentError("inexact polynomial division");
  return q;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a;
  std::size_t e = a.size() - b.size() + 1;
  const Integer& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Integer top = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
    trim(a);
    --e;
  }
  Integer factor = boost::multiprecision::pow(lead, static_cast<unsigned>(e));
  return dense_scale(std::move(a), factor);
}

Integer dense_content(const Dense& a) {
  Integer g = 0;
  for (const auto& x : a) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Dense primitive_part(const Dense& a) {
  Integer c = dense_content(a);
  if (c == 0) return {};
  if (a.back() < 0) c = -c;
  Dense r = a;
  for (auto& x : r) x /= c;
  return r;
}

// Subresultant PRS gcd over Z[x].
Dense dense_gcd(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a;
  Integer d = boost::multiprecision::gcd(dense_content(a), dense_content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    std::size_t delta = a.size() - b.size();
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = Dense{1};
      break;
    }
    a = std::move(b);
    Integer divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
    for (auto& x : r) x /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = boost::multiprecision::pow(g, static_cast<unsigned>(delta));
      Integer den = boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
      h = num / den;
    }
  }
  return dense_scale(primitive_part(b), d);
}

// Splits p = x^shift * dense.
Dense to_dense(const LaurentPoly& p, int& shift) {
  if (p.is_zero()) {
    shift = 0;
    return {};
  }
  shift = p.min_degree();
  Dense r(static_cast<std::size_t>(p.max_degree() - shift + 1));
  for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(e - shift)] = c;
  return r;
}

LaurentPoly from_dense(char var, const Dense& a, int shift) {
  LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) terms.emplace(static_cast<int>(i) + shift, a[i]);
  return LaurentPoly(var, std::move(terms));
}

}  // namespace

LaurentPoly::LaurentPoly(char var, Terms terms) : var_(var) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::constant(char var, const Integer& c) { return monomial(var, c, 0); }

LaurentPoly LaurentPoly::monomial(char var, const Integer& c, int exponent) {
  LaurentPoly p(var);
  p.add_term(exponent, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw LaurentError("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw LaurentError("degree of zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_var(const LaurentPoly& other) const {
  if (var_ != other.var_)
    throw LaurentError(std::string("variable mismatch: ") + var_ + " vs " + other.var_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_var(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_var(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  check_var(other);
  LaurentPoly r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k, const Integer& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e + k, x * c);
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(var_, 1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x != 1 && x != -1) throw LaurentError("negative exponent at non-unit point");
    Integer power = boost::multiprecision::pow(x, static_cast<unsigned>(e < 0 ? -e : e));
    sum += c * power;
  }
  return sum;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

LaurentPoly normalize_units(const LaurentPoly& p) {
  if (p.is_zero()) throw LaurentError("cannot normalize the zero polynomial");
  return p.shifted(-p.min_degree(), p.lowest_coefficient() < 0 ? -1 : 1);
}

Integer content(const LaurentPoly& p) {
  int shift = 0;
  return dense_content(to_dense(p, shift));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var()) throw LaurentError("variable mismatch in division");
  if (b.is_zero()) throw LaurentError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.var());
  int sa = 0, sb = 0;
  Dense q = dense_exact_divide(to_dense(a, sa), to_dense(b, sb));
  return from_dense(a.var(), q, sa - sb);
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  if (d.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  int sd = 0, sp = 0;
  Dense q;
  return dense_divide(to_dense(p, sp), to_dense(d, sd), q);
}

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.var() != q.var()) throw LaurentError("variable mismatch in gcd");
  if (p.is_zero() && q.is_zero()) throw LaurentError("gcd of two zero polynomials");
  if (q.is_zero()) return normalize_units(p);
  if (p.is_zero()) return normalize_units(q);
  int sp = 0, sq = 0;
  Dense g = dense_gcd(to_dense(p, sp), to_dense(q, sq));
  return normalize_units(from_dense(p.var(), g, 0));
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps) {
  if (ps.empty()) throw LaurentError("gcd of empty list");
  LaurentPoly g(ps.front().var());
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize_units(p) : laurent_gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly bareiss_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw LaurentError("determinant of non-square matrix");
  char var = 't';
  if (n > 0 && !m[0].empty()) var = m[0][0].var();
  if (n == 0) return LaurentPoly::constant(var, 1);

  // Clear each row to ordinary polynomials; remember the unit taken out.
  long total_shift = 0;
  std::vector<std::vector<Dense>> a(n, std::vector<Dense>(n));
  for (std::size_t i = 0; i < n; ++i) {
    int row_min = 0;
    bool any = false;
    for (const auto& entry : m[i]) {
      if (entry.var() != var) throw LaurentError("variable mismatch in matrix");
      if (entry.is_zero()) continue;
      row_min = any ? std::min(row_min, entry.min_degree()) : entry.min_degree();
      any = true;
    }
    if (!any) return LaurentPoly(var);
    total_shift += row_min;
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      Dense d = to_dense(m[i][j], s);
      if (!d.empty()) d.insert(d.begin(), static_cast<std::size_t>(s - row_min), Integer(0));
      a[i][j] = std::move(d);
    }
  }

  int sign = 1;
  Dense prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].empty()) ++pivot;
      if (pivot == n) return LaurentPoly(var);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Dense num = dense_sub(dense_mul(a[i][j], a[k][k]), dense_mul(a[i][k], a[k][j]));
        a[i][j] = num.empty() ? Dense{} : dense_exact_divide(num, prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  return from_dense(var, a[n - 1][n - 1], static_cast<int>(total_shift)).shifted(0, sign);
}

Integer bareiss_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw LaurentError("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << p.var();
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

nlohmann::json integer_to_json(const Integer& n) {
  static const Integer limit = Integer(1) << 53;
  if (n <= limit && n >= -limit) return n.convert_to<long long>();
  return n.str();
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(nlohmann::json::array({e, integer_to_json(c)}));
  return out;
}

}  // namespace sginv
