#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "diffquot/rational.hpp"

namespace dq {

/// Exponent pair of a monomial x^deg_x * l^deg_lambda.
struct Monomial {
  unsigned deg_x = 0;
  unsigned deg_lambda = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in Q[x, l], where l is the formal step lambda.
///
/// Terms are kept in canonical form: no zero coefficients are stored, and
/// iteration runs in rendering order (deg_x descending, then deg_lambda
/// descending). Two BiPoly values are equal iff their term maps are equal.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly monomial(const Rational& c, unsigned deg_x, unsigned deg_lambda);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly lambda() { return monomial(1, 0, 1); }
  static BiPoly lambda_pow(unsigned e) { return monomial(1, 0, e); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^deg_x l^deg_lambda (zero if absent).
  Rational coeff(unsigned deg_x, unsigned deg_lambda) const;

  /// Adds c * x^deg_x l^deg_lambda, keeping canonical form.
  void add_term(const Rational& c, unsigned deg_x, unsigned deg_lambda);

  /// Highest power of x present; 0 for constants and the zero polynomial.
  unsigned deg_x() const;
  unsigned deg_lambda() const;
  bool is_lambda_free() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(BiPoly a, int c) { return a *= Rational(c); }
  friend BiPoly operator*(int c, BiPoly a) { return a *= Rational(c); }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Canonical text, e.g. "3*x^2*l + 1/2*l^2 - x". The zero polynomial is "0".
  std::string str() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

BiPoly poly_add(const BiPoly& a, const BiPoly& b);
BiPoly poly_mul(const BiPoly& a, const BiPoly& b);
BiPoly poly_scale(const BiPoly& a, const Rational& c);
BiPoly poly_pow(const BiPoly& a, unsigned e);

/// p(x + l, l), expanded monomial by monomial with binomial rows.
BiPoly shift_x(const BiPoly& p);

/// q with l * q = p. Throws NotDivisible if some term has deg_lambda = 0.
BiPoly divide_by_lambda(const BiPoly& p);

/// p * l^e.
BiPoly multiply_by_lambda(const BiPoly& p, unsigned e = 1);

Rational eval(const BiPoly& p, const Rational& x0, const Rational& lambda0);
double eval_float(const BiPoly& p, double x0, double lambda0);

/// Drops every term carrying l (the l -> 0 specialization).
BiPoly subst_lambda_zero(const BiPoly& p);

/// r-th partial derivative in x.
BiPoly derivative_x(const BiPoly& p, unsigned r);

}  // namespace dq
