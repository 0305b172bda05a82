#include "diffquot/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "diffquot/errors.hpp"

namespace dq {

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rational& c, unsigned deg_x, unsigned deg_lambda) {
  BiPoly p;
  p.add_term(c, deg_x, deg_lambda);
  return p;
}

Rational BiPoly::coeff(unsigned deg_x, unsigned deg_lambda) const {
  const auto it = terms_.find(Monomial{deg_x, deg_lambda});
  return it == terms_.end() ? Rational() : it->second;
}

void BiPoly::add_term(const Rational& c, unsigned deg_x, unsigned deg_lambda) {
  if (c.is_zero()) return;
  const Monomial m{deg_x, deg_lambda};
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned BiPoly::deg_x() const {
  // map order puts the largest deg_x first
  return terms_.empty() ? 0 : terms_.begin()->first.deg_x;
}

unsigned BiPoly::deg_lambda() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_lambda);
  return d;
}

bool BiPoly::is_lambda_free() const { return deg_lambda() == 0; }

BiPoly BiPoly::operator-() const {
  BiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m.deg_x, m.deg_lambda);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m.deg_x, m.deg_lambda);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ca * cb, ma.deg_x + mb.deg_x, ma.deg_lambda + mb.deg_lambda);
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

void append_power(std::string& out, char var, unsigned e) {
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;

    const Rational mag = c.abs();
    const bool constant = m.deg_x == 0 && m.deg_lambda == 0;
    bool need_star = false;
    if (constant || mag != Rational(1)) {
      out += mag.str();
      need_star = true;
    }
    if (m.deg_x > 0) {
      if (need_star) out += "*";
      append_power(out, 'x', m.deg_x);
      need_star = true;
    }
    if (m.deg_lambda > 0) {
      if (need_star) out += "*";
      append_power(out, 'l', m.deg_lambda);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

BiPoly poly_add(const BiPoly& a, const BiPoly& b) { return a + b; }
BiPoly poly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }
BiPoly poly_scale(const BiPoly& a, const Rational& c) { return a * c; }

BiPoly poly_pow(const BiPoly& a, unsigned e) {
  BiPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= a;
  return out;
}

BiPoly shift_x(const BiPoly& p) {
  // rows[i][j] = C(i, j), built once per call up to deg_x(p)
  const unsigned top = p.deg_x();
  std::vector<std::vector<BigInt>> rows(top + 1);
  for (unsigned i = 0; i <= top; ++i) {
    rows[i].assign(i + 1, BigInt(1));
    for (unsigned j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }

  // c x^i l^e -> c sum_j C(i,j) x^(i-j) l^(e+j)
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (unsigned j = 0; j <= m.deg_x; ++j)
      out.add_term(c * Rational(rows[m.deg_x][j]), m.deg_x - j, m.deg_lambda + j);
  }
  return out;
}

BiPoly divide_by_lambda(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.deg_lambda == 0) {
      throw NotDivisible("divide_by_lambda: term of degree " + std::to_string(m.deg_x) +
                         " in x has no factor l");
    }
    out.add_term(c, m.deg_x, m.deg_lambda - 1);
  }
  return out;
}

BiPoly multiply_by_lambda(const BiPoly& p, unsigned e) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(c, m.deg_x, m.deg_lambda + e);
  return out;
}

Rational eval(const BiPoly& p, const Rational& x0, const Rational& lambda0) {
  // powers are cached per call; the term map is small
  std::vector<Rational> xp{Rational(1)};
  std::vector<Rational> lp{Rational(1)};
  Rational acc;
  for (const auto& [m, c] : p.terms()) {
    while (xp.size() <= m.deg_x) xp.push_back(xp.back() * x0);
    while (lp.size() <= m.deg_lambda) lp.push_back(lp.back() * lambda0);
    acc += c * xp[m.deg_x] * lp[m.deg_lambda];
  }
  return acc;
}

double eval_float(const BiPoly& p, double x0, double lambda0) {
  // Horner in x over lambda-polynomial coefficients
  const unsigned top = p.deg_x();
  std::vector<double> by_x(top + 1, 0.0);
  std::vector<std::vector<std::pair<unsigned, double>>> lam(top + 1);
  for (const auto& [m, c] : p.terms()) lam[m.deg_x].emplace_back(m.deg_lambda, c.to_double());
  for (unsigned i = 0; i <= top; ++i) {
    double acc = 0.0;
    for (const auto& [e, c] : lam[i]) acc += c * std::pow(lambda0, static_cast<int>(e));
    by_x[i] = acc;
  }
  double acc = 0.0;
  for (unsigned i = top + 1; i-- > 0;) acc = acc * x0 + by_x[i];
  return acc;
}

BiPoly subst_lambda_zero(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.deg_lambda == 0) out.add_term(c, m.deg_x, 0);
  return out;
}

BiPoly derivative_x(const BiPoly& p, unsigned r) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.deg_x < r) continue;
    BigInt falling = 1;
    for (unsigned i = 0; i < r; ++i) falling *= m.deg_x - i;
    out.add_term(c * Rational(falling), m.deg_x - r, m.deg_lambda);
  }
  return out;
}

}  // namespace dq
