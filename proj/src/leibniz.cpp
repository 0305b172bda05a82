#include "diffquot/leibniz.hpp"

#include <algorithm>
#include <tuple>

#include "diffquot/errors.hpp"

namespace dq {

namespace {

std::vector<BiPoly> delta_chain(const BiPoly& p, unsigned top) {
  std::vector<BiPoly> chain{p};
  chain.reserve(top + 1);
  for (unsigned i = 1; i <= top; ++i) chain.push_back(delta(chain.back()));
  return chain;
}

void append_factor(std::string& out, const std::string& text) {
  out += " * ";
  out += text;
}

std::string delta_factor(unsigned order, char name) {
  if (order == 0) return std::string(1, name);
  return "D^" + std::to_string(order) + "[" + name + "]";
}

}  // namespace

std::string LeibnizTerm::str() const {
  std::string out = coeff.get_str();
  if (lambda_exp > 0) append_factor(out, "l^" + std::to_string(lambda_exp));
  append_factor(out, delta_factor(order_f, 'f'));
  append_factor(out, delta_factor(order_g, 'g'));
  return out;
}

BiPoly product_rule(const BiPoly& f, const BiPoly& g) {
  const BiPoly df = delta(f);
  const BiPoly dg = delta(g);
  return multiply_by_lambda(df * dg) + df * g + f * dg;
}

LeibnizExpansion leibniz_terms(Order r) {
  if (r.value == 0)
    throw InvalidOrder("leibniz_terms: order must be a positive integer r");
  const unsigned n = r.value;
  LeibnizExpansion e{r, {}};
  e.terms.reserve((n + 1) * (n + 2) / 2);
  for (unsigned l = 0; l <= n; ++l) {
    const BigInt outer = binom(n, l);
    for (unsigned k = 0; k <= l; ++k) {
      e.terms.push_back(LeibnizTerm{l, k, outer * binom(l, k), n - l, n - k, k + n - l});
    }
  }
  std::sort(e.terms.begin(), e.terms.end(), [](const LeibnizTerm& a, const LeibnizTerm& b) {
    return std::tie(a.order_f, a.order_g) > std::tie(b.order_f, b.order_g);
  });
  return e;
}

BiPoly apply_expansion(const LeibnizExpansion& e, const BiPoly& f, const BiPoly& g) {
  // every order_f and order_g is at most r
  const auto fs = delta_chain(f, e.r.value);
  const auto gs = delta_chain(g, e.r.value);
  BiPoly out;
  for (const auto& t : e.terms) {
    const BiPoly& a = fs[t.order_f];
    const BiPoly& b = gs[t.order_g];
    if (a.is_zero() || b.is_zero()) continue;
    out += multiply_by_lambda(a * b, t.lambda_exp) * Rational(t.coeff);
  }
  return out;
}

bool classical_limit_check(const BiPoly& f, const BiPoly& g, Order r) {
  if (!f.is_lambda_free() || !g.is_lambda_free())
    throw LambdaContaminated("classical_limit_check: inputs must be free of l");
  const BiPoly limit = subst_lambda_zero(apply_expansion(leibniz_terms(r), f, g));
  BiPoly classical;
  for (unsigned k = 0; k <= r.value; ++k) {
    classical += derivative_x(f, r.value - k) * derivative_x(g, k) * Rational(binom(r.value, k));
  }
  return limit == classical;
}

}  // namespace dq
