#pragma once

#include <string>
#include <vector>

#include "diffquot/bipoly.hpp"
#include "diffquot/operators.hpp"

namespace dq {

/// One summand coeff * l^lambda_exp * (delta^order_f f)(delta^order_g g) of
/// the two-factor rule of order r, indexed by 0 <= k <= l <= r:
///   coeff = C(r,l) C(l,k), lambda_exp = r - l,
///   order_f = r - k, order_g = k + r - l.
struct LeibnizTerm {
  unsigned l = 0;
  unsigned k = 0;
  BigInt coeff;
  unsigned lambda_exp = 0;
  unsigned order_f = 0;
  unsigned order_g = 0;

  friend bool operator==(const LeibnizTerm&, const LeibnizTerm&) = default;

  /// "c * l^e * D^a[f] * D^b[g]"; factors with a zero exponent are dropped
  /// (D^0[f] prints as f).
  std::string str() const;
};

/// All (r+1)(r+2)/2 terms, sorted by order_f then order_g, both descending.
/// (order_f, order_g) is unique per term, so no like-term merging happens.
struct LeibnizExpansion {
  Order r;
  std::vector<LeibnizTerm> terms;
};

/// l * delta(f) * delta(g) + delta(f) * g + f * delta(g).
BiPoly product_rule(const BiPoly& f, const BiPoly& g);

/// Throws InvalidOrder for r = 0.
LeibnizExpansion leibniz_terms(Order r);

BiPoly apply_expansion(const LeibnizExpansion& e, const BiPoly& f, const BiPoly& g);

/// Compares the l -> 0 slice of the order-r expansion with the textbook
/// sum C(r,k) f^(r-k) g^(k). Throws LambdaContaminated if f or g carries l.
bool classical_limit_check(const BiPoly& f, const BiPoly& g, Order r);

}  // namespace dq
