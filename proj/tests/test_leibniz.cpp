#include "doctest.h"

#include <map>
#include <random>
#include <tuple>

#include "diffquot/errors.hpp"
#include "diffquot/leibniz.hpp"
#include "diffquot/random.hpp"
#include "oracles.hpp"

using dq::BigInt;
using dq::BiPoly;
using dq::LeibnizTerm;
using dq::Order;
using dq::Rational;

namespace {

const BiPoly x = BiPoly::x();
const BiPoly l = BiPoly::lambda();

// (order_f, order_g) -> (coefficient, lambda exponent)
using SymbolicSum = std::map<std::pair<unsigned, unsigned>, std::pair<BigInt, unsigned>>;

SymbolicSum collect(const dq::LeibnizExpansion& e) {
  SymbolicSum out;
  for (const auto& t : e.terms) out[{t.order_f, t.order_g}] = {t.coeff, t.lambda_exp};
  return out;
}

// Applies the product rule to each term c l^e (D^a f)(D^b g):
//   c l^(e+1) D^(a+1)f D^(b+1)g + c l^e D^(a+1)f D^b g + c l^e D^a f D^(b+1)g
// and merges like terms. Fails the test if merged terms disagree on the
// power of l.
SymbolicSum differentiate(const SymbolicSum& s) {
  SymbolicSum out;
  auto add = [&out](unsigned a, unsigned b, const BigInt& c, unsigned e) {
    auto [it, inserted] = out.try_emplace({a, b}, c, e);
    if (!inserted) {
      CHECK(it->second.second == e);
      it->second.first += c;
    }
  };
  for (const auto& [orders, ce] : s) {
    const auto [a, b] = orders;
    const auto& [c, e] = ce;
    add(a + 1, b + 1, c, e + 1);
    add(a + 1, b, c, e);
    add(a, b + 1, c, e);
  }
  return out;
}

}  // namespace

TEST_CASE("product_rule") {
  CHECK(product_rule(x, x) == 2 * x + l);
  CHECK(product_rule(x, x) == delta(x * x));
  std::mt19937_64 gen(31);
  dq::PolyShape deg4;
  deg4.max_deg_x = 4;
  for (int i = 0; i < 30; ++i) {
    const BiPoly p = dq::random_bipoly(gen, deg4);
    const BiPoly q = dq::random_bipoly(gen, deg4);
    CHECK(product_rule(BiPoly(1), p) == delta(p));
    // definitional side built from shift_x and divide_by_lambda directly
    const BiPoly pq = p * q;
    CHECK(product_rule(p, q) == divide_by_lambda(shift_x(pq) - pq));
  }
}

TEST_CASE("leibniz_terms r = 1 is the product rule") {
  const auto e = leibniz_terms(Order(1));
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0] == LeibnizTerm{0, 0, 1, 1, 1, 1});
  CHECK(e.terms[1] == LeibnizTerm{1, 0, 1, 0, 1, 0});
  CHECK(e.terms[2] == LeibnizTerm{1, 1, 1, 0, 0, 1});
}

TEST_CASE("leibniz_terms r = 2 golden list") {
  const auto e = leibniz_terms(Order(2));
  REQUIRE(e.terms.size() == 6);
  // canonical order: (order_f, order_g) descending
  CHECK(e.terms[0] == LeibnizTerm{0, 0, 1, 2, 2, 2});
  CHECK(e.terms[1] == LeibnizTerm{1, 0, 2, 1, 2, 1});
  CHECK(e.terms[2] == LeibnizTerm{2, 0, 1, 0, 2, 0});
  CHECK(e.terms[3] == LeibnizTerm{1, 1, 2, 1, 1, 2});
  CHECK(e.terms[4] == LeibnizTerm{2, 1, 2, 0, 1, 1});
  CHECK(e.terms[5] == LeibnizTerm{2, 2, 1, 0, 0, 2});
  CHECK(e.terms[0].str() == "1 * l^2 * D^2[f] * D^2[g]");
  CHECK(e.terms[2].str() == "1 * D^2[f] * g");
  CHECK(e.terms[5].str() == "1 * f * D^2[g]");

  // twice-applied product rule, symbolically
  const SymbolicSum once = collect(leibniz_terms(Order(1)));
  CHECK(differentiate(once) == collect(e));
}

TEST_CASE("leibniz_terms structure") {
  CHECK_THROWS_AS(leibniz_terms(Order(0)), dq::InvalidOrder);
  CHECK(leibniz_terms(Order(4)).terms.size() == 15);
  for (unsigned r = 1; r <= 10; ++r) {
    const auto e = leibniz_terms(Order(r));
    CHECK(e.terms.size() == (r + 1) * (r + 2) / 2);
    CHECK(collect(e).size() == e.terms.size());
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
      const auto& t = e.terms[i];
      CHECK(t.coeff >= 1);
      CHECK(t.lambda_exp == r - t.l);
      CHECK(t.order_f == r - t.k);
      CHECK(t.order_g == t.k + r - t.l);
      CHECK(t.k == r - t.order_f);
      CHECK(t.l == 2 * r - t.order_f - t.order_g);
      if (i > 0) {
        const auto& prev = e.terms[i - 1];
        CHECK(std::tie(prev.order_f, prev.order_g) > std::tie(t.order_f, t.order_g));
      }
    }
  }
}

TEST_CASE("induction step reproduces the next expansion") {
  for (unsigned r = 1; r <= 7; ++r)
    CHECK(differentiate(collect(leibniz_terms(Order(r)))) == collect(leibniz_terms(Order(r + 1))));
}

TEST_CASE("swap symmetry and the lambda-free slice") {
  for (unsigned r = 1; r <= 8; ++r) {
    const SymbolicSum s = collect(leibniz_terms(Order(r)));
    for (const auto& [orders, ce] : s) {
      const auto swapped = s.find({orders.second, orders.first});
      REQUIRE(swapped != s.end());
      CHECK(swapped->second == ce);
    }
    unsigned lambda_free = 0;
    for (const auto& t : leibniz_terms(Order(r)).terms) {
      if (t.lambda_exp != 0) continue;
      ++lambda_free;
      CHECK(t.l == r);
      CHECK(t.order_f + t.order_g == r);
      CHECK(t.coeff == dq::oracle::pascal_binom(r, t.order_g));
    }
    CHECK(lambda_free == r + 1);
  }
}

TEST_CASE("apply_expansion") {
  CHECK(apply_expansion(leibniz_terms(Order(1)), x, x) == 2 * x + l);
  CHECK(apply_expansion(leibniz_terms(Order(2)), x * x, x) == 6 * x + 6 * l);

  std::mt19937_64 gen(32);
  for (int i = 0; i < 30; ++i) {
    const BiPoly f = dq::random_bipoly(gen);
    const BiPoly g = dq::random_bipoly(gen);
    BiPoly oracle = f * g;
    for (int j = 0; j < 3; ++j) oracle = divide_by_lambda(shift_x(oracle) - oracle);
    CHECK(apply_expansion(leibniz_terms(Order(3)), f, g) == oracle);
  }
}

TEST_CASE("classical_limit_check") {
  CHECK(classical_limit_check(x * x, x * x * x, Order(2)));
  CHECK(subst_lambda_zero(apply_expansion(leibniz_terms(Order(2)), x * x, x * x * x)) ==
        20 * x * x * x);
  CHECK_THROWS_AS(classical_limit_check(x + l, x, Order(1)), dq::LambdaContaminated);
  CHECK_THROWS_AS(classical_limit_check(x, l, Order(1)), dq::LambdaContaminated);

  std::mt19937_64 gen(33);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = dq::oracle::random_lambda_free(gen);
    const BiPoly g = dq::oracle::random_lambda_free(gen);
    const unsigned r = 1 + static_cast<unsigned>(i % 5);
    CHECK(classical_limit_check(BiPoly(1), g, Order(r)));
    CHECK(classical_limit_check(f, g, Order(r)));
    // derivative oracle on the product
    CHECK(subst_lambda_zero(apply_expansion(leibniz_terms(Order(r)), f, g)) ==
          derivative_x(f * g, r));
  }
}
