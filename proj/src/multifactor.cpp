#include "diffquot/multifactor.hpp"

#include <stdexcept>
#include <string>

#include "diffquot/errors.hpp"

namespace dq {

FactorList::FactorList(std::vector<BiPoly> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("FactorList: at least one factor required");
}

TruncatedSeries::TruncatedSeries(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
}

BiPoly FactorList::product() const {
  BiPoly out(1);
  for (const auto& f : factors_) out *= f;
  return out;
}

bool check_multiplicativity(const FactorList& fs, Order r) {
  BiPoly rhs(1);
  for (const auto& f : fs) rhs *= L_pow(f, r);
  return L_pow(fs.product(), r) == rhs;
}

BiPoly L_pow_expanded(const BiPoly& f, Order k) {
  BiPoly out;
  BiPoly d = f;
  for (unsigned j = 0; j <= k.value && !d.is_zero(); ++j) {
    out += multiply_by_lambda(d, j) * Rational(binom(k.value, j));
    d = delta(d);
  }
  return out;
}

namespace {

Rational signed_binom(unsigned r, unsigned k) {
  Rational c(binom(r, k));
  return (r - k) % 2 == 0 ? c : -c;
}

}  // namespace

BiPoly multi_delta(const FactorList& fs, Order r) {
  if (r.value == 0) throw InvalidOrder("multi_delta: order must be a positive integer r");
  BiPoly sum;
  for (unsigned k = 0; k <= r.value; ++k) {
    BiPoly prod(1);
    for (const auto& f : fs) prod *= L_pow_expanded(f, Order(k));
    sum += prod * signed_binom(r.value, k);
  }
  for (unsigned i = 0; i < r.value; ++i) {
    try {
      sum = divide_by_lambda(sum);
    } catch (const NotDivisible& e) {
      throw InternalDivisibilityFailure("multi_delta: alternating sum not divisible by l^" +
                                        std::to_string(r.value) + " (pass " +
                                        std::to_string(i + 1) + "): " + e.what());
    }
  }
  return sum;
}

BiPoly forward_binomial(const FactorList& fs, Order r) {
  BiPoly shifted = fs.product();
  BiPoly out;
  for (unsigned k = 0; k <= r.value; ++k) {
    out += shifted * signed_binom(r.value, k);
    if (k < r.value) shifted = L(shifted);
  }
  return out;
}

BiPoly inverse_binomial(const FactorList& fs, Order r) {
  BiPoly d = fs.product();
  BiPoly out;
  for (unsigned k = 0; k <= r.value && !d.is_zero(); ++k) {
    out += multiply_by_lambda(d, k) * Rational(binom(r.value, k));
    d = delta(d);
  }
  return out;
}

std::vector<BiPoly> binomial_transform(std::span<const BiPoly> a) {
  std::vector<BiPoly> b(a.size());
  for (unsigned r = 0; r < a.size(); ++r)
    for (unsigned k = 0; k <= r; ++k) b[r] += a[k] * Rational(binom(r, k));
  return b;
}

std::vector<BiPoly> inverse_binomial_transform(std::span<const BiPoly> b) {
  std::vector<BiPoly> a(b.size());
  for (unsigned r = 0; r < b.size(); ++r)
    for (unsigned k = 0; k <= r; ++k) a[r] += b[k] * signed_binom(r, k);
  return a;
}

EgfPair egf_pair(const FactorList& fs, unsigned order) {
  std::vector<BiPoly> a;
  std::vector<BiPoly> abar;
  a.reserve(order + 1);
  abar.reserve(order + 1);
  const BiPoly product = fs.product();
  BiPoly d = product;
  BiPoly shifted = product;
  for (unsigned r = 0; r <= order; ++r) {
    a.push_back(multiply_by_lambda(d, r));
    abar.push_back(shifted);
    if (r == order) break;
    d = delta(d);
    shifted = L(shifted);
  }
  return EgfPair{TruncatedSeries(std::move(a)), TruncatedSeries(std::move(abar))};
}

bool egf_check(const TruncatedSeries& a, const TruncatedSeries& abar) {
  if (a.order() != abar.order())
    throw OrderMismatch("egf_check: truncation orders " + std::to_string(a.order()) + " and " +
                        std::to_string(abar.order()) + " differ");
  return binomial_transform(a.coeffs()) == abar.coeffs();
}

}  // namespace dq
