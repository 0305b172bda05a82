#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "diffquot/bipoly.hpp"
#include "diffquot/operators.hpp"

namespace dq {

/// Nonempty list of factors f_1 ... f_n.
class FactorList {
 public:
  /// Throws std::invalid_argument when empty.
  explicit FactorList(std::vector<BiPoly> factors);
  FactorList(std::initializer_list<BiPoly> factors)
      : FactorList(std::vector<BiPoly>(factors)) {}

  std::size_t size() const { return factors_.size(); }
  const BiPoly& operator[](std::size_t i) const { return factors_[i]; }
  std::span<const BiPoly> factors() const { return factors_; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  BiPoly product() const;

 private:
  std::vector<BiPoly> factors_;
};

/// Exponential generating function truncated after t^order; coefficient r
/// multiplies t^r / r!, so there are always order + 1 coefficients.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument when coeffs is empty.
  explicit TruncatedSeries(std::vector<BiPoly> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }
  const BiPoly& operator[](std::size_t r) const { return coeffs_[r]; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BiPoly> coeffs_;
};

/// L^r(f_1 ... f_n) == L^r(f_1) ... L^r(f_n), exactly.
bool check_multiplicativity(const FactorList& fs, Order r);

/// L^k(f) = sum_j C(k,j) l^j delta^j f.
BiPoly L_pow_expanded(const BiPoly& f, Order k);

/// delta^r(f_1 ... f_n) via
///   l^-r sum_k C(r,k) (-1)^(r-k) L^k(f_1) ... L^k(f_n),
/// dividing the sum by l exactly r times. Throws InvalidOrder for r = 0 and
/// InternalDivisibilityFailure if the sum is not a multiple of l^r.
BiPoly multi_delta(const FactorList& fs, Order r);

/// sum_k C(r,k) (-1)^(r-k) L^k(F), with F the product; equals l^r delta^r(F).
BiPoly forward_binomial(const FactorList& fs, Order r);

/// sum_k C(r,k) l^k delta^k(F); equals L^r(F).
BiPoly inverse_binomial(const FactorList& fs, Order r);

/// b_r = sum_k C(r,k) a_k for every r < a.size().
std::vector<BiPoly> binomial_transform(std::span<const BiPoly> a);

/// a_r = sum_k C(r,k) (-1)^(r-k) b_k; inverse of binomial_transform.
std::vector<BiPoly> inverse_binomial_transform(std::span<const BiPoly> b);

struct EgfPair {
  TruncatedSeries a;     ///< coefficient r is l^r delta^r(F)
  TruncatedSeries abar;  ///< coefficient r is L^r(F)
};

inline constexpr unsigned kDefaultEgfOrder = 8;

EgfPair egf_pair(const FactorList& fs, unsigned order = kDefaultEgfOrder);

/// Abar == e^t A coefficientwise. Throws OrderMismatch on differing orders.
bool egf_check(const TruncatedSeries& a, const TruncatedSeries& abar);

}  // namespace dq
