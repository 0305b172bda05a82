#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffquot/bipoly.hpp"
#include "diffquot/operators.hpp"

namespace dq::numeric {

/// A real function from the closed catalog {exp, sin, cos, poly, recip} or
/// something derived from one (a difference quotient, a product).
class NumericFn {
 public:
  NumericFn(std::string name, std::function<double(double)> fn,
            std::vector<double> poles = {})
      : name_(std::move(name)), fn_(std::move(fn)), poles_(std::move(poles)) {}

  double operator()(double x) const { return fn_(x); }
  const std::string& name() const { return name_; }
  /// Points where the function is undefined.
  const std::vector<double>& poles() const { return poles_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  std::vector<double> poles_;
};

NumericFn exp_fn();
NumericFn sin_fn();
NumericFn cos_fn();
/// c0 + c1 x + ... + cd x^d.
NumericFn poly_fn(std::vector<double> coeffs);
/// The lambda-free polynomial p as a float function. Throws
/// LambdaContaminated if p carries l.
NumericFn to_numeric(const BiPoly& p);
/// 1 / (x + a), undefined at x = -a.
NumericFn reciprocal_shifted(double a);

/// Parses "exp", "sin", "cos", "poly(c0,c1,...)", "recip(a)" or
/// "reciprocal-shifted(a)". Throws ParseError.
NumericFn parse_catalog(std::string_view text);

NumericFn product(const NumericFn& f, const NumericFn& g);

/// x -> (f(x + lambda) - f(x)) / lambda. Throws ZeroLambda.
NumericFn delta_num(const NumericFn& f, double lambda);

/// delta_num applied r times.
NumericFn delta_pow_num(const NumericFn& f, Order r, double lambda);

/// Uniform sampling window x_start + i * step, i < count, at step lambda.
struct GridSpec {
  double x_start = 0.0;
  double step = 1.0;
  std::size_t count = 1;
  double lambda = 0.1;

  /// Throws ZeroLambda, or std::invalid_argument for step/count.
  void validate() const;
  double node(std::size_t i) const { return x_start + static_cast<double>(i) * step; }
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kRelativeErrorFloor = 1e-300;

struct VerificationReport {
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  /// max over nodes of sum |summands| / max(|sum|, floor)
  double cancellation_ratio = 0.0;
  std::size_t trials = 0;
  bool pass = false;

  /// Single-line JSON with keys max_abs_err, max_rel_err,
  /// cancellation_ratio, trials, pass.
  std::string to_json() const;
};

/// A summed value together with the sum of the absolute values of its
/// summands.
struct SumWithMagnitude {
  double value = 0.0;
  double abs_sum = 0.0;

  double cancellation_ratio() const;
};

/// Right side of the two-factor rule at x:
///   sum_{l,k} C(r,l) C(l,k) lambda^(r-l) (delta^(r-k) f)(delta^(k+r-l) g).
SumWithMagnitude leibniz_rhs_num(const NumericFn& f, const NumericFn& g, Order r,
                                 double lambda, double x);

/// Right side of the n-factor rule at x. value is
///   lambda^-r sum_k C(r,k) (-1)^(r-k) prod_i L^k(f_i)(x)
/// with L^k(f_i) = sum_j C(k,j) lambda^j delta^j f_i. abs_sum is taken over
/// the alternating k-sum before the division by lambda^r.
SumWithMagnitude multi_rhs_num(std::span<const NumericFn> fs, Order r, double lambda, double x);

/// Compares iterated delta^r(f g) against the two-factor rule on every node.
/// Throws InvalidOrder for r = 0 and SingularityInWindow when a pole lies
/// within 10 |lambda| r of a node's stencil.
VerificationReport verify_two_factor(const NumericFn& f, const NumericFn& g, Order r,
                                     const GridSpec& grid, double tol = kDefaultTolerance);

/// Same for the n-factor rule. Throws std::invalid_argument when fs is empty.
VerificationReport verify_multi_factor(std::span<const NumericFn> fs, Order r,
                                       const GridSpec& grid, double tol = kDefaultTolerance);

}  // namespace dq::numeric
