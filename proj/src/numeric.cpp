#include "diffquot/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "diffquot/errors.hpp"
#include "diffquot/leibniz.hpp"

namespace dq::numeric {

NumericFn exp_fn() { return {"exp", [](double x) { return std::exp(x); }}; }
NumericFn sin_fn() { return {"sin", [](double x) { return std::sin(x); }}; }
NumericFn cos_fn() { return {"cos", [](double x) { return std::cos(x); }}; }

NumericFn poly_fn(std::vector<double> coeffs) {
  std::ostringstream name;
  name << "poly(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i];
  name << ")";
  return {name.str(), [c = std::move(coeffs)](double x) {
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
            return acc;
          }};
}

NumericFn to_numeric(const BiPoly& p) {
  if (!p.is_lambda_free()) throw LambdaContaminated("to_numeric: polynomial carries l");
  std::vector<double> c(p.deg_x() + 1, 0.0);
  for (const auto& [m, v] : p.terms()) c[m.deg_x] = v.to_double();
  return poly_fn(std::move(c));
}

NumericFn reciprocal_shifted(double a) {
  std::ostringstream name;
  name << "recip(" << a << ")";
  return {name.str(), [a](double x) { return 1.0 / (x + a); }, {-a}};
}

namespace {

double parse_number(std::string_view text, std::size_t column) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("expected a number", column);
  try {
    if (s.find('/') != std::string::npos) return Rational::parse(s).to_double();
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in number '" + s + "'", column);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + s + "'", column);
  }
}

}  // namespace

NumericFn parse_catalog(std::string_view text) {
  const auto open = text.find('(');
  std::string head(text.substr(0, open));
  head.erase(std::remove_if(head.begin(), head.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             head.end());
  if (open == std::string_view::npos) {
    if (head == "exp") return exp_fn();
    if (head == "sin") return sin_fn();
    if (head == "cos") return cos_fn();
    throw ParseError("unknown function '" + head + "'", 1);
  }
  if (text.back() != ')') throw ParseError("missing ')'", text.size() + 1);
  const auto body = text.substr(open + 1, text.size() - open - 2);
  std::vector<double> args;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const auto piece = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    args.push_back(parse_number(piece, open + 2 + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (head == "poly") return poly_fn(std::move(args));
  if (head == "recip" || head == "reciprocal-shifted") {
    if (args.size() != 1) throw ParseError(head + " takes exactly one argument", open + 2);
    return reciprocal_shifted(args.front());
  }
  throw ParseError("unknown function '" + head + "'", 1);
}

NumericFn product(const NumericFn& f, const NumericFn& g) {
  std::vector<double> poles = f.poles();
  poles.insert(poles.end(), g.poles().begin(), g.poles().end());
  return {f.name() + "*" + g.name(), [f, g](double x) { return f(x) * g(x); }, std::move(poles)};
}

NumericFn delta_num(const NumericFn& f, double lambda) {
  if (lambda == 0.0) throw ZeroLambda("delta_num: lambda must be nonzero");
  return {"delta(" + f.name() + ")",
          [f, lambda](double x) { return (f(x + lambda) - f(x)) / lambda; }, f.poles()};
}

NumericFn delta_pow_num(const NumericFn& f, Order r, double lambda) {
  NumericFn out = f;
  for (unsigned i = 0; i < r.value; ++i) out = delta_num(out, lambda);
  return out;
}

void GridSpec::validate() const {
  if (lambda == 0.0) throw ZeroLambda("GridSpec: lambda must be nonzero");
  if (!(step > 0.0)) throw std::invalid_argument("GridSpec: step must be positive");
  if (count == 0) throw std::invalid_argument("GridSpec: count must be positive");
}

std::string VerificationReport::to_json() const {
  const nlohmann::json j{{"max_abs_err", max_abs_err},
                         {"max_rel_err", max_rel_err},
                         {"cancellation_ratio", cancellation_ratio},
                         {"trials", trials},
                         {"pass", pass}};
  return j.dump();
}

double SumWithMagnitude::cancellation_ratio() const {
  return abs_sum / std::max(std::abs(value), kRelativeErrorFloor);
}

SumWithMagnitude leibniz_rhs_num(const NumericFn& f, const NumericFn& g, Order r,
                                 double lambda, double x) {
  std::vector<double> df{f(x)};
  std::vector<double> dg{g(x)};
  NumericFn fd = f;
  NumericFn gd = g;
  for (unsigned i = 1; i <= r.value; ++i) {
    fd = delta_num(fd, lambda);
    gd = delta_num(gd, lambda);
    df.push_back(fd(x));
    dg.push_back(gd(x));
  }
  SumWithMagnitude out;
  for (const auto& t : leibniz_terms(r).terms) {
    const double term = t.coeff.get_d() * std::pow(lambda, static_cast<int>(t.lambda_exp)) *
                        df[t.order_f] * dg[t.order_g];
    out.value += term;
    out.abs_sum += std::abs(term);
  }
  return out;
}

SumWithMagnitude multi_rhs_num(std::span<const NumericFn> fs, Order r, double lambda, double x) {
  if (lambda == 0.0) throw ZeroLambda("multi_rhs_num: lambda must be nonzero");
  const unsigned n = r.value;
  // table[i][j] = lambda^j (delta^j f_i)(x)
  std::vector<std::vector<double>> table;
  for (const auto& f : fs) {
    std::vector<double> row{f(x)};
    NumericFn d = f;
    for (unsigned j = 1; j <= n; ++j) {
      d = delta_num(d, lambda);
      row.push_back(std::pow(lambda, static_cast<int>(j)) * d(x));
    }
    table.push_back(std::move(row));
  }
  double sum = 0.0;
  double abs_sum = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    double prod = binom(n, k).get_d();
    if ((n - k) % 2 == 1) prod = -prod;
    for (const auto& row : table) {
      double lk = 0.0;
      for (unsigned j = 0; j <= k; ++j) lk += binom(k, j).get_d() * row[j];
      prod *= lk;
    }
    sum += prod;
    abs_sum += std::abs(prod);
  }
  const double scale = std::pow(lambda, static_cast<int>(n));
  return {sum / scale, abs_sum / scale};
}

namespace {

void check_poles(std::span<const NumericFn> fs, Order r, const GridSpec& grid) {
  const double reach = static_cast<double>(r.value) * grid.lambda;
  const double guard = 10.0 * std::abs(grid.lambda) * static_cast<double>(r.value);
  for (const auto& f : fs) {
    for (double pole : f.poles()) {
      for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        const double lo = std::min(x, x + reach) - guard;
        const double hi = std::max(x, x + reach) + guard;
        if (pole >= lo && pole <= hi) {
          std::ostringstream msg;
          msg << f.name() << " is undefined at " << pole << ", inside the stencil of node " << x;
          throw SingularityInWindow(msg.str());
        }
      }
    }
  }
}

struct ErrorAccumulator {
  VerificationReport report;

  void add(double lhs, double rhs, double ratio) {
    const double abs_err = std::abs(lhs - rhs);
    const double rel_err = abs_err / std::max(std::abs(lhs), kRelativeErrorFloor);
    report.max_abs_err = std::max(report.max_abs_err, abs_err);
    report.max_rel_err = std::max(report.max_rel_err, rel_err);
    report.cancellation_ratio = std::max(report.cancellation_ratio, ratio);
    ++report.trials;
  }

  VerificationReport finish(double tol) {
    report.pass = report.max_rel_err <= tol;
    return report;
  }
};

}  // namespace

VerificationReport verify_two_factor(const NumericFn& f, const NumericFn& g, Order r,
                                     const GridSpec& grid, double tol) {
  if (r.value == 0) throw InvalidOrder("verify_two_factor: order must be a positive integer r");
  grid.validate();
  const NumericFn pair[] = {f, g};
  check_poles(pair, r, grid);

  const NumericFn lhs = delta_pow_num(product(f, g), r, grid.lambda);
  ErrorAccumulator acc;
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.node(i);
    const auto rhs = leibniz_rhs_num(f, g, r, grid.lambda, x);
    acc.add(lhs(x), rhs.value, rhs.cancellation_ratio());
  }
  return acc.finish(tol);
}

VerificationReport verify_multi_factor(std::span<const NumericFn> fs, Order r,
                                       const GridSpec& grid, double tol) {
  if (fs.empty()) throw std::invalid_argument("verify_multi_factor: at least one factor required");
  if (r.value == 0) throw InvalidOrder("verify_multi_factor: order must be a positive integer r");
  grid.validate();
  check_poles(fs, r, grid);

  NumericFn prod = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) prod = product(prod, fs[i]);
  const NumericFn lhs = delta_pow_num(prod, r, grid.lambda);
  ErrorAccumulator acc;
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.node(i);
    const auto rhs = multi_rhs_num(fs, r, grid.lambda, x);
    acc.add(lhs(x), rhs.value, rhs.cancellation_ratio());
  }
  return acc.finish(tol);
}

}  // namespace dq::numeric
