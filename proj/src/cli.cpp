#include "diffquot/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "diffquot/campaign.hpp"
#include "diffquot/errors.hpp"
#include "diffquot/leibniz.hpp"
#include "diffquot/multifactor.hpp"
#include "diffquot/numeric.hpp"
#include "diffquot/operators.hpp"
#include "diffquot/parse.hpp"

namespace dq::cli {

namespace {

using nlohmann::json;

constexpr const char* kPositiveOrder = "order --r must be a positive integer r";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_positive(unsigned r) {
  if (r == 0) throw UsageError(kPositiveOrder);
}

BiPoly parse_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse " + flag + " '" + text + "': " + e.what());
  }
}

std::vector<BiPoly> parse_factor_list(const std::string& text) {
  std::vector<BiPoly> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_arg("--factors", text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string verdict(bool equal) { return equal ? "EQUAL" : "DIFFER"; }

CommandOutcome expand(unsigned r, bool as_json) {
  require_positive(r);
  std::ostringstream out;
  for (const auto& t : leibniz_terms(Order(r)).terms) {
    if (as_json) {
      out << json{{"l", t.l},
                  {"k", t.k},
                  {"coeff", t.coeff.get_str()},
                  {"lambda_exp", t.lambda_exp},
                  {"order_f", t.order_f},
                  {"order_g", t.order_g},
                  {"text", t.str()}}
                 .dump()
          << '\n';
    } else {
      out << t.str() << '\n';
    }
  }
  return {kExitOk, out.str()};
}

CommandOutcome apply(unsigned r, const std::string& f_text, const std::string& g_text,
                     bool as_json) {
  require_positive(r);
  const BiPoly f = parse_arg("--f", f_text);
  const BiPoly g = parse_arg("--g", g_text);
  const BiPoly expansion = apply_expansion(leibniz_terms(Order(r)), f, g);
  const BiPoly oracle = delta_pow(f * g, Order(r));
  const bool equal = expansion == oracle;
  std::ostringstream out;
  if (as_json) {
    out << json{{"r", r},
                {"f", f.str()},
                {"g", g.str()},
                {"expansion", expansion.str()},
                {"oracle", oracle.str()},
                {"verdict", verdict(equal)}}
               .dump()
        << '\n';
  } else {
    out << "expansion: " << expansion << '\n'
        << "oracle:    " << oracle << '\n'
        << "verdict:   " << verdict(equal) << '\n';
  }
  return {equal ? kExitOk : kExitVerificationFailed, out.str()};
}

CommandOutcome multi(unsigned r, const std::string& factors_text, bool as_json) {
  require_positive(r);
  const FactorList fs(parse_factor_list(factors_text));
  const BiPoly result = multi_delta(fs, Order(r));
  const BiPoly oracle = delta_pow(fs.product(), Order(r));
  const bool equal = result == oracle;
  std::ostringstream out;
  if (as_json) {
    json factors = json::array();
    for (const auto& f : fs) factors.push_back(f.str());
    out << json{{"r", r},
                {"factors", factors},
                {"result", result.str()},
                {"oracle", oracle.str()},
                {"verdict", verdict(equal)}}
               .dump()
        << '\n';
  } else {
    out << "result: " << result << '\n'
        << "oracle: " << oracle << '\n'
        << "verdict: " << verdict(equal) << '\n';
  }
  return {equal ? kExitOk : kExitVerificationFailed, out.str()};
}

CommandOutcome verify(const std::string& theorem, unsigned r, std::optional<unsigned> n,
                      unsigned trials, std::uint64_t seed) {
  const auto id = parse_identity(theorem);
  if (!id) throw UsageError("unknown --theorem '" + theorem + "' (expected 1.1, 1.3, inversion or egf)");
  if (*id == Identity::TwoFactor || *id == Identity::MultiFactor) require_positive(r);
  if (*id == Identity::TwoFactor && n && *n != 2)
    throw UsageError("--theorem 1.1 is the two-factor rule; --n must be 2");
  if (n && *n == 0) throw UsageError("--n must be at least 1");

  CampaignConfig cfg;
  cfg.identity = *id;
  cfg.r = r;
  cfg.n = *id == Identity::TwoFactor ? 2 : n.value_or(3);
  cfg.trials = trials;
  cfg.seed = seed;
  const CampaignResult result = run_campaign(cfg);

  std::ostringstream out;
  for (const auto& f : result.failures) {
    out << "FAIL trial=" << f.trial << " seed=" << f.seed << " r=" << r << " n=" << cfg.n
        << " inputs:";
    for (std::size_t i = 0; i < f.inputs.size(); ++i)
      out << (i ? ", " : " ") << "f" << i + 1 << "=" << f.inputs[i];
    out << " (" << f.detail << ")\n";
  }
  out << "verify theorem=" << identity_name(*id) << " r=" << r << " n=" << cfg.n
      << " trials=" << trials << " seed=" << seed << ": " << result.passed << " passed, "
      << result.failures.size() << " failed\n";
  return {result.ok() ? kExitOk : kExitVerificationFailed, out.str()};
}

numeric::NumericFn catalog_arg(const std::string& flag, const std::string& text) {
  try {
    return numeric::parse_catalog(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse " + flag + " '" + text + "': " + e.what());
  }
}

struct NumericArgs {
  std::string f;
  std::string g;
  unsigned r = 1;
  double lambda = 0.1;
  double x0 = 0.0;
  double step = 1.0;
  std::size_t count = 1;
  double tol = numeric::kDefaultTolerance;
  bool json = false;
};

CommandOutcome run_numeric(const NumericArgs& a) {
  require_positive(a.r);
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto f = catalog_arg("--f", a.f);
  const auto g = catalog_arg("--g", a.g);
  const numeric::GridSpec grid{a.x0, a.step, a.count, a.lambda};
  numeric::VerificationReport report;
  try {
    report = numeric::verify_two_factor(f, g, Order(a.r), grid, a.tol);
  } catch (const SingularityInWindow& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  if (a.json) {
    out << report.to_json() << '\n';
  } else {
    out << std::scientific << std::setprecision(6) << "max_abs_err=" << report.max_abs_err
        << " max_rel_err=" << report.max_rel_err
        << " cancellation_ratio=" << report.cancellation_ratio << " trials=" << report.trials
        << " pass=" << (report.pass ? "true" : "false") << '\n';
  }
  return {report.pass ? kExitOk : kExitVerificationFailed, out.str()};
}

}  // namespace

CommandOutcome run_command(std::span<const std::string> args) {
  CLI::App app{"Exact and floating-point checks of difference-quotient Leibniz rules", "diffquot"};
  app.require_subcommand(1);

  unsigned r = 0;
  bool as_json = false;

  auto* expand_cmd = app.add_subcommand("expand", "Print the terms of the two-factor expansion");
  expand_cmd->add_option("--r", r, "Operator order (positive)")->required();
  expand_cmd->add_flag("--json", as_json, "One JSON object per term");

  std::string f_text;
  std::string g_text;
  auto* apply_cmd = app.add_subcommand("apply", "Apply the two-factor expansion to f and g");
  apply_cmd->add_option("--r", r, "Operator order (positive)")->required();
  apply_cmd->add_option("--f", f_text, "Polynomial in x and l")->required();
  apply_cmd->add_option("--g", g_text, "Polynomial in x and l")->required();
  apply_cmd->add_flag("--json", as_json);

  std::string factors_text;
  auto* multi_cmd = app.add_subcommand("multi", "Apply the n-factor expansion");
  multi_cmd->add_option("--r", r, "Operator order (positive)")->required();
  multi_cmd->add_option("--factors", factors_text, "Comma-separated polynomials")->required();
  multi_cmd->add_flag("--json", as_json);

  std::string theorem;
  std::optional<unsigned> n;
  unsigned trials = 50;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized exact campaign");
  verify_cmd->add_option("--theorem", theorem, "1.1, 1.3, inversion or egf")->required();
  verify_cmd->add_option("--r", r, "Operator order (truncation order for egf)")->required();
  verify_cmd->add_option("--n", n, "Number of factors (default 3; 1.1 always uses 2)");
  verify_cmd->add_option("--trials", trials, "Number of random trials")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "64-bit campaign seed")->capture_default_str();

  NumericArgs num;
  auto* numeric_cmd = app.add_subcommand("numeric", "Floating-point two-factor check on a grid");
  numeric_cmd->add_option("--f", num.f, "exp, sin, cos, poly(c0,...), recip(a)")->required();
  numeric_cmd->add_option("--g", num.g, "exp, sin, cos, poly(c0,...), recip(a)")->required();
  numeric_cmd->add_option("--r", num.r, "Operator order (positive)")->required();
  numeric_cmd->add_option("--lambda", num.lambda, "Nonzero step")->required();
  numeric_cmd->add_option("--x0", num.x0, "First grid node")->required();
  numeric_cmd->add_option("--step", num.step, "Grid spacing")->required();
  numeric_cmd->add_option("--count", num.count, "Number of grid nodes")->required();
  numeric_cmd->add_option("--tol", num.tol, "Relative tolerance")->required();
  numeric_cmd->add_flag("--json", num.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n" + app.help()};
  }

  try {
    if (expand_cmd->parsed()) return expand(r, as_json);
    if (apply_cmd->parsed()) return apply(r, f_text, g_text, as_json);
    if (multi_cmd->parsed()) return multi(r, factors_text, as_json);
    if (verify_cmd->parsed()) return verify(theorem, r, n, trials, seed);
    if (numeric_cmd->parsed()) return run_numeric(num);
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
  } catch (const InvalidOrder& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
  }
  return {kExitUsage, app.help()};
}

}  // namespace dq::cli
