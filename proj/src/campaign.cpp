#include "diffquot/campaign.hpp"

#include "diffquot/errors.hpp"
#include "diffquot/leibniz.hpp"
#include "diffquot/multifactor.hpp"
#include "diffquot/operators.hpp"

namespace dq {

std::optional<Identity> parse_identity(std::string_view name) {
  if (name == "1.1") return Identity::TwoFactor;
  if (name == "1.3") return Identity::MultiFactor;
  if (name == "inversion") return Identity::Inversion;
  if (name == "egf") return Identity::Egf;
  return std::nullopt;
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::TwoFactor: return "1.1";
    case Identity::MultiFactor: return "1.3";
    case Identity::Inversion: return "inversion";
    case Identity::Egf: return "egf";
  }
  return "?";
}

namespace {

// Returns an empty string on success, otherwise what went wrong.
std::string check_trial(const CampaignConfig& cfg, const FactorList& fs) {
  const Order r(cfg.r);
  switch (cfg.identity) {
    case Identity::TwoFactor: {
      const BiPoly lhs = delta_pow(fs.product(), r);
      const BiPoly rhs = apply_expansion(leibniz_terms(r), fs[0], fs[1]);
      return lhs == rhs ? "" : "expansion " + rhs.str() + " != oracle " + lhs.str();
    }
    case Identity::MultiFactor: {
      const BiPoly lhs = delta_pow(fs.product(), r);
      BiPoly rhs;
      try {
        rhs = multi_delta(fs, r);
      } catch (const InternalDivisibilityFailure& e) {
        return e.what();
      }
      return lhs == rhs ? "" : "multi_delta " + rhs.str() + " != oracle " + lhs.str();
    }
    case Identity::Inversion: {
      const BiPoly product = fs.product();
      const BiPoly scaled = multiply_by_lambda(delta_pow(product, r), cfg.r);
      const BiPoly shifted = L_pow(product, r);
      if (forward_binomial(fs, r) != scaled) return "forward sum != l^r delta^r(F)";
      if (inverse_binomial(fs, r) != shifted) return "inverse sum != L^r(F)";
      std::vector<BiPoly> forward;
      std::vector<BiPoly> inverse;
      for (unsigned k = 0; k <= cfg.r; ++k) {
        forward.push_back(forward_binomial(fs, Order(k)));
        inverse.push_back(inverse_binomial(fs, Order(k)));
      }
      if (binomial_transform(forward).back() != shifted)
        return "forward then inverse did not reconstruct L^r(F)";
      if (inverse_binomial_transform(inverse).back() != scaled)
        return "inverse then forward did not reconstruct l^r delta^r(F)";
      return "";
    }
    case Identity::Egf: {
      const auto pair = egf_pair(fs, cfg.r);
      return egf_check(pair.a, pair.abar) ? "" : "Abar != e^t A";
    }
  }
  return "unknown identity";
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
  const bool needs_positive =
      cfg.identity == Identity::TwoFactor || cfg.identity == Identity::MultiFactor;
  if (needs_positive && cfg.r == 0)
    throw InvalidOrder("run_campaign: order must be a positive integer r");
  const unsigned n = cfg.identity == Identity::TwoFactor ? 2 : cfg.n;
  if (n == 0) throw std::invalid_argument("run_campaign: n must be at least 1");

  CampaignResult result;
  for (unsigned t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    std::mt19937_64 gen(seed);
    std::vector<BiPoly> inputs;
    for (unsigned i = 0; i < n; ++i) inputs.push_back(random_bipoly(gen, cfg.shape));
    std::string detail = check_trial(cfg, FactorList(inputs));
    if (detail.empty()) {
      ++result.passed;
    } else {
      result.failures.push_back({t, seed, std::move(inputs), std::move(detail)});
    }
  }
  return result;
}

}  // namespace dq
