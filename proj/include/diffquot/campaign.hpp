#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffquot/bipoly.hpp"
#include "diffquot/random.hpp"

namespace dq {

/// Which identity a randomized exact campaign checks.
enum class Identity {
  TwoFactor,    ///< two-factor Leibniz expansion against iterated delta
  MultiFactor,  ///< n-factor expansion against iterated delta
  Inversion,    ///< forward and inverse binomial sums, both round trips
  Egf,          ///< Abar(t) = e^t A(t) up to order r
};

/// "1.1", "1.3", "inversion" or "egf".
std::optional<Identity> parse_identity(std::string_view name);
std::string_view identity_name(Identity id);

struct CampaignConfig {
  Identity identity = Identity::TwoFactor;
  unsigned r = 1;
  unsigned n = 2;
  unsigned trials = 50;
  std::uint64_t seed = 0;
  PolyShape shape;
};

struct TrialFailure {
  unsigned trial = 0;
  std::uint64_t seed = 0;
  std::vector<BiPoly> inputs;
  std::string detail;
};

struct CampaignResult {
  unsigned passed = 0;
  std::vector<TrialFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs cfg.trials independent trials; trial i draws its inputs from
/// trial_seed(cfg.seed, i). Throws InvalidOrder when r = 0 for the
/// two-factor and n-factor identities.
CampaignResult run_campaign(const CampaignConfig& cfg);

}  // namespace dq
