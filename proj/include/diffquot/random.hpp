#pragma once

#include <cstdint>
#include <random>

#include "diffquot/bipoly.hpp"

namespace dq {

/// Bounds for random test polynomials: coefficients a/b with |a| <= max_num
/// and 1 <= b <= max_den.
struct PolyShape {
  unsigned max_deg_x = 5;
  unsigned max_deg_lambda = 2;
  int max_num = 20;
  int max_den = 10;
};

/// Draws from gen with plain modular reduction, so a seed gives the same
/// polynomial on every standard library.
BiPoly random_bipoly(std::mt19937_64& gen, const PolyShape& shape = {});

/// Independent stream seed for trial number `trial` of a campaign.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace dq
