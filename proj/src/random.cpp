#include "diffquot/random.hpp"

namespace dq {

namespace {

std::uint64_t below(std::mt19937_64& gen, std::uint64_t bound) { return gen() % bound; }

}  // namespace

BiPoly random_bipoly(std::mt19937_64& gen, const PolyShape& shape) {
  BiPoly p;
  const auto deg_x = static_cast<unsigned>(below(gen, shape.max_deg_x + 1));
  for (unsigned i = 0; i <= deg_x; ++i) {
    for (unsigned j = 0; j <= shape.max_deg_lambda; ++j) {
      // keep the leading x-power nonzero, other slots are half-filled
      const bool leading = i == deg_x && j == 0;
      if (!leading && below(gen, 2) == 0) continue;
      long num = static_cast<long>(below(gen, 2 * shape.max_num + 1)) - shape.max_num;
      if (leading && num == 0) num = 1;
      const long den = static_cast<long>(below(gen, shape.max_den)) + 1;
      p.add_term(Rational(num, den), i, j);
    }
  }
  return p;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dq
