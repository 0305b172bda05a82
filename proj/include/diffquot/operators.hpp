#pragma once

#include <compare>
#include <cstddef>

#include "diffquot/bipoly.hpp"

namespace dq {

/// Power of an operator. Order{0} is the identity.
struct Order {
  unsigned value = 0;

  constexpr Order() = default;
  constexpr explicit Order(unsigned r) : value(r) {}

  friend auto operator<=>(const Order&, const Order&) = default;
};

/// (p(x + l) - p(x)) / l, computed exactly.
BiPoly delta(const BiPoly& p);

/// delta applied r times.
BiPoly delta_pow(const BiPoly& p, Order r);

/// I + l * delta. Acts as the shift x -> x + l, but that is a property, not
/// how it is computed.
BiPoly L(const BiPoly& p);

/// L applied k times; equals p(x + k l).
BiPoly L_pow(const BiPoly& p, Order k);

}  // namespace dq
