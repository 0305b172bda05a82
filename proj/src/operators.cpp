#include "diffquot/operators.hpp"

namespace dq {

BiPoly delta(const BiPoly& p) { return divide_by_lambda(shift_x(p) - p); }

BiPoly delta_pow(const BiPoly& p, Order r) {
  BiPoly out = p;
  for (unsigned i = 0; i < r.value && !out.is_zero(); ++i) out = delta(out);
  return out;
}

BiPoly L(const BiPoly& p) { return p + multiply_by_lambda(delta(p)); }

BiPoly L_pow(const BiPoly& p, Order k) {
  BiPoly out = p;
  for (unsigned i = 0; i < k.value; ++i) out = L(out);
  return out;
}

}  // namespace dq
