#pragma once

#include <string_view>

#include "diffquot/bipoly.hpp"

namespace dq {

/// Reads a signed sum of terms `[coef][*][x[^i]][*][l[^j]]`, where coef is
/// an integer or `a/b` and `l` stands for lambda. Whitespace is ignored and
/// like terms are merged. Throws ParseError with a 1-based column.
///
/// parse_poly(p.str()) == p for every BiPoly p.
BiPoly parse_poly(std::string_view src);

}  // namespace dq
