#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dq {

/// Exact division by the formal lambda failed: some term is free of lambda.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// An operator order outside the range an expansion is defined for.
struct InvalidOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A lambda-free input was required.
struct LambdaContaminated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The alternating sum of the n-factor rule was not divisible by lambda^r.
/// Never raised for valid input; it indicates a bug.
struct InternalDivisibilityFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct OrderMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroLambda : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularityInWindow : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed polynomial or catalog text. column() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace dq
