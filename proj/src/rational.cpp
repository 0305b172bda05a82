#include "diffquot/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dq {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1")
                                                        : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  const Rational q{BigInt(std::string(num_text)), BigInt(std::string(den_text))};
  return negative ? -q : q;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

BigInt binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace dq
