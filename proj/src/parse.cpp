#include "diffquot/parse.hpp"

#include <cctype>
#include <string>

#include "diffquot/errors.hpp"

namespace dq {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view src) : src_(src) {}

  BiPoly run() {
    BiPoly out;
    skip_space();
    if (at_end()) fail("empty polynomial");

    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    add_term(out, negative);

    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negative = peek() == '-';
      advance();
      add_term(out, negative);
    }
    return out;
  }

 private:
  void add_term(BiPoly& out, bool negative) {
    skip_space();
    Rational coef(1);
    bool have_factor = false;
    bool need_star = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_factor = true;
      need_star = true;
    }
    unsigned dx = 0;
    unsigned dl = 0;
    bool seen_x = false;
    bool seen_l = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const std::size_t star_pos = pos_;
      const bool starred = peek() == '*';
      if (starred) {
        advance();
        skip_space();
      }
      if (!at_end() && (peek() == 'x' || peek() == 'l')) {
        const char var = peek();
        if ((var == 'x' && seen_x) || (var == 'l' && seen_l))
          fail(std::string("repeated variable '") + var + "'");
        if (starred && !need_star) fail("'*' without a left operand", star_pos);
        advance();
        const unsigned e = exponent();
        if (var == 'x') {
          if (seen_l) fail("x must precede l in a term", pos_ - 1);
          seen_x = true;
          dx = e;
        } else {
          seen_l = true;
          dl = e;
        }
        have_factor = true;
        need_star = true;
        continue;
      }
      if (starred) {
        if (at_end()) fail("expected x or l after '*'");
        fail(std::string("expected x or l after '*', found '") + peek() + "'");
      }
      break;
    }
    if (!have_factor) {
      if (at_end()) fail("expected a term");
      fail(std::string("expected a term, found '") + peek() + "'");
    }
    out.add_term(negative ? -coef : coef, dx, dl);
  }

  Rational number() {
    const std::string num = digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a denominator");
      const std::size_t den_pos = pos_;
      const std::string den = digits();
      if (BigInt(den) == 0) fail("zero denominator", den_pos);
      return Rational(BigInt(num), BigInt(den));
    }
    return Rational(BigInt(num));
  }

  unsigned exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    advance();
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an exponent after '^'");
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 6) fail("exponent too large", start);
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t pos) const {
    throw ParseError(what, pos + 1);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view src) { return PolyParser(src).run(); }

}  // namespace dq
