#include "jordan2/scalar.hpp"

#include <cstdio>
#include <regex>

#include "jordan2/errors.hpp"

namespace jordan2 {

std::string to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::ExactRational:
      return "rational";
    case ScalarKind::ApproxReal:
      return "real";
    case ScalarKind::ApproxComplex:
      return "complex";
  }
  return "unknown";
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ParseError("malformed rational '" + text + "'");
  }
  std::string digits = m[1].str();
  if (digits[0] == '+') digits.erase(0, 1);
  mpz_class num(digits, 10);
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"), 10);
  if (den == 0) {
    throw ParseError("zero denominator in '" + text + "'");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && num != 0) {
    throw ParseError("rational '" + text + "' is not in lowest terms");
  }
  if (num == 0 && den != 1) {
    throw ParseError("rational '" + text + "' is not in lowest terms");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool exact_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace jordan2
