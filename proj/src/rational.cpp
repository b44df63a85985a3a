#include "semwidth/rational.hpp"

#include "semwidth/errors.hpp"

namespace semwidth {

std::string rational_display(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

// cpp_int accepts "" and stray text too loosely; insist on -?[0-9]+.
BigInt parse_bigint(const std::string& text) {
  size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ParseError("malformed rational part: '" + text + "'");
  for (size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("malformed rational part: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational: " + text);
  return Rational(num, den);
}

double rational_approx(const Rational& r) { return r.convert_to<double>(); }

}  // namespace semwidth
