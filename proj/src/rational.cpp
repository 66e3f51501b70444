#include "bs/rational.hpp"

namespace bs {

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw UsageError("floor_div requires a positive divisor");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

Rat pow_rat(const Rat& base, long long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw UsageError("zero base with negative exponent");
  unsigned long long k = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  Int num = boost::multiprecision::pow(numerator(base), (unsigned)k);
  Int den = boost::multiprecision::pow(denominator(base), (unsigned)k);
  if (e < 0) num.swap(den);
  return Rat(num, den);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(text);
    } else {
      num = Int(text.substr(0, slash));
      den = Int(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rat(num, den);
}

std::string to_wire(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace bs
