#include "fsig/rational.hpp"

#include <cstdio>

namespace fsig {

Rational rational_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return Rational(r);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string to_decimal(const Rational& r, int digits) { return to_decimal(to_double(r), digits); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace fsig
