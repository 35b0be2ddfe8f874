#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsig {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::uint64_t num, std::uint64_t den) { return Rational(BigInt(num), BigInt(den)); }

Rational rational_pow(std::uint64_t base, unsigned exp);
double to_double(const Rational& r);
// 12 significant digits, "%.12g" style.
std::string to_decimal(const Rational& r, int digits = 12);
std::string to_decimal(double v, int digits = 12);
Rational abs(const Rational& r);

}  // namespace fsig
