#pragma once

#include <gmpxx.h>

#include <string>

namespace coxarith {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/* Accepts "n", "-n", "p/q" with optional surrounding spaces. */
Rational parse_rational(const std::string& s);

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

Rational pow(const Rational& q, unsigned e);
Integer binomial(unsigned n, unsigned k);

/* q truncated to the given number of decimal digits. */
std::string to_decimal(const Rational& q, int digits);

}  // namespace coxarith
