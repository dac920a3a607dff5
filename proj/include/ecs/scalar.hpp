#pragma once

#include <gmpxx.h>

#include <string>

namespace rext {

// Exact scalars. mpq_class keeps fractions canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace rext
