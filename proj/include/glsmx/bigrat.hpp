#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace glsmx {

// Exact rational.  GMP keeps it canonical: gcd(num, den) = 1 and den > 0.
using BigRat = mpq_class;
using BigInt = mpz_class;

BigRat rat(long num, long den = 1);

// Accepts "p", "p/q" and surrounding whitespace; the result is canonicalized.
BigRat parse_rat(const std::string& s);

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRat& r);

bool is_integer(const BigRat& r);
BigInt floor_of(const BigRat& r);
BigInt ceil_of(const BigRat& r);

// Representative of r mod 1 in [0, 1).
BigRat frac_part(const BigRat& r);

BigRat factorial(unsigned n);
BigRat pow(const BigRat& r, long e);

std::size_t hash_value(const BigRat& r);

// Narrowing to long; throws std::overflow_error when it does not fit.
long to_long(const BigInt& z);
long to_long_exact(const BigRat& r);

}  // namespace glsmx
