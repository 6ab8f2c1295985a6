#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace oddzeta {

/// Exact rational in lowest terms with a positive denominator. gmpxx keeps
/// results of arithmetic canonical; values built from a raw numerator and
/// denominator must go through make_rational.
using ExactRational = mpq_class;
using BigInt = mpz_class;

ExactRational make_rational(const BigInt& num, const BigInt& den);
ExactRational make_rational(long num, long den);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// 2^e as an exact rational; e may be negative.
ExactRational pow2(long e);

ExactRational pow(const ExactRational& base, unsigned long e);

/// "p/q" (or "p" when q = 1).
std::string to_string(const ExactRational& q);

/// Scientific rendering with the given number of significant digits.
std::string to_scientific(const ExactRational& q, int significant);

}  // namespace oddzeta
