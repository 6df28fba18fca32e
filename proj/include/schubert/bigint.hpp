#pragma once

#include <gmpxx.h>

#include <string>

namespace schubert {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Natural logarithm of a positive integer, accurate for values far beyond
/// the range of double.
double log_abs(const BigInt& value);

std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

/// Narrowing conversion that throws InvalidArgument when the value does not fit.
int to_int(const BigInt& value);

}  // namespace schubert
