#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kmk {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Reduced p/q with q > 0. Throws std::domain_error when q == 0.
BigRational make_rational(const BigInt& p, const BigInt& q = 1);

// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
BigRational parse_rational(std::string_view text);

BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);

}  // namespace kmk
