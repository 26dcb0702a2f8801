#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace deltaorder {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", including integers ("5/1") and zero ("0/1").
std::string to_string(const Rational& value);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Natural log of |value|; -infinity for zero. Safe far outside double range.
double log_abs(const Rational& value);
double log_abs(const Integer& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

Integer factorial(long n);
Integer binomial(long n, long k);

/// Falling power x(x-1)...(x-k+1); 1 for k == 0.
Rational falling_power(const Rational& x, long k);

}  // namespace deltaorder
