#include "deltaorder/rational.hpp"

#include <cmath>
#include <mpfr.h>
#include <limits>
#include <stdexcept>

namespace deltaorder {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

double log_abs(const Integer& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_abs(const Rational& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  return log_abs(value.get_num()) - log_abs(value.get_den());
}

// Round to nearest; get_d truncates.
double to_double(const Rational& value) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational falling_power(const Rational& x, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= x - i;
  return r;
}

}  // namespace deltaorder
