#pragma once

#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "deltaorder/rational.hpp"

namespace deltaorder {

/// Degree reported for the zero polynomial. Compares below every real degree;
/// never do arithmetic on it.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Exact univariate polynomial over the rationals in the monomial basis.
/// coeffs()[i] is the coefficient of z^i; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  /// (z + shift)(z + shift - 1)...(z + shift - k + 1)
  static Poly falling(int k, const Rational& shift = 0);

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Zero outside [0, degree].
  Rational coeff(int power) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  /// P(z + s), exact Taylor shift.
  Poly shifted(const Rational& s) const;
  /// Smallest positive multiple with integer coefficients of content 1
  /// (sign kept). Returns the scale factor through `scale` when non-null.
  Poly primitive(Rational* scale = nullptr) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "6z^2+19z+15", "3/2*z-1". Parseable by the equation grammar.
  std::string to_string(char variable = 'z') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Forward difference P(z+1) - P(z).
Poly poly_delta(const Poly& p);
/// Delta applied k times; identity for k == 0, zero for k > deg P.
Poly iterated_delta(const Poly& p, int k);

/// Coefficients c_k with P(z) = sum_k c_k z^<k> (falling factorials).
std::vector<Rational> to_falling_basis(const Poly& p);
Poly from_falling_basis(std::span<const Rational> coeffs);

/// Stirling numbers, memoized per process (thread-safe).
/// Signed first kind: z^<n> = sum_k s(n,k) z^k.
Integer stirling_first(int n, int k);
/// Second kind: z^n = sum_k S(n,k) z^<k>.
Integer stirling_second(int n, int k);

}  // namespace deltaorder
