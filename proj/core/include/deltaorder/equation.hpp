#pragma once

#include <span>
#include <string>
#include <vector>

#include "deltaorder/poly.hpp"

namespace deltaorder {

/// coef(z) * D^delta_power f(z + shift)
struct Term {
  Poly coef;
  int delta_power = 0;
  int shift = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// sum of terms = 0, as written (shifted arguments allowed).
struct GeneralForm {
  std::vector<Term> terms;

  friend bool operator==(const GeneralForm&, const GeneralForm&) = default;
};

/// P_m(z) D^m f + ... + P_0(z) f = 0 with m >= 1 and P_m nonzero.
class DifferenceEquation {
 public:
  /// Trailing zero coefficients are dropped; throws DegenerateEquation when
  /// the remaining order is below 1.
  explicit DifferenceEquation(std::vector<Poly> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  const Poly& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  /// deg P_j for j = 0..m (kZeroDegree for zero coefficients).
  std::vector<int> degrees() const;
  int max_degree() const;

  /// Integer coefficients, content 1, leading coefficient of P_m positive.
  DifferenceEquation canonical() const;

  friend bool operator==(const DifferenceEquation&, const DifferenceEquation&) = default;

 private:
  std::vector<Poly> coeffs_;
};

/// c_i with D^m f(z+k) = sum_i c_i D^i f(z), i = 0..m+k. Requires m, k >= 0.
std::vector<Integer> shifted_delta_coefficients(int m, int k);

/// Rewrites every term over D^i f(z), after substituting z -> z+K where K is
/// the largest backward shift (0 if none). Canonically scaled.
/// Throws DegenerateEquation if the operator vanishes or has order 0.
DifferenceEquation normalize_to_delta(const GeneralForm& g);

/// Pure shift form sum_k R_k(z) f(z+k), k = 0..m, zero terms omitted.
GeneralForm delta_to_shift(const DifferenceEquation& eq);

/// Delta form as a GeneralForm, highest power first, zero terms omitted.
GeneralForm to_general(const DifferenceEquation& eq);

/// Operator product outer∘inner over coefficient lists (index = power of D).
/// Orders may be zero. No rescaling.
std::vector<Poly> compose_operators(std::span<const Poly> outer, std::span<const Poly> inner);
DifferenceEquation compose_operators(const DifferenceEquation& outer, const DifferenceEquation& inner);

/// Coefficients of L[f] in the basis z^<n+rho> for f = sum_n a_n z^<n+rho>.
struct OperatorImage {
  int first_index = 0;  ///< always -m
  std::vector<Rational> coeffs;  ///< n = first_index .. last

  bool is_zero() const;
};

/// Rows n = -m..N. Needs a_0..a_{N+m}; throws InsufficientCoefficients
/// otherwise.
OperatorImage apply_operator(const DifferenceEquation& eq, std::span<const Rational> a, int N,
                             const Rational& rho = 0);

/// Parseable by parse_equation, e.g. "(z+3) D^2 f(z) - f(z+1) = 0".
std::string to_string(const GeneralForm& g);
std::string to_string(const DifferenceEquation& eq);

}  // namespace deltaorder
