#pragma once

#include <complex>
#include <vector>

#include "deltaorder/poly.hpp"

namespace deltaorder {

struct PolyRoots {
  /// Exact rational roots, repeated by multiplicity, ascending.
  std::vector<Rational> rational;
  /// Roots of the deflated remainder (no rational roots), numeric.
  std::vector<std::complex<double>> numeric;
};

/// Rational roots found exactly (numeric guidance, exact verification and
/// deflation); the rest via companion-matrix eigenvalues.
/// Throws std::invalid_argument for the zero polynomial.
PolyRoots find_roots(const Poly& p);

/// All roots numerically, Newton-polished. Empty for constants.
std::vector<std::complex<double>> numeric_roots(const Poly& p);

/// Exact division by (z - root); the root must be exact.
Poly deflate(const Poly& p, const Rational& root);

}  // namespace deltaorder
