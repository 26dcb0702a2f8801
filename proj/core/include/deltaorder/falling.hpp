#pragma once

#include <complex>
#include <vector>

#include "deltaorder/rational.hpp"

namespace deltaorder {

/// sum_j coefficient_j * z^<rho + offset_j>, offsets distinct and >= 0.
struct FallingExpansion {
  struct Term {
    Rational coefficient;
    int offset = 0;
  };
  Rational rho;
  std::vector<Term> terms;
};

/// z^<m> * z^<rho> = sum_{j=0}^{m} C(m,j) rho^<j> z^<rho+m-j>.
/// Returns all m+1 terms (zero coefficients included), ordered by j.
FallingExpansion falling_product_expand(int m, const Rational& rho);

/// Difference power z^<rho> = Gamma(z+1)/Gamma(z+1-rho).
///
/// For rho a nonnegative integer this is the finite product and defined for
/// every z. Otherwise it is computed as a log-Gamma ratio (shifted Stirling
/// series) and throws PoleError when z+1 or z+1-rho is a nonpositive integer.
/// Relative accuracy is about 1e-13 away from poles; not rigorous.
std::complex<double> falling_power_eval(std::complex<double> z, std::complex<double> rho);

/// log z^<rho>, modulo 2*pi*i. Same poles as falling_power_eval. Does not
/// overflow for large |z|.
std::complex<double> log_falling_power(std::complex<double> z, std::complex<double> rho);

/// log Gamma(a) - log Gamma(b), modulo 2*pi*i.
std::complex<double> log_gamma_ratio(std::complex<double> a, std::complex<double> b);

}  // namespace deltaorder
