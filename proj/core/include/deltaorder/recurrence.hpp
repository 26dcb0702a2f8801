#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "deltaorder/equation.hpp"
#include "deltaorder/roots.hpp"

namespace deltaorder {

/// Window recurrence for f = sum_n a_n z^<n+rho_offset>. Row n reads
///   sum_i a_{n-i} Q_i(n) = 0,   i = first .. last,  a_k = 0 for k < 0,
/// and is the exact coefficient of z^<n+rho_offset> in L[f] for every
/// n >= first. Q_i is a polynomial in n.
struct CoefficientRecurrence {
  int m = 0;  ///< order of the equation
  int d = 0;  ///< maximal coefficient degree
  Rational rho_offset = 0;
  int first = 0;  ///< lowest window index (-m for derived recurrences)
  std::vector<Poly> window;  ///< window[i - first] = Q_i
  /// Rows n = 0..d-1 written out term by term over a_0..a_{d-1+m}
  /// (plain case only; empty when rho_offset != 0).
  std::vector<std::vector<Rational>> initial_constraints;

  int last() const noexcept { return first + static_cast<int>(window.size()) - 1; }
  /// Zero outside the window.
  Poly Q(int i) const;
  /// sum_i a_{n-i} Q_i(n); needs a_0..a_{n-first}.
  Rational row(int n, std::span<const Rational> a) const;

  friend bool operator==(const CoefficientRecurrence&, const CoefficientRecurrence&) = default;
};

/// Q(n,i) = sum_j (n-i)^<j> (D^{i+j} P_j)(n-j-i) / (i+j)!, i = -m..d, via
/// monomial differences. Asserts the degree chain against the Newton data.
CoefficientRecurrence derive_recurrence(const DifferenceEquation& eq);

/// Same window for sum_n a_n z^<n+rho>, built from the falling-basis
/// product rule. Agrees with derive_recurrence at rho = 0.
CoefficientRecurrence shifted_recurrence(const DifferenceEquation& eq, const Rational& rho);

/// Window read directly off a general form whose terms are
/// c(z) D^j f(z-s) with z^<s> dividing c (s >= 0); forward shifts are first
/// rewritten over f(z). Throws std::invalid_argument otherwise.
CoefficientRecurrence template_recurrence(const GeneralForm& g);

struct IndicialResult {
  Poly polynomial;  ///< in rho: rho^<m> P_m(rho - m)
  PolyRoots roots;
};

/// Roots of the lowest row (n = -m) of the shifted recurrence.
IndicialResult indicial_exponents(const DifferenceEquation& eq);

struct AdamsSegment {
  Rational mu;  ///< slope
  int left = 0;
  int right = 0;
  int span = 0;
  /// sum over on-segment points of lc_x * gamma^(right - x)
  Poly char_poly;
  PolyRoots char_roots;
  /// 1/mu; nullopt for mu <= 0
  std::optional<Rational> chi;
};

struct AdamsPolygon {
  /// (x, j_x) with x = i - first and j_x = D - deg Q_i, nonzero Q only.
  std::vector<std::pair<int, int>> points;
  int D = 0;
  int xi = 0;  ///< leftmost window index attaining D
  std::vector<AdamsSegment> segments;
};

/// Lower convex hull of the points (collinear points merged).
AdamsPolygon adams_polygon(const CoefficientRecurrence& rec);

/// deg Q_{x+first} + x*mu for x = 0..window size-1; nullopt for zero Q.
std::vector<std::optional<Rational>> degree_profile(const CoefficientRecurrence& rec, const Rational& mu);

}  // namespace deltaorder
