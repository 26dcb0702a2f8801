#pragma once

#include <string>
#include <vector>

#include "deltaorder/equation.hpp"
#include "deltaorder/series.hpp"

namespace deltaorder {

/// Equation with an entire solution of order q/p:
///   sum_{j=1}^{p} A_j z^<j> D^j f(z-j) - A_0 z^<q> f(z-q) = 0,
/// where sum_j A_j n^<j> = A_0 (n p / q)^<p>, A primitive integers.
struct ConstructionResult {
  int q = 0;
  int p = 0;
  std::vector<Rational> A;  ///< A_0..A_p
  GeneralForm template_form;
  DifferenceEquation canonical;  ///< template at z+p, in Delta form
  /// a_{qt} = 1/(pt)!, t = 0..terms, zero elsewhere.
  SeriesSolution predicted;
};

/// Throws InvalidOrder unless 0 < q < p and gcd(q, p) = 1.
ConstructionResult construct_equation(int q, int p, int terms = 200);

struct RoundtripReport {
  bool order_listed = false;  ///< q/p in the Newton order list
  bool polygon_segment = false;  ///< Adams segment of slope p/q
  bool residual_zero = false;  ///< predicted stream solves every row exactly
  int rows_checked = 0;
  bool solve_matches = false;  ///< solver with pinned free values reproduces it
  double chi_hat = 0;
  bool chi_ok = false;  ///< |chi_hat - q/p| < 0.01
  bool ok = false;
  std::string failed_stage;  ///< empty when ok
};

RoundtripReport roundtrip_check(const ConstructionResult& res);

}  // namespace deltaorder
