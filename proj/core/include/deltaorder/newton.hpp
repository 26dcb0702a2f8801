#pragma once

#include <span>
#include <string>
#include <vector>

#include "deltaorder/equation.hpp"

namespace deltaorder {

struct OrderEntry {
  Rational rho;       ///< admissible order in (0,1)
  int max_count = 0;  ///< upper bound on independent solutions of this order

  friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

struct NewtonAnalysis {
  std::vector<int> degrees;  ///< d_0..d_m, kZeroDegree for zero coefficients
  std::vector<int> s_seq;    ///< s_1 > ... > s_p
  int p = 0;
  std::vector<OrderEntry> orders;  ///< j = 1..p-1, rho strictly decreasing
  int total_bound = 0;             ///< (s_1 - s_p) - (d_{s_1} - d_{s_p})
  bool exists_sub1 = false;        ///< p >= 2
};

/// Vertex chain of the upper convex hull of (k, d_k - k), walked leftward
/// from s_1 (leftmost index of maximal degree). Collinear points merge;
/// zero coefficients are never vertices. Throws DegenerateEquation when every
/// degree is the zero sentinel.
std::vector<int> s_sequence(std::span<const int> degrees);

/// rho_j = 1 + (d_{s_{j+1}} - d_{s_j}) / (s_j - s_{j+1}) with
/// max_count_j = (d_{s_{j+1}} - s_{j+1}) - (d_{s_j} - s_j).
std::vector<OrderEntry> order_list(std::span<const int> degrees, std::span<const int> s_seq);

/// Full analysis; checks the monotonicity chains and throws std::logic_error
/// if one fails.
NewtonAnalysis analyze_degrees(std::span<const int> degrees);
NewtonAnalysis analyze_newton(const DifferenceEquation& eq);

struct Verdict {
  bool exists_sub1 = false;
  int total_bound = 0;
  std::string text;
};

Verdict verdict(const NewtonAnalysis& analysis);

}  // namespace deltaorder
