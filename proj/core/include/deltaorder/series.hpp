#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltaorder/recurrence.hpp"

namespace deltaorder {

/// f = sum_n coeffs[n] z^<n + rho_offset>, truncated.
struct SeriesSolution {
  Rational rho_offset = 0;
  std::vector<Rational> coeffs;
  /// log|a_n|, -infinity for zero coefficients.
  std::vector<double> log_abs;
  /// a_n != 0 only for n in first_nonzero + k*modulus (when > 1).
  std::optional<int> support_modulus;
  /// No nonzero coefficient in the second half of the stream.
  bool terminating = false;
  std::string provenance;
};

SeriesSolution make_series(std::vector<Rational> coeffs, const Rational& rho = 0, std::string provenance = {});

/// Affine solution set a = particular + sum_k c_k basis[k] of the rows
/// n = first .. N + first (so a_0..a_N are constrained by every row that
/// mentions only them).
struct SolutionSpace {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;
  /// Index of the coefficient that introduced each basis element.
  std::vector<int> free_indices;

  int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

struct SolveOptions {
  /// Pinned values a_k = v, applied as soon as a_k is reached.
  std::map<int, Rational> initial;
  /// Right-hand side per row index n (inhomogeneous rows); null for 0.
  std::function<Rational(int)> rhs;
};

/// Row-by-row elimination: a nonzero leading coefficient Q_first(n)
/// determines a_{n-first}; a vanishing one makes it a new free parameter and
/// turns the row into a constraint. Throws InconsistentInitialData when pins
/// contradict the rows and EmptySolutionSpace when only the zero stream
/// remains (homogeneous, unpinned) or the rows are contradictory.
SolutionSpace solve_series(const CoefficientRecurrence& rec, int N, const SolveOptions& options = {});

/// Basis streams as SeriesSolutions (the particular stream first when the
/// space is affine).
std::vector<SeriesSolution> solution_streams(const SolutionSpace& space, const Rational& rho);

struct GrowthEstimate {
  double chi_hat = 0;
  int fit_first = 0;  ///< index range of the fit
  int fit_last = 0;
  double mu = 0;  ///< -log|a_n| ~ mu n log n + beta n + gamma log n + delta
  double beta = 0;
  double gamma = 0;
  double delta = 0;
  double residual = 0;  ///< RMS of the fit
  bool converged = false;
};

struct ChiOptions {
  int min_nonzero = 64;
};

/// Least-squares fit over the trailing half of the nonzero terms (n >= 1).
/// chi_hat = 1/mu, or +infinity with converged = false when mu <= 0.
/// Throws TooFewTerms below options.min_nonzero nonzero terms.
GrowthEstimate estimate_chi(std::span<const Rational> coeffs, const ChiOptions& options = {});
/// Same on log|a_n| values (-infinity marks zero terms).
GrowthEstimate estimate_chi_log(std::span<const double> log_abs, const ChiOptions& options = {});

struct VerifyResult {
  bool ok = true;
  std::optional<int> first_failing_row;
  Rational max_abs_residual = 0;
  int rows_checked = 0;
};

/// Substitutes a into rows n = first .. N (needs a_0..a_{N-first}).
VerifyResult verify_recurrence(const CoefficientRecurrence& rec, std::span<const Rational> a, int N,
                               const std::function<Rational(int)>& rhs = {});

}  // namespace deltaorder
