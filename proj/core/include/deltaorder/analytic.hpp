#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "deltaorder/series.hpp"

namespace deltaorder {

/// Working precision in bits: DELTAORDER_PRECISION if set and >= 53, else 128.
long default_precision();

struct EvalResult {
  std::complex<double> value;  ///< may be infinite if |f| exceeds double range
  double log_abs = 0;          ///< log|f|, exact scale even when value overflows
  int terms_used = 0;
  double tail_bound = 0;  ///< heuristic: twice the last included |term|
  double log_scale = 0;   ///< log of the largest |term| seen
  long precision_bits = 0;
};

struct EvalOptions {
  double tol = 1e-16;
  long precision = 0;  ///< 0: default_precision()
};

/// Sums z^<rho> sum_n a_n (z-rho)^<n> in MPFR. Stops once three consecutive
/// nonzero terms are below tol * |partial sum| with term ratio below 1/2, or
/// exactly when (z-rho)^<n> vanishes. Precision is raised automatically when
/// cancellation would eat the working bits. Not rigorous.
///
/// Throws PoleError for Gamma poles of z^<rho> and NonConvergence when the
/// coefficients run out first (unless the series is terminating).
/// Not thread-safe: caches coefficient conversions; use one per thread.
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(SeriesSolution sol, EvalOptions options = {});
  ~SeriesEvaluator();
  SeriesEvaluator(SeriesEvaluator&&) noexcept;
  SeriesEvaluator& operator=(SeriesEvaluator&&) noexcept;

  EvalResult operator()(std::complex<double> z) const;
  const SeriesSolution& solution() const noexcept { return sol_; }

 private:
  struct Cache;
  SeriesSolution sol_;
  EvalOptions options_;
  std::unique_ptr<Cache> cache_;
};

EvalResult eval_series(const SeriesSolution& sol, std::complex<double> z, double tol = 1e-16);

struct MaxModulus {
  double log_M = 0;
  std::complex<double> argmax;
};

/// max |f| over `samples` equally spaced points on |z| = r, starting at
/// angle 0. Requires r > 0 and samples >= 8.
MaxModulus max_modulus(const SeriesEvaluator& f, double r, int samples = 64);

struct EmpiricalOrder {
  std::vector<double> radii;
  std::vector<double> log_M;
  double rho_hat = 0;  ///< slope of log log M against log r
  double L_hat = 0;    ///< log M / r^rho_hat at the last radius
  double fit_residual = 0;
  bool monotone = true;  ///< log M nondecreasing over the radii
};

/// Needs >= 4 strictly increasing radii with M > 1 at each.
EmpiricalOrder empirical_order(const SeriesEvaluator& f, std::span<const double> radii, int samples = 64);

}  // namespace deltaorder
