#include "deltaorder/analytic.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "deltaorder/error.hpp"
#include "deltaorder/falling.hpp"

namespace deltaorder {

long default_precision() {
  static const long bits = [] {
    const char* env = std::getenv("DELTAORDER_PRECISION");
    if (env == nullptr) return 128L;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    return (end != env && *end == '\0' && v >= 53 && v <= 1'000'000) ? v : 128L;
  }();
  return bits;
}

namespace {

constexpr long kMaxPrecision = 16384;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class Real {
 public:
  explicit Real(long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

double log_of(mpfr_srcptr x, Real& scratch) {
  if (mpfr_zero_p(x)) return kNegInf;
  mpfr_abs(scratch.get(), x, MPFR_RNDN);
  mpfr_log(scratch.get(), scratch.get(), MPFR_RNDN);
  return mpfr_get_d(scratch.get(), MPFR_RNDN);
}

}  // namespace

struct SeriesEvaluator::Cache {
  std::map<long, std::vector<Real>> by_precision;

  mpfr_srcptr coefficient(const std::vector<Rational>& a, long prec, std::size_t n) {
    auto& v = by_precision[prec];
    while (v.size() <= n) {
      Real r(prec);
      mpfr_set_q(r.get(), a[v.size()].get_mpq_t(), MPFR_RNDN);
      v.push_back(std::move(r));
    }
    return v[n].get();
  }
};

SeriesEvaluator::SeriesEvaluator(SeriesSolution sol, EvalOptions options)
    : sol_(std::move(sol)), options_(options), cache_(std::make_unique<Cache>()) {
  if (options_.precision <= 0) options_.precision = default_precision();
}

SeriesEvaluator::~SeriesEvaluator() = default;
SeriesEvaluator::SeriesEvaluator(SeriesEvaluator&&) noexcept = default;
SeriesEvaluator& SeriesEvaluator::operator=(SeriesEvaluator&&) noexcept = default;

namespace {

struct RawSum {
  double log_abs = kNegInf;
  double arg = 0;
  double re = 0;
  double im = 0;
  double log_max_term = kNegInf;
  double log_last_term = kNegInf;
  int terms = 0;
  bool converged = false;
};

}  // namespace

EvalResult SeriesEvaluator::operator()(std::complex<double> z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("non-finite evaluation point");
  std::complex<double> log_prefactor = 0;
  if (sol_.rho_offset != 0) {
    log_prefactor = log_falling_power(z, to_double(sol_.rho_offset));
  }

  const auto& a = sol_.coeffs;
  const double log_tol = std::log(options_.tol);
  long prec = options_.precision;
  RawSum s;
  for (;;) {
    s = RawSum{};
    Real wr(prec), wi(prec), fr(prec), fi(prec), tr(prec), ti(prec), sr(prec), si(prec), x(prec), y(prec),
        scratch(prec), cr(prec);
    mpfr_set_d(wr.get(), z.real(), MPFR_RNDN);
    mpfr_sub_q(wr.get(), wr.get(), sol_.rho_offset.get_mpq_t(), MPFR_RNDN);
    mpfr_set_d(wi.get(), z.imag(), MPFR_RNDN);
    mpfr_set_ui(fr.get(), 1, MPFR_RNDN);
    mpfr_set_zero(fi.get(), 1);
    int small_run = 0;
    double prev = kNegInf;
    bool exact_end = false;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (n > 0) {
        // F *= (w - (n-1))
        mpfr_sub_ui(cr.get(), wr.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
        if (mpfr_zero_p(cr.get()) && mpfr_zero_p(wi.get())) {
          exact_end = true;
          break;
        }
        mpfr_mul(x.get(), fr.get(), cr.get(), MPFR_RNDN);
        mpfr_mul(y.get(), fi.get(), wi.get(), MPFR_RNDN);
        mpfr_mul(fi.get(), fi.get(), cr.get(), MPFR_RNDN);
        mpfr_fma(fi.get(), fr.get(), wi.get(), fi.get(), MPFR_RNDN);
        mpfr_sub(fr.get(), x.get(), y.get(), MPFR_RNDN);
      }
      if (a[n] == 0) continue;
      mpfr_srcptr c = cache_->coefficient(a, prec, n);
      mpfr_mul(tr.get(), fr.get(), c, MPFR_RNDN);
      mpfr_mul(ti.get(), fi.get(), c, MPFR_RNDN);
      mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
      mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);
      s.terms = static_cast<int>(n) + 1;

      mpfr_hypot(x.get(), tr.get(), ti.get(), MPFR_RNDN);
      const double lt = log_of(x.get(), scratch);
      mpfr_hypot(y.get(), sr.get(), si.get(), MPFR_RNDN);
      const double ls = log_of(y.get(), scratch);
      s.log_max_term = std::max(s.log_max_term, lt);
      s.log_last_term = lt;
      if (lt == kNegInf || (lt < log_tol + ls && lt - prev < -std::numbers::ln2)) {
        ++small_run;
      } else {
        small_run = 0;
      }
      prev = lt;
      if (small_run >= 3) {
        s.converged = true;
        break;
      }
    }
    if (exact_end || sol_.terminating) s.converged = true;
    mpfr_hypot(y.get(), sr.get(), si.get(), MPFR_RNDN);
    s.log_abs = log_of(y.get(), scratch);
    mpfr_atan2(x.get(), si.get(), sr.get(), MPFR_RNDN);
    s.arg = mpfr_get_d(x.get(), MPFR_RNDN);
    s.re = mpfr_get_d(sr.get(), MPFR_RNDN);
    s.im = mpfr_get_d(si.get(), MPFR_RNDN);

    const double lost_bits = (s.log_max_term - s.log_abs) / std::numbers::ln2;
    if (s.log_max_term == kNegInf || lost_bits < static_cast<double>(prec) - 64 || prec >= kMaxPrecision) break;
    prec = std::min(kMaxPrecision, std::max(2 * prec, static_cast<long>(lost_bits) + 128));
  }
  if (!s.converged) {
    throw NonConvergence("series did not converge within " + std::to_string(a.size()) + " coefficients");
  }

  EvalResult r;
  r.terms_used = s.terms;
  r.precision_bits = prec;
  r.log_scale = s.log_max_term + log_prefactor.real();
  r.log_abs = s.log_abs + log_prefactor.real();
  r.tail_bound = s.log_last_term == kNegInf ? 0.0 : 2.0 * std::exp(s.log_last_term + log_prefactor.real());
  if (sol_.rho_offset == 0 && std::isfinite(s.re) && std::isfinite(s.im)) {
    r.value = {s.re, s.im};
  } else {
    r.value = r.log_abs == kNegInf ? std::complex<double>(0, 0)
                                   : std::polar(std::exp(r.log_abs), s.arg + log_prefactor.imag());
  }
  return r;
}

EvalResult eval_series(const SeriesSolution& sol, std::complex<double> z, double tol) {
  EvalOptions opt;
  opt.tol = tol;
  return SeriesEvaluator(sol, opt)(z);
}

MaxModulus max_modulus(const SeriesEvaluator& f, double r, int samples) {
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  if (samples < 8) throw std::invalid_argument("at least 8 samples per circle");
  MaxModulus out;
  out.log_M = kNegInf;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const auto z = std::polar(r, theta);
    const double l = f(z).log_abs;
    if (l > out.log_M) {
      out.log_M = l;
      out.argmax = z;
    }
  }
  return out;
}

EmpiricalOrder empirical_order(const SeriesEvaluator& f, std::span<const double> radii, int samples) {
  if (radii.size() < 4) throw std::invalid_argument("need at least 4 radii");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) throw std::invalid_argument("radii must be strictly increasing");
  }
  EmpiricalOrder e;
  e.radii.assign(radii.begin(), radii.end());
  for (double r : radii) e.log_M.push_back(max_modulus(f, r, samples).log_M);
  for (std::size_t i = 1; i < e.log_M.size(); ++i) {
    if (e.log_M[i] < e.log_M[i - 1]) e.monotone = false;
  }
  const auto n = static_cast<double>(radii.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(e.log_M[i] > 0)) throw NonConvergence("maximum modulus does not exceed 1 at r = " + std::to_string(radii[i]));
    const double x = std::log(radii[i]);
    const double y = std::log(e.log_M[i]);
    xs.push_back(x);
    ys.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = ys[i] - (intercept + slope * xs[i]);
    rss += d * d;
  }
  e.rho_hat = slope;
  e.fit_residual = std::sqrt(rss / n);
  e.L_hat = e.log_M.back() / std::pow(radii.back(), slope);
  return e;
}

}  // namespace deltaorder
