#include "deltaorder/series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "deltaorder/error.hpp"

namespace deltaorder {

SeriesSolution make_series(std::vector<Rational> coeffs, const Rational& rho, std::string provenance) {
  SeriesSolution s;
  s.rho_offset = rho;
  s.coeffs = std::move(coeffs);
  s.provenance = std::move(provenance);
  s.log_abs.reserve(s.coeffs.size());
  int first_nonzero = -1;
  int last_nonzero = -1;
  int g = 0;
  for (int n = 0; n < static_cast<int>(s.coeffs.size()); ++n) {
    const auto& c = s.coeffs[static_cast<std::size_t>(n)];
    s.log_abs.push_back(log_abs(c));
    if (c == 0) continue;
    if (first_nonzero < 0) {
      first_nonzero = n;
    } else {
      g = std::gcd(g, n - first_nonzero);
    }
    last_nonzero = n;
  }
  if (g > 1) s.support_modulus = g;
  s.terminating = 2 * (last_nonzero + 1) <= static_cast<int>(s.coeffs.size());
  return s;
}

namespace {

// c0 + sum_k c[k] p_k over every parameter ever introduced.
struct Affine {
  Rational c0 = 0;
  std::vector<Rational> c;

  void resize(std::size_t n) {
    if (c.size() < n) c.resize(n, 0);
  }
  void add_scaled(const Affine& other, const Rational& factor) {
    if (factor == 0) return;
    resize(other.c.size());
    c0 += factor * other.c0;
    for (std::size_t k = 0; k < other.c.size(); ++k) {
      if (other.c[k] != 0) c[k] += factor * other.c[k];
    }
  }
};

class Eliminator {
 public:
  explicit Eliminator(bool pinned_input) : any_pins_(pinned_input) {}

  std::vector<Affine> values;
  std::vector<bool> alive;
  std::vector<int> introduced_at;

  Affine new_parameter(int index) {
    Affine a;
    a.c.assign(alive.size() + 1, 0);
    a.c.back() = 1;
    alive.push_back(true);
    introduced_at.push_back(index);
    return a;
  }

  void constrain(Affine e, bool from_pin) {
    int pivot = -1;
    for (int k = static_cast<int>(e.c.size()) - 1; k >= 0; --k) {
      if (alive[static_cast<std::size_t>(k)] && e.c[static_cast<std::size_t>(k)] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot < 0) {
      if (e.c0 == 0) return;
      if (from_pin || pins_applied_) {
        throw InconsistentInitialData("initial values contradict the recurrence rows");
      }
      throw EmptySolutionSpace("recurrence rows are contradictory");
    }
    // p = -(e - c_p p) / c_p
    Affine sub = e;
    const Rational cp = sub.c[static_cast<std::size_t>(pivot)];
    sub.c[static_cast<std::size_t>(pivot)] = 0;
    const Rational scale = Rational(-1) / cp;
    sub.c0 *= scale;
    for (auto& x : sub.c) x *= scale;
    for (auto& v : values) {
      if (static_cast<std::size_t>(pivot) >= v.c.size()) continue;
      const Rational f = v.c[static_cast<std::size_t>(pivot)];
      if (f == 0) continue;
      v.c[static_cast<std::size_t>(pivot)] = 0;
      v.add_scaled(sub, f);
    }
    alive[static_cast<std::size_t>(pivot)] = false;
    if (from_pin) pins_applied_ = true;
  }

  bool any_pins() const { return any_pins_; }

 private:
  bool any_pins_ = false;
  bool pins_applied_ = false;
};

}  // namespace

SolutionSpace solve_series(const CoefficientRecurrence& rec, int N, const SolveOptions& options) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  for (const auto& [k, v] : options.initial) {
    if (k < 0 || k > N) throw std::invalid_argument("pinned index a_" + std::to_string(k) + " outside 0..N");
  }
  const Poly lead_poly = rec.Q(rec.first);
  Eliminator el(!options.initial.empty());
  el.values.reserve(static_cast<std::size_t>(N) + 1);

  for (int t = 0; t <= N; ++t) {
    const int n = t + rec.first;
    const Rational x = n;
    Affine rest;
    for (int i = rec.first + 1; i <= rec.last(); ++i) {
      const int k = n - i;
      if (k < 0) break;
      const Poly& q = rec.window[static_cast<std::size_t>(i - rec.first)];
      if (q.is_zero()) continue;
      rest.add_scaled(el.values[static_cast<std::size_t>(k)], q(x));
    }
    if (options.rhs) rest.c0 -= options.rhs(n);
    const Rational lead = lead_poly(x);
    if (lead != 0) {
      Affine a;
      a.add_scaled(rest, Rational(-1) / lead);
      el.values.push_back(std::move(a));
    } else {
      el.values.push_back(el.new_parameter(t));
      el.constrain(std::move(rest), false);
    }
    if (auto it = options.initial.find(t); it != options.initial.end()) {
      Affine e = el.values.back();
      e.c0 -= it->second;
      el.constrain(std::move(e), true);
    }
  }

  SolutionSpace space;
  for (auto& v : el.values) {
    v.resize(el.alive.size());
    space.particular.push_back(v.c0);
  }
  for (std::size_t k = 0; k < el.alive.size(); ++k) {
    if (!el.alive[k]) continue;
    std::vector<Rational> b;
    b.reserve(el.values.size());
    for (const auto& v : el.values) b.push_back(v.c[k]);
    space.basis.push_back(std::move(b));
    space.free_indices.push_back(el.introduced_at[k]);
  }
  const bool particular_zero =
      std::all_of(space.particular.begin(), space.particular.end(), [](const Rational& r) { return r == 0; });
  if (space.basis.empty() && particular_zero && !options.rhs) {
    throw EmptySolutionSpace("only the zero series satisfies the recurrence");
  }
  return space;
}

std::vector<SeriesSolution> solution_streams(const SolutionSpace& space, const Rational& rho) {
  std::vector<SeriesSolution> out;
  const bool particular_zero =
      std::all_of(space.particular.begin(), space.particular.end(), [](const Rational& r) { return r == 0; });
  if (!particular_zero) out.push_back(make_series(space.particular, rho, "particular"));
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    out.push_back(make_series(space.basis[k], rho, "basis: free a_" + std::to_string(space.free_indices[k])));
  }
  return out;
}

GrowthEstimate estimate_chi_log(std::span<const double> log_abs, const ChiOptions& options) {
  std::vector<int> idx;
  for (int n = 1; n < static_cast<int>(log_abs.size()); ++n) {
    if (std::isfinite(log_abs[static_cast<std::size_t>(n)])) idx.push_back(n);
  }
  if (static_cast<int>(idx.size()) < options.min_nonzero) {
    throw TooFewTerms("chi fit needs " + std::to_string(options.min_nonzero) + " nonzero terms, got " +
                      std::to_string(idx.size()));
  }
  const std::size_t start = idx.size() / 2;
  const Eigen::Index rows = static_cast<Eigen::Index>(idx.size() - start);
  Eigen::MatrixXd A(rows, 4);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double n = idx[start + static_cast<std::size_t>(r)];
    const double ln = std::log(n);
    A(r, 0) = n * ln;
    A(r, 1) = n;
    A(r, 2) = ln;
    A(r, 3) = 1.0;
    y(r) = -log_abs[static_cast<std::size_t>(idx[start + static_cast<std::size_t>(r)])];
  }
  const Eigen::VectorXd scale = A.colwise().maxCoeff().cwiseAbs().transpose();
  for (Eigen::Index c = 0; c < 4; ++c) A.col(c) /= scale(c);
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((A * x - y).squaredNorm() / static_cast<double>(rows));
  x = x.cwiseQuotient(scale);

  GrowthEstimate g;
  g.fit_first = idx[start];
  g.fit_last = idx.back();
  g.mu = x(0);
  g.beta = x(1);
  g.gamma = x(2);
  g.delta = x(3);
  g.residual = rms;
  if (g.mu > 0) {
    g.chi_hat = 1.0 / g.mu;
    g.converged = true;
  } else {
    g.chi_hat = std::numeric_limits<double>::infinity();
    g.converged = false;
  }
  return g;
}

GrowthEstimate estimate_chi(std::span<const Rational> coeffs, const ChiOptions& options) {
  std::vector<double> logs;
  logs.reserve(coeffs.size());
  for (const auto& c : coeffs) logs.push_back(log_abs(c));
  return estimate_chi_log(logs, options);
}

VerifyResult verify_recurrence(const CoefficientRecurrence& rec, std::span<const Rational> a, int N,
                               const std::function<Rational(int)>& rhs) {
  VerifyResult out;
  for (int n = rec.first; n <= N; ++n) {
    Rational r = rec.row(n, a);
    if (rhs) r -= rhs(n);
    ++out.rows_checked;
    if (r != 0) {
      if (!out.first_failing_row) out.first_failing_row = n;
      out.ok = false;
      const Rational mag = abs(r);
      if (mag > out.max_abs_residual) out.max_abs_residual = mag;
    }
  }
  return out;
}

}  // namespace deltaorder
