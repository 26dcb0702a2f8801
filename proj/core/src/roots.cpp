#include "deltaorder/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deltaorder {

namespace {

// Positive divisors of |n| when cheap to enumerate, else 1..limit.
std::vector<long> denominator_candidates(const Integer& n) {
  Integer a = abs(n);
  std::vector<long> out;
  if (a.fits_slong_p() && a.get_si() <= 1'000'000'000'000L) {
    const long v = a.get_si();
    for (long d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        if (d != v / d) out.push_back(v / d);
      }
    }
    std::sort(out.begin(), out.end());
  } else {
    for (long d = 1; d <= 4096; ++d) out.push_back(d);
  }
  return out;
}

}  // namespace

Poly deflate(const Poly& p, const Rational& root) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly();
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    carry = carry * root + c[i];
    q[i - 1] = carry;
  }
  return Poly(std::move(q));
}

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = to_double(p.coeff(i) / p.leading());

  std::vector<std::complex<double>> roots;
  if (n == 1) {
    roots.emplace_back(-a[0], 0.0);
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -a[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    for (int i = 0; i < n; ++i) roots.push_back(ev[i]);
  }
  const Poly dp = [&] {
    std::vector<Rational> d;
    for (int i = 1; i <= n; ++i) d.push_back(p.coeff(i) * i);
    return Poly(std::move(d));
  }();
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const auto fd = dp(r);
      if (std::abs(fd) == 0.0) break;
      const auto step = p(r) / fd;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 1e-3 * std::max(1.0, std::abs(r))) break;
      r -= step;
    }
  }
  std::sort(roots.begin(), roots.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

PolyRoots find_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  PolyRoots out;
  Poly rest = p.primitive();
  while (rest.degree() >= 1 && rest.coeff(0) == 0) {
    out.rational.emplace_back(0);
    rest = deflate(rest, 0);
  }
  bool found = true;
  while (found && rest.degree() >= 1) {
    found = false;
    const auto dens = denominator_candidates(rest.leading().get_num());
    for (const auto& r : numeric_roots(rest)) {
      if (std::abs(r.imag()) > 1e-4 * std::max(1.0, std::abs(r.real()))) continue;
      if (std::abs(r.real()) > 1e15) continue;
      for (long q : dens) {
        const double num = std::nearbyint(r.real() * static_cast<double>(q));
        if (std::abs(num - r.real() * static_cast<double>(q)) > 1e-3 * q) continue;
        Rational c(Integer(static_cast<long>(num)), Integer(q));
        c.canonicalize();
        if (rest(c) == 0) {
          out.rational.push_back(c);
          rest = deflate(rest, c);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  out.numeric = numeric_roots(rest);
  return out;
}

}  // namespace deltaorder
