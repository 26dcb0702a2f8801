#include "deltaorder/falling.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "deltaorder/error.hpp"

namespace deltaorder {

FallingExpansion falling_product_expand(int m, const Rational& rho) {
  FallingExpansion out;
  out.rho = rho;
  out.terms.reserve(static_cast<std::size_t>(m) + 1);
  Rational rho_falling = 1;  // rho^<j>
  for (int j = 0; j <= m; ++j) {
    out.terms.push_back({Rational(binomial(m, j)) * rho_falling, m - j});
    rho_falling *= rho - j;
  }
  return out;
}

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(cd x) {
  if (x.imag() != 0.0) return false;
  return x.real() <= 0.0 && std::nearbyint(x.real()) == x.real();
}

std::optional<long> nonnegative_integer(cd x) {
  if (x.imag() != 0.0 || x.real() < 0.0 || x.real() > 1e6) return std::nullopt;
  if (std::nearbyint(x.real()) != x.real()) return std::nullopt;
  return static_cast<long>(x.real());
}

cd log1p_complex(cd w) {
  if (std::abs(w) < 0.5) {
    // log(1+w) = sum (-1)^{k+1} w^k / k
    cd term = w;
    cd sum = 0;
    for (int k = 1; k < 200; ++k) {
      const cd add = term / static_cast<double>(k);
      sum += (k % 2 == 1) ? add : -add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      term *= w;
    }
    return sum;
  }
  return std::log(1.0 + w);
}

// Stirling tail sum_k B_{2k} / (2k (2k-1) x^{2k-1})
cd stirling_tail(cd x) {
  static constexpr std::array<double, 8> kCoeffs = {
      1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0,         -1.0 / 1680.0,
      1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,          -3617.0 / 122400.0};
  const cd inv = 1.0 / x;
  const cd inv2 = inv * inv;
  cd power = inv;
  cd sum = 0;
  for (double c : kCoeffs) {
    sum += c * power;
    power *= inv2;
  }
  return sum;
}

}  // namespace

cd log_gamma_ratio(cd a, cd b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    throw PoleError("Gamma pole in difference power");
  }
  // Shift both arguments by the same integer N so that Re > 20:
  //   Gamma(a) = Gamma(a+N) / (a(a+1)...(a+N-1)).
  constexpr double kThreshold = 20.0;
  const double low = std::min(a.real(), b.real());
  const long shift = low < kThreshold ? static_cast<long>(std::ceil(kThreshold - low)) : 0;
  cd correction = 0;
  for (long k = 0; k < shift; ++k) {
    correction += std::log((b + static_cast<double>(k)) / (a + static_cast<double>(k)));
  }
  const cd A = a + static_cast<double>(shift);
  const cd B = b + static_cast<double>(shift);
  // (A-1/2)log A - (B-1/2)log B - (A-B) with log A = log B + log1p((A-B)/B)
  const cd diff = A - B;
  const cd log_b = std::log(B);
  const cd l = log1p_complex(diff / B);
  const cd main = diff * log_b + (A - 0.5) * l - diff;
  return main + stirling_tail(A) - stirling_tail(B) + correction;
}

cd log_falling_power(cd z, cd rho) {
  if (auto n = nonnegative_integer(rho)) {
    cd sum = 0;
    for (long k = 0; k < *n; ++k) {
      const cd f = z - static_cast<double>(k);
      if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
      sum += std::log(f);
    }
    return sum;
  }
  return log_gamma_ratio(z + 1.0, z + 1.0 - rho);
}

cd falling_power_eval(cd z, cd rho) {
  if (auto n = nonnegative_integer(rho)) {
    cd product = 1;
    for (long k = 0; k < *n; ++k) product *= z - static_cast<double>(k);
    return product;
  }
  return std::exp(log_gamma_ratio(z + 1.0, z + 1.0 - rho));
}

}  // namespace deltaorder
