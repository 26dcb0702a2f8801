#include "deltaorder/equation.hpp"

#include <algorithm>
#include <sstream>

#include "deltaorder/error.hpp"
#include "deltaorder/falling.hpp"

namespace deltaorder {

DifferenceEquation::DifferenceEquation(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() < 2) {
    throw DegenerateEquation(coeffs_.empty() ? "operator vanishes identically"
                                             : "operator has order 0 (no difference terms)");
  }
}

std::vector<int> DifferenceEquation::degrees() const {
  std::vector<int> d;
  d.reserve(coeffs_.size());
  for (const auto& p : coeffs_) d.push_back(p.degree());
  return d;
}

int DifferenceEquation::max_degree() const {
  int d = kZeroDegree;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  return d;
}

DifferenceEquation DifferenceEquation::canonical() const {
  Integer lcm_den = 1;
  for (const auto& p : coeffs_) {
    for (const auto& c : p.coeffs()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  Integer content = 0;
  for (const auto& p : coeffs_) {
    for (const auto& c : p.coeffs()) {
      Integer v = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  }
  Rational factor(lcm_den, content);
  factor.canonicalize();
  if (coeffs_.back().leading() < 0) factor = -factor;
  std::vector<Poly> scaled;
  scaled.reserve(coeffs_.size());
  for (const auto& p : coeffs_) scaled.push_back(p * factor);
  return DifferenceEquation(std::move(scaled));
}

std::vector<Integer> shifted_delta_coefficients(int m, int k) {
  // D^m f(z+k) = sum_j C(m,j) (-1)^j f(z+k+m-j),  f(z+s) = sum_i C(s,i) D^i f(z)
  std::vector<Integer> c(static_cast<std::size_t>(m + k) + 1, 0);
  for (int j = 0; j <= m; ++j) {
    const Integer outer = (j % 2 == 0 ? 1 : -1) * binomial(m, j);
    const int s = k + m - j;
    for (int i = 0; i <= s; ++i) c[static_cast<std::size_t>(i)] += outer * binomial(s, i);
  }
  return c;
}

DifferenceEquation normalize_to_delta(const GeneralForm& g) {
  int back = 0;
  for (const auto& t : g.terms) back = std::max(back, -t.shift);
  std::vector<Poly> coeffs;
  for (const auto& t : g.terms) {
    const Poly coef = t.coef.shifted(back);
    const auto c = shifted_delta_coefficients(t.delta_power, t.shift + back);
    if (coeffs.size() < c.size()) coeffs.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) coeffs[i] += coef * Rational(c[i]);
    }
  }
  return DifferenceEquation(std::move(coeffs)).canonical();
}

GeneralForm delta_to_shift(const DifferenceEquation& eq) {
  // D^j f = sum_k C(j,k) (-1)^{j-k} f(z+k)
  const int m = eq.order();
  GeneralForm g;
  for (int k = m; k >= 0; --k) {
    Poly r;
    for (int j = k; j <= m; ++j) {
      Integer c = binomial(j, k);
      if ((j - k) % 2 != 0) c = -c;
      r += eq[j] * Rational(c);
    }
    if (!r.is_zero()) g.terms.push_back({std::move(r), 0, k});
  }
  return g;
}

GeneralForm to_general(const DifferenceEquation& eq) {
  GeneralForm g;
  for (int j = eq.order(); j >= 0; --j) {
    if (!eq[j].is_zero()) g.terms.push_back({eq[j], j, 0});
  }
  return g;
}

std::vector<Poly> compose_operators(std::span<const Poly> outer, std::span<const Poly> inner) {
  // D^i (u v) = sum_l C(i,l) (D^l u)(z+i-l) D^{i-l} v
  if (outer.empty() || inner.empty()) return {};
  std::vector<Poly> out(outer.size() + inner.size() - 1);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i].is_zero()) continue;
    for (std::size_t k = 0; k < inner.size(); ++k) {
      if (inner[k].is_zero()) continue;
      for (std::size_t l = 0; l <= i; ++l) {
        Poly du = iterated_delta(inner[k], static_cast<int>(l));
        if (du.is_zero()) break;
        du = du.shifted(static_cast<long>(i - l));
        out[i + k - l] += outer[i] * du * Rational(binomial(static_cast<long>(i), static_cast<long>(l)));
      }
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

DifferenceEquation compose_operators(const DifferenceEquation& outer, const DifferenceEquation& inner) {
  return DifferenceEquation(compose_operators(outer.coeffs(), inner.coeffs()));
}

bool OperatorImage::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

OperatorImage apply_operator(const DifferenceEquation& eq, std::span<const Rational> a, int N,
                             const Rational& rho) {
  // P_j D^j a_n z^<n+rho> = a_n (n+rho)^<j> sum_t A_{j,t} z^<t> z^<n+rho-j>, expanded by
  // the falling product rule; the exponent n+rho+t-k-j lands in row n+t-k-j.
  const int m = eq.order();
  if (static_cast<long>(a.size()) < static_cast<long>(N) + m + 1) {
    throw InsufficientCoefficients("apply_operator needs " + std::to_string(N + m + 1) +
                                   " coefficients, got " + std::to_string(a.size()));
  }
  OperatorImage out;
  out.first_index = -m;
  out.coeffs.assign(static_cast<std::size_t>(N + m) + 1, 0);
  std::vector<std::vector<Rational>> falling;
  for (const auto& p : eq.coeffs()) falling.push_back(to_falling_basis(p));

  for (int n = 0; n <= N + m; ++n) {
    if (a[static_cast<std::size_t>(n)] == 0) continue;
    for (int j = 0; j <= m; ++j) {
      const Rational lead = a[static_cast<std::size_t>(n)] * falling_power(rho + n, j);
      if (lead == 0) continue;
      const Rational sigma = rho + n - j;
      const auto& A = falling[static_cast<std::size_t>(j)];
      for (int t = 0; t < static_cast<int>(A.size()); ++t) {
        if (A[static_cast<std::size_t>(t)] == 0) continue;
        for (const auto& term : falling_product_expand(t, sigma).terms) {
          // term.offset = t - k
          const int row = n + term.offset - j;
          if (row > N) continue;
          out.coeffs[static_cast<std::size_t>(row + m)] += lead * A[static_cast<std::size_t>(t)] * term.coefficient;
        }
      }
    }
  }
  return out;
}

namespace {

void print_operator(std::ostream& os, int power, int shift) {
  if (power == 1) {
    os << "D ";
  } else if (power > 1) {
    os << "D^" << power << ' ';
  }
  os << "f(z";
  if (shift > 0) os << '+' << shift;
  if (shift < 0) os << shift;
  os << ')';
}

}  // namespace

std::string to_string(const GeneralForm& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : g.terms) {
    Poly coef = t.coef;
    const bool negative = coef.leading() < 0;
    if (negative) coef = -coef;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (coef.degree() == 0) {
      if (coef.leading() != 1) os << coef.to_string() << ' ';
    } else if (coef.is_zero()) {
      os << "0 ";
    } else {
      os << '(' << coef.to_string() << ") ";
    }
    print_operator(os, t.delta_power, t.shift);
  }
  if (first) os << '0';
  os << " = 0";
  return os.str();
}

std::string to_string(const DifferenceEquation& eq) { return to_string(to_general(eq)); }

}  // namespace deltaorder
