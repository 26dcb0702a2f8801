#pragma once

#include <random>
#include <string>
#include <vector>

#include <deltaorder/equation.hpp>
#include <deltaorder/parser.hpp>
#include <deltaorder/poly.hpp>
#include <deltaorder/rational.hpp>

namespace fixtures {

using deltaorder::DifferenceEquation;
using deltaorder::Poly;
using deltaorder::Rational;

// Third-order equation with an entire solution of order 1/3.
inline const std::string kOneThird =
    "(6z^2+19z+15) D^3 f(z) + (z+3) D^2 f(z) - D f(z) - f(z) = 0";

// Fourth-order equation with an entire solution of order 3/4, Delta form.
inline const std::string kThreeQuarters =
    "(256z^3+1920z^2+4656z+3640) D^4 y(z) + (384z^2+1760z+1944) D^3 y(z)"
    " - (80z+120) D^2 y(z) - (81z^2+405z+446) D y(z) - (81z^2+405z+486) y(z) = 0";

// The same operator before the shift z -> z+3.
inline const std::string kThreeQuartersTemplate =
    "256 z (z - 1) (z - 2) D^4 y(z-3) + 384 z (z - 1) D^3 y(z-2)"
    " - 80 z D^2 y(z-1) + 40 D y(z) - 81 z (z - 1) y(z-2) = 0";

// The same operator in pure shift form.
inline const std::string kThreeQuartersShift =
    "(256z^3+1920z^2+4656z+3640) y(z+4) - (1024z^3+7296z^2+16864z+12616) y(z+3)"
    " + (1536z^3+10368z^2+22576z+15888) y(z+2) - (1024z^3+6609z^2+13589z+8934) y(z+1)"
    " + (256z^3+1536z^2+2816z+1536) y(z) = 0";

// Annihilates z*f(z) for the order-1/3 solution f.
inline const std::string kL3 =
    "(6z^5+37z^4+84z^3+83z^2+30z) D^3 g(z) - (17z^4+68z^3+87z^2+36z) D^2 g(z)"
    " + (33z^3+97z^2+66z) D g(z) - (z^3+39z^2+108z+72) g(z) = 0";

// Fifth-order equation with an entire solution of order 1/5.
inline const std::string kL5 =
    "(36z^4+588z^3+3583z^2+9653z+9702) D^5 h(z) + (228z^3+2594z^2+9806z+12319) D^4 h(z)"
    " + (271z^2+1981z+3596) D^3 h(z) + (28z+114) D^2 h(z) - 2 D h(z) - h(z) = 0";

// c_j z^<j> D^j h(z-j), j = 5..1, and -z h(z).
inline const std::string kL5Template =
    "36 z(z-1)(z-2)(z-3)(z-4) D^5 h(z-5) + 228 z(z-1)(z-2)(z-3) D^4 h(z-4)"
    " + 271 z(z-1)(z-2) D^3 h(z-3) + 28 z(z-1) D^2 h(z-2) + 3 z D h(z-1) - z h(z) = 0";

// L3 o L5, coefficients of D^8 .. D^0.
inline const std::vector<std::string> kL8Coefficients = {
    "216z^9+7452z^8+105678z^7+794461z^6+3416591z^5+8524337z^4+12085315z^3+8972550z^2+2691000z",
    "3348z^8+86148z^7+870903z^6+4406121z^5+11934400z^4+17615961z^3+13383629z^2+4084050z",
    "14130z^7+248295z^6+1591736z^5+4758666z^4+7634180z^3+6616921z^2+2403240z",
    "-36z^7+14809z^6+143264z^5+466401z^4+1080909z^3+1284431z^2-112998z-698544",
    "-(228z^6+3675z^5+30092z^4-1004z^3+285305z^2+1168092z+886968)",
    "-(277z^5+3909z^4+16443z^3+155801z^2+394482z+258912)",
    "-(11z^4+280z^3+4861z^2+12576z+8208)",
    "-31z^3-19z^2+150z+144",
    "z^3+39z^2+108z+72",
};

// Reduced a/b (gmpxx does not reduce two-argument constructions).
inline Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline DifferenceEquation equation(const std::string& text) {
  return deltaorder::normalize_to_delta(deltaorder::parse_equation(text));
}

inline DifferenceEquation l8() {
  std::vector<Poly> c;
  for (auto it = kL8Coefficients.rbegin(); it != kL8Coefficients.rend(); ++it) {
    c.push_back(deltaorder::parse_polynomial(*it));
  }
  return DifferenceEquation(std::move(c));
}

// alpha_n of the order-1/3 solution: n(2n-3)(3n-4) alpha_n = alpha_{n-1}.
inline std::vector<Rational> alpha_stream(int n_max) {
  std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    a[n] = a[n - 1] / Rational(static_cast<long>(n) * (2 * n - 3) * (3 * n - 4));
  }
  return a;
}

// a_{3k} = 1/(4k)!, zero elsewhere.
inline std::vector<Rational> quarter_stream(int n_max) {
  std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; 3 * k <= n_max; ++k) {
    a[3 * k] = Rational(1) / Rational(deltaorder::factorial(4 * k));
  }
  return a;
}

// n(2n-1)(2n-3)(3n-1)(3n-4) gamma_n = gamma_{n-1}.
inline std::vector<Rational> gamma_stream(int n_max) {
  std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    const long long c = 1LL * n * (2 * n - 1) * (2 * n - 3) * (3 * n - 1) * (3 * n - 4);
    a[n] = a[n - 1] / Rational(mpz_class(std::to_string(c)));
  }
  return a;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational(int num_bound = 9, int den_bound = 4) {
    return q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }

  Poly poly(int max_degree, bool nonzero = false) {
    const int deg = uniform(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = rational();
    if (nonzero && c.back() == 0) c.back() = uniform(1, 5);
    return Poly(std::move(c));
  }

  // Integer coefficients, exact degree `deg` (or zero with probability ~1/6
  // when allowed).
  Poly int_poly(int deg, bool allow_zero) {
    if (allow_zero && uniform(0, 5) == 0) return Poly{};
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = uniform(-9, 9);
    while (c.back() == 0) c.back() = uniform(-9, 9);
    return Poly(std::move(c));
  }

  DifferenceEquation equation(int max_order, int max_degree) {
    const int m = uniform(1, max_order);
    std::vector<Poly> c;
    for (int j = 0; j <= m; ++j) c.push_back(int_poly(uniform(0, max_degree), j != m));
    return DifferenceEquation(std::move(c));
  }
};

}  // namespace fixtures
