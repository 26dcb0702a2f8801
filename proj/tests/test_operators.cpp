#include <doctest.h>

#include <functional>
#include <map>

#include <deltaorder/equation.hpp>
#include <deltaorder/error.hpp>
#include <deltaorder/parser.hpp>

#include "fixtures.hpp"

using namespace deltaorder;

namespace {

std::map<int, Poly> by_shift(const GeneralForm& g) {
  std::map<int, Poly> out;
  for (const auto& t : g.terms) {
    REQUIRE(t.delta_power == 0);
    out[t.shift] += t.coef;
  }
  return out;
}

// sum_j P_j(z) (D^j g)(z), with D^j expanded over values of g.
Rational apply_pointwise(std::span<const Poly> coeffs, const std::function<Rational(const Rational&)>& g,
                         const Rational& z) {
  Rational total = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    Rational diff = 0;
    const long jj = static_cast<long>(j);
    for (long i = 0; i <= jj; ++i) {
      const Rational term = Rational(binomial(jj, i)) * g(z + i);
      diff += ((jj - i) % 2 == 0) ? term : Rational(-term);
    }
    total += coeffs[j](z) * diff;
  }
  return total;
}

std::vector<Poly> random_coeffs(fixtures::Gen& gen, int max_order, int max_degree) {
  const int m = gen.uniform(0, max_order);
  std::vector<Poly> c;
  for (int j = 0; j <= m; ++j) c.push_back(gen.poly(max_degree, j == m));
  return c;
}

}  // namespace

TEST_CASE("parse the order-1/3 equation") {
  const GeneralForm g = parse_equation(fixtures::kOneThird);
  REQUIRE(g.terms.size() == 4);
  CHECK(g.terms[0].coef == Poly{15, 19, 6});
  CHECK(g.terms[0].delta_power == 3);
  CHECK(g.terms[1].coef == Poly{3, 1});
  CHECK(g.terms[1].delta_power == 2);
  CHECK(g.terms[2].coef == Poly{-1});
  CHECK(g.terms[2].delta_power == 1);
  CHECK(g.terms[3].coef == Poly{-1});
  CHECK(g.terms[3].delta_power == 0);
  for (const auto& t : g.terms) CHECK(t.shift == 0);
}

TEST_CASE("parse shift terms and notation variants") {
  const GeneralForm g = parse_equation("f(z+1) - f(z) = 0");
  REQUIRE(g.terms.size() == 2);
  CHECK(g.terms[0].shift == 1);
  CHECK(g.terms[1].shift == 0);
  CHECK(g.terms[1].coef == Poly{-1});

  CHECK(parse_equation("\xCE\x94 f(z) - f(z) = 0") == parse_equation("D f(z) - f(z) = 0"));
  CHECK(parse_equation("2z D^2 y(z-3) = 0") == parse_equation("(2*z) D^2 f(z-3) = 0"));
  CHECK(parse_equation("1/2 z f(z) = 0").terms[0].coef == Poly{0, Rational(1, 2)});
  CHECK(parse_polynomial("256 z (z-1)(z-2)") == Rational(256) * Poly::falling(3));
  CHECK(parse_polynomial("-(z^2+1)") == Poly{-1, 0, -1});
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_equation("(z) D f(z) + = 0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_THROWS_AS(parse_equation("f(z) = 1"), ParseError);
  CHECK_THROWS_AS(parse_equation("D f(z)"), ParseError);
  CHECK_THROWS_AS(parse_equation("D f(w) = 0"), ParseError);
  CHECK_THROWS_AS(parse_equation("(z+ D f(z) = 0"), ParseError);
}

TEST_CASE("normalize to Delta form") {
  const auto target = fixtures::equation(fixtures::kThreeQuarters);
  CHECK(target[4] == Poly{3640, 4656, 1920, 256});
  CHECK(target[0] == Poly{-486, -405, -81});
  CHECK(fixtures::equation(fixtures::kThreeQuartersShift) == target);
  CHECK(fixtures::equation(fixtures::kThreeQuartersTemplate) == target);
  CHECK(fixtures::equation("f(z+1) - f(z) = 0") == DifferenceEquation({Poly{}, Poly{1}}));
  CHECK_THROWS_AS(fixtures::equation("f(z) - f(z) = 0"), DegenerateEquation);
  CHECK_THROWS_AS(fixtures::equation("(z+1) f(z) = 0"), DegenerateEquation);
}

TEST_CASE("canonical scaling") {
  const DifferenceEquation eq({Poly{Rational(1, 2)}, Poly{Rational(-1, 3), Rational(-2, 3)}});
  const auto c = eq.canonical();
  CHECK(c[1] == Poly{2, 4});
  CHECK(c[0] == Poly{-3});
}

TEST_CASE("shifted Delta coefficients against the binomial oracle") {
  // D^m f(z+k) = sum_i C(k,i) D^{m+i} f(z)
  for (int m = 0; m <= 6; ++m) {
    for (int k = 0; k <= 6; ++k) {
      const auto c = shifted_delta_coefficients(m, k);
      REQUIRE(c.size() == static_cast<std::size_t>(m + k + 1));
      for (int i = 0; i <= m + k; ++i) {
        CHECK(c[static_cast<std::size_t>(i)] == (i < m ? Integer(0) : binomial(k, i - m)));
      }
    }
  }
}

TEST_CASE("Delta form to shift form") {
  const auto shift = by_shift(delta_to_shift(fixtures::equation(fixtures::kThreeQuarters)));
  const auto expect = by_shift(parse_equation(fixtures::kThreeQuartersShift));
  CHECK(shift == expect);
  CHECK(shift.at(3) == Poly{-12616, -16864, -7296, -1024});

  const auto d = by_shift(delta_to_shift(DifferenceEquation({Poly{}, Poly{1}})));
  CHECK(d.size() == 2);
  CHECK(d.at(1) == Poly{1});
  CHECK(d.at(0) == Poly{-1});
}

TEST_CASE("property: shift form round trip") {
  fixtures::Gen gen(404);
  for (int trial = 0; trial < 100; ++trial) {
    const auto eq = gen.equation(5, 4).canonical();
    CHECK(normalize_to_delta(delta_to_shift(eq)) == eq);
    CHECK(normalize_to_delta(to_general(eq)) == eq);
  }
}

TEST_CASE("printer") {
  const auto eq = fixtures::equation(fixtures::kOneThird);
  CHECK(to_string(eq) == fixtures::kOneThird);
  CHECK(to_string(fixtures::equation(fixtures::kThreeQuarters)).find("- (80z+120) D^2 f(z)") !=
        std::string::npos);
}

TEST_CASE("property: parse(print(g)) == g") {
  fixtures::Gen gen(505);
  for (int trial = 0; trial < 100; ++trial) {
    GeneralForm g;
    const int count = gen.uniform(1, 5);
    for (int k = 0; k < count; ++k) {
      Term t;
      t.coef = gen.poly(3, true);
      if (t.coef.is_zero()) t.coef = Poly{1};
      t.delta_power = gen.uniform(0, 4);
      t.shift = gen.uniform(-3, 3);
      g.terms.push_back(t);
    }
    const std::string text = to_string(g);
    CAPTURE(text);
    CHECK(parse_equation(text) == g);
  }
}

TEST_CASE("composition of known operators") {
  const auto l8 = compose_operators(fixtures::equation(fixtures::kL3), fixtures::equation(fixtures::kL5));
  CHECK(l8 == fixtures::l8());
  CHECK(l8[8].to_string() == "216z^9+7452z^8+105678z^7+794461z^6+3416591z^5+8524337z^4+12085315z^3+8972550z^2+2691000z");

  const DifferenceEquation delta({Poly{}, Poly{1}});
  CHECK(compose_operators(delta, delta) == DifferenceEquation({Poly{}, Poly{}, Poly{1}}));

  const std::vector<Poly> d{Poly{}, Poly{1}};
  const std::vector<Poly> times_z{Poly{0, 1}};
  CHECK(compose_operators(d, times_z) == std::vector<Poly>{Poly{1}, Poly{1, 1}});
}

TEST_CASE("property: composition is associative and acts pointwise") {
  fixtures::Gen gen(606);
  // A rational test function evaluated exactly.
  auto g = [](const Rational& x) -> Rational { return Rational(1) / (x * x + Rational(1, 3)) + x * x * x; };
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_coeffs(gen, 3, 2);
    const auto b = random_coeffs(gen, 3, 2);
    const auto c = random_coeffs(gen, 3, 2);
    const auto ab = compose_operators(a, b);
    CHECK(compose_operators(ab, c) == compose_operators(a, compose_operators(b, c)));

    auto bg = [&](const Rational& x) -> Rational { return apply_pointwise(b, g, x); };
    for (int x = -2; x <= 3; ++x) {
      CHECK(apply_pointwise(ab, g, fixtures::q(x, 2)) == apply_pointwise(a, bg, fixtures::q(x, 2)));
    }
  }
}

TEST_CASE("apply_operator on known solutions") {
  const auto one = fixtures::equation(fixtures::kOneThird);
  const auto alpha = fixtures::alpha_stream(60);
  CHECK(apply_operator(one, alpha, 50).is_zero());
  CHECK(apply_operator(one, alpha, 50).first_index == -3);

  const auto quarter = fixtures::equation(fixtures::kThreeQuarters);
  CHECK(apply_operator(quarter, fixtures::quarter_stream(70), 60).is_zero());

  const std::vector<Rational> zeros(40);
  CHECK(apply_operator(quarter, zeros, 30).is_zero());
  CHECK_THROWS_AS(apply_operator(quarter, zeros, 36), InsufficientCoefficients);

  auto broken = alpha;
  broken[5] += 1;
  const auto img = apply_operator(one, broken, 50);
  CHECK_FALSE(img.is_zero());
}

TEST_CASE("property: apply(A o B) = apply(A) o apply(B)") {
  fixtures::Gen gen(707);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = gen.equation(3, 2);
    const auto b = gen.equation(3, 2);
    const auto ab = compose_operators(a, b);
    const int N = 20;
    std::vector<Rational> f;
    for (int k = 0; k <= N + ab.order(); ++k) f.push_back(gen.rational());

    const auto direct = apply_operator(ab, f, N);
    const auto inner = apply_operator(b, f, N + a.order());
    // With offset 0 the image has no mass below index 0.
    std::vector<Rational> bf;
    for (int n = inner.first_index; n <= N + a.order(); ++n) {
      const Rational& v = inner.coeffs[static_cast<std::size_t>(n - inner.first_index)];
      if (n < 0) {
        CHECK(v == 0);
      } else {
        bf.push_back(v);
      }
    }
    const auto outer = apply_operator(a, bf, N);
    for (int n = 0; n <= N; ++n) {
      CHECK(direct.coeffs[static_cast<std::size_t>(n - direct.first_index)] ==
            outer.coeffs[static_cast<std::size_t>(n - outer.first_index)]);
    }
  }
}

TEST_CASE("unknown function name is consistent") {
  CHECK(parse_equation("D g(z) - g(z) = 0") == parse_equation("D f(z) - f(z) = 0"));
  CHECK_THROWS_AS(parse_equation("D g(z) - h(z) = 0"), ParseError);
}
