#include "deltaorder/construct.hpp"

#include <cmath>
#include <numeric>

#include "deltaorder/error.hpp"
#include "deltaorder/newton.hpp"
#include "deltaorder/recurrence.hpp"

namespace deltaorder {

ConstructionResult construct_equation(int q, int p, int terms) {
  if (q <= 0 || p <= q || std::gcd(q, p) != 1) {
    throw InvalidOrder("order must be q/p with 0 < q < p and gcd(q, p) = 1, got " + std::to_string(q) + "/" +
                       std::to_string(p));
  }
  if (terms < 1) throw std::invalid_argument("terms must be positive");

  // (n/lambda)^<p> = (pn/q)^<p>
  const Rational inv_lambda(p, q);
  Poly target = Poly::constant(1);
  for (int k = 0; k < p; ++k) target *= Poly{Rational(-k), inv_lambda};
  const auto falling = to_falling_basis(target);

  std::vector<Rational> A(static_cast<std::size_t>(p) + 1, 0);
  A[0] = 1;
  for (int j = 1; j <= p; ++j) A[static_cast<std::size_t>(j)] = falling[static_cast<std::size_t>(j)];
  Rational scale;
  Poly(A).primitive(&scale);
  for (auto& a : A) a *= scale;

  GeneralForm tmpl;
  for (int j = p; j >= 1; --j) {
    tmpl.terms.push_back({Poly::falling(j) * A[static_cast<std::size_t>(j)], j, -j});
  }
  tmpl.terms.push_back({Poly::falling(q) * Rational(-A[0]), 0, -q});
  DifferenceEquation canonical = normalize_to_delta(tmpl);

  std::vector<Rational> a(static_cast<std::size_t>(q) * terms + 1, 0);
  for (int t = 0; t <= terms; ++t) {
    a[static_cast<std::size_t>(q) * t] = Rational(Integer(1), factorial(static_cast<long>(p) * t));
  }
  return {q, p, std::move(A), std::move(tmpl), std::move(canonical),
          make_series(std::move(a), 0, "a_{qt} = 1/(pt)!")};
}

RoundtripReport roundtrip_check(const ConstructionResult& res) {
  RoundtripReport r;
  const Rational order(res.q, res.p);
  auto fail = [&](const char* stage) {
    if (r.failed_stage.empty()) r.failed_stage = stage;
  };

  const auto na = analyze_newton(res.canonical);
  for (const auto& o : na.orders) r.order_listed = r.order_listed || o.rho == order;
  if (!r.order_listed) fail("newton");

  const auto rec = derive_recurrence(res.canonical);
  const auto poly = adams_polygon(rec);
  for (const auto& seg : poly.segments) r.polygon_segment = r.polygon_segment || (seg.chi && *seg.chi == order);
  if (!r.polygon_segment) fail("adams");

  const auto& a = res.predicted.coeffs;
  const int N = static_cast<int>(a.size()) - 1;
  const int last_row = N + rec.first;
  const auto v = verify_recurrence(rec, a, last_row);
  r.rows_checked = v.rows_checked;
  r.residual_zero = v.ok;
  if (!r.residual_zero) fail("residual");

  try {
    const auto free_space = solve_series(rec, N);
    SolveOptions pins;
    for (int k : free_space.free_indices) pins.initial[k] = a[static_cast<std::size_t>(k)];
    const auto pinned = solve_series(rec, N, pins);
    r.solve_matches = pinned.dimension() == 0 && pinned.particular == a;
  } catch (const Error&) {
    r.solve_matches = false;
  }
  if (!r.solve_matches) fail("solve");

  try {
    r.chi_hat = estimate_chi(a).chi_hat;
    r.chi_ok = std::abs(r.chi_hat - to_double(order)) < 0.01;
  } catch (const Error&) {
    r.chi_ok = false;
  }
  if (!r.chi_ok) fail("chi");

  r.ok = r.failed_stage.empty();
  return r;
}

}  // namespace deltaorder
