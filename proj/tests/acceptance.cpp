// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status 1
// if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include <deltaorder/analytic.hpp>
#include <deltaorder/construct.hpp>
#include <deltaorder/error.hpp>
#include <deltaorder/falling.hpp>
#include <deltaorder/newton.hpp>
#include <deltaorder/recurrence.hpp>
#include <deltaorder/series.hpp>

#include "fixtures.hpp"

using namespace deltaorder;
using fixtures::q;

namespace {

// Pinned tolerances and budgets.
constexpr double kChiTol = 0.01;
constexpr double kGrowthTol = 0.1;
constexpr double kProductRelTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > budget_s) {
    o.ok = false;
    o.detail = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %8.2fs / %4.0fs%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Rational> normalized(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(x / v[0]);
  return out;
}

std::vector<Rational> one_third_stream(int n) {
  SolveOptions opts;
  opts.initial = {{0, 1}, {1, 1}, {2, q(1, 4)}};
  return solve_series(derive_recurrence(fixtures::equation(fixtures::kOneThird)), n, opts).particular;
}

std::vector<Rational> single_stream(const CoefficientRecurrence& rec, int n) {
  const auto space = solve_series(rec, n);
  if (space.dimension() != 1) throw std::runtime_error("expected a one-dimensional space");
  return normalized(space.basis[0]);
}

bool has_order(const NewtonAnalysis& na, const Rational& rho) {
  for (const auto& o : na.orders) {
    if (o.rho == rho) return true;
  }
  return false;
}

}  // namespace

int main() {
  criterion(1, "order-1/3 example analysis", 1, [](Outcome& o) {
    const auto na = analyze_newton(fixtures::equation(fixtures::kOneThird));
    o.require(na.p == 2, "p != 2");
    o.require(na.s_seq == std::vector<int>{3, 0}, "s != (3,0)");
    o.require(na.orders == std::vector<OrderEntry>{{q(1, 3), 1}}, "order list != {1/3 x1}");
  });

  criterion(2, "order-3/4 example analysis", 1, [](Outcome& o) {
    const auto eq = fixtures::equation(fixtures::kThreeQuarters);
    const auto na = analyze_newton(eq);
    o.require(na.s_seq == std::vector<int>{4, 0}, "s != (4,0)");
    o.require(na.orders == std::vector<OrderEntry>{{q(3, 4), 3}}, "order list != {3/4 x3}");
    const auto rec = derive_recurrence(eq);
    const std::vector<std::string> window{
        "8 (z+1) (z+2) (z+3) (z+4) (2z+5) (4z+7) (4z+13)",
        "24 (z+1) (z+2) (z+3) (2z+3) (4z+3) (4z+9)",
        "24 (z+1) (z+2) (2z+1) (4z-1) (4z+5)",
        "(z+1) (256z^3-465z^2-357z-446)",
        "-243 (z+1)(z+2)",
        "-243 (z+1)",
        "-81",
    };
    o.require(rec.first == -4, "window does not start at i = -4");
    for (int i = -4; i <= 2; ++i) {
      o.require(rec.Q(i) == parse_polynomial(window[static_cast<std::size_t>(i + 4)]),
                "Q(n," + std::to_string(i) + ") differs");
    }
    for (int i = 3; i <= rec.last(); ++i) o.require(rec.Q(i).is_zero(), "extra nonzero Q");
    const auto poly = adams_polygon(rec);
    const std::vector<std::pair<int, int>> points{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 6}, {6, 7}};
    o.require(poly.points == points, "Adams points differ");
    bool seg = false;
    for (const auto& s : poly.segments) seg = seg || (s.mu == q(4, 3) && s.left == 3 && s.right == 6);
    o.require(seg, "no slope-4/3 segment from (3,3) to (6,7)");
  });

  criterion(3, "composition L3 o L5", 5, [](Outcome& o) {
    const auto l8 = compose_operators(fixtures::equation(fixtures::kL3), fixtures::equation(fixtures::kL5));
    const auto expect = fixtures::l8();
    o.require(l8.order() == 8, "order != 8");
    for (int j = 0; j <= 8; ++j) o.require(l8[j] == expect[j], "coefficient of D^" + std::to_string(j) + " differs");
    const auto na = analyze_newton(l8);
    o.require(na.s_seq == std::vector<int>{8, 5, 0}, "s != (8,5,0)");
    o.require(na.orders == std::vector<OrderEntry>{{q(1, 3), 1}, {q(1, 5), 1}}, "orders != {1/3, 1/5}");
    o.require(na.total_bound == 2, "total bound != 2");
  });

  criterion(4, "coefficient stream chi estimates", 10, [](Outcome& o) {
    const auto alpha = one_third_stream(500);
    o.require(std::abs(estimate_chi(alpha).chi_hat - 1.0 / 3.0) < kChiTol, "order-1/3 stream");
    const auto quarter = single_stream(template_recurrence(parse_equation(fixtures::kThreeQuartersTemplate)), 600);
    o.require(quarter == fixtures::quarter_stream(600), "order-3/4 stream pattern");
    o.require(std::abs(estimate_chi(quarter).chi_hat - 0.75) < kChiTol, "order-3/4 stream");
    const auto fifth = single_stream(template_recurrence(parse_equation(fixtures::kL5Template)), 500);
    o.require(std::abs(estimate_chi(fifth).chi_hat - 0.2) < kChiTol, "order-1/5 stream");
  });

  criterion(5, "constructor round trip, p <= 6", 60, [](Outcome& o) {
    for (int p = 2; p <= 6; ++p) {
      for (int k = 1; k < p; ++k) {
        if (std::gcd(k, p) != 1) continue;
        const std::string tag = std::to_string(k) + "/" + std::to_string(p);
        const auto res = construct_equation(k, p, 200);
        o.require(has_order(analyze_newton(res.canonical), q(k, p)), tag + " not in order list");
        const auto rep = roundtrip_check(res);
        o.require(rep.residual_zero && rep.rows_checked >= 200, tag + " residual over 200 rows");
        o.require(std::abs(rep.chi_hat - static_cast<double>(k) / p) < kChiTol, tag + " chi");
        o.require(rep.ok, tag + " round trip failed at " + rep.failed_stage);
      }
    }
  });

  bool zero_order_seen = false;
  criterion(6, "Newton-Adams consistency (200)", 120, [&](Outcome& o) {
    fixtures::Gen gen(20260601);
    for (int trial = 0; trial < 200; ++trial) {
      const auto eq = gen.equation(6, 5);
      const auto na = analyze_newton(eq);
      for (const auto& e : na.orders) zero_order_seen = zero_order_seen || e.rho == 0;
      std::vector<OrderEntry> adams;
      for (const auto& s : adams_polygon(derive_recurrence(eq)).segments) {
        if (s.mu > 1) adams.push_back({Rational(Rational(1) / s.mu), s.span});
      }
      o.require(adams == na.orders, "mismatch at trial " + std::to_string(trial) + ": " + to_string(eq));
    }
  });

  criterion(7, "negative verdicts, no order 0", 1, [&](Outcome& o) {
    for (const char* text : {"z D f(z) + (z-1) f(z) = 0", "D f(z) - f(z) = 0"}) {
      const auto na = analyze_newton(fixtures::equation(text));
      const auto v = verdict(na);
      o.require(na.p == 1 && !v.exists_sub1, std::string(text) + " has p != 1");
      o.require(v.text.find("no sub-1 entire solutions") != std::string::npos, "verdict text");
    }
    o.require(!zero_order_seen, "order 0 emitted in the random suite");
  });

  criterion(8, "indicial exponents", 1, [](Outcome& o) {
    const auto r = indicial_exponents(fixtures::equation(fixtures::kOneThird)).roots;
    o.require(r.rational == std::vector<Rational>{0, 1, q(4, 3), q(3, 2), 2}, "rational roots differ");
    o.require(r.numeric.empty(), "unexpected irrational roots");
  });

  criterion(9, "empirical growth, radii 50..800", 120, [](Outcome& o) {
    const std::vector<double> radii{50, 100, 200, 400, 800};
    const SeriesEvaluator f1(make_series(one_third_stream(600)));
    const auto e1 = empirical_order(f1, radii);
    o.require(std::abs(e1.rho_hat - 1.0 / 3.0) < kGrowthTol, "order-1/3 rho_hat " + std::to_string(e1.rho_hat));
    const SeriesEvaluator f2(make_series(fixtures::quarter_stream(1500)));
    const auto e2 = empirical_order(f2, radii);
    o.require(std::abs(e2.rho_hat - 0.75) < kGrowthTol, "order-3/4 rho_hat " + std::to_string(e2.rho_hat));
    std::printf("     rho_hat: %.4f (1/3), %.4f (3/4)\n", e1.rho_hat, e2.rho_hat);
  });

  criterion(10, "product identity and round trips", 60, [](Outcome& o) {
    fixtures::Gen gen(31);
    // Error is measured against sum |term|: the expansion can cancel by six
    // orders of magnitude (rho = -11, m = 6), which no double evaluation of
    // the right side survives. Raw relative error is printed alongside.
    double worst = 0;
    double worst_raw = 0;
    double worst_cond = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int m = gen.uniform(0, 6);
      const Rational rho = gen.rational(12, 5);
      const double r = to_double(rho);
      const auto ex = falling_product_expand(m, rho);
      for (int s = 0; s < 5; ++s) {
        const std::complex<double> z(gen.uniform(-80, 80) / 10.0, gen.uniform(1, 60) / 10.0);
        const auto lhs = falling_power_eval(z, double(m)) * falling_power_eval(z, r);
        std::complex<double> rhs = 0;
        double scale = 0;
        for (const auto& t : ex.terms) {
          const auto v = to_double(t.coefficient) * falling_power_eval(z, r + t.offset);
          rhs += v;
          scale += std::abs(v);
        }
        const double diff = std::abs(lhs - rhs);
        worst = std::max(worst, diff / std::max(scale, std::abs(lhs)));
        worst_raw = std::max(worst_raw, diff / std::abs(lhs));
        worst_cond = std::max(worst_cond, scale / std::abs(lhs));
      }
    }
    o.require(worst < kProductRelTol, "relative error " + std::to_string(worst));

    for (int trial = 0; trial < 100; ++trial) {
      const Poly p = gen.poly(8);
      o.require(from_falling_basis(to_falling_basis(p)) == p, "falling basis round trip");
      const auto eq = gen.equation(5, 4).canonical();
      o.require(normalize_to_delta(delta_to_shift(eq)) == eq, "shift/Delta round trip");
    }
    std::printf("     worst error: %.2e of sum |term|, %.2e of |lhs|, max cancellation %.1e\n", worst, worst_raw,
                worst_cond);
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
