#include "deltaorder/recurrence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "deltaorder/error.hpp"
#include "deltaorder/newton.hpp"

namespace deltaorder {

Poly CoefficientRecurrence::Q(int i) const {
  if (i < first || i > last()) return Poly();
  return window[static_cast<std::size_t>(i - first)];
}

Rational CoefficientRecurrence::row(int n, std::span<const Rational> a) const {
  if (static_cast<long>(a.size()) <= static_cast<long>(n) - first) {
    throw InsufficientCoefficients("row " + std::to_string(n) + " needs a_" + std::to_string(n - first));
  }
  Rational sum = 0;
  const Rational x = n;
  for (int i = first; i <= last(); ++i) {
    const int k = n - i;
    if (k < 0) break;
    const auto& c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto& q = window[static_cast<std::size_t>(i - first)];
    if (!q.is_zero()) sum += c * q(x);
  }
  return sum;
}

namespace {

// Literal rows n < d: sum_{i<=n} sum_j a_{n-i+j} (n-i+j)^<j> (D^i P_j)(n-i) / i!
std::vector<std::vector<Rational>> low_rows(const DifferenceEquation& eq, int d) {
  const int m = eq.order();
  std::vector<std::vector<Rational>> rows;
  for (int n = 0; n < d; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(d - 1 + m) + 1, 0);
    for (int i = 0; i <= n; ++i) {
      const Rational inv_fact(Integer(1), factorial(i));
      for (int j = 0; j <= m; ++j) {
        const Poly dp = iterated_delta(eq[j], i);
        if (dp.is_zero()) continue;
        const int idx = n - i + j;
        row[static_cast<std::size_t>(idx)] += falling_power(idx, j) * dp(Rational(n - i)) * inv_fact;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_degree_chain(const DifferenceEquation& eq, const CoefficientRecurrence& rec) {
  const auto na = analyze_newton(eq);
  const auto& deg = na.degrees;
  for (int s : na.s_seq) {
    if (rec.Q(deg[s] - s).degree() != s) throw std::logic_error("window degree chain violated at a vertex");
  }
  const int s1 = na.s_seq.front();
  const int sp = na.s_seq.back();
  for (int k = deg[sp] - sp + 1; k <= rec.last(); ++k) {
    if (!rec.Q(k).is_zero()) throw std::logic_error("window entry beyond the last vertex is nonzero");
  }
  for (int k = rec.first; k < deg[s1] - s1; ++k) {
    if (rec.Q(k).degree() > deg[s1] - k) throw std::logic_error("window degree bound violated");
  }
}

}  // namespace

CoefficientRecurrence derive_recurrence(const DifferenceEquation& eq) {
  CoefficientRecurrence rec;
  rec.m = eq.order();
  rec.d = std::max(eq.max_degree(), 0);
  rec.first = -rec.m;
  for (int i = -rec.m; i <= rec.d; ++i) {
    Poly q;
    for (int j = 0; j <= rec.m; ++j) {
      if (i + j < 0) continue;
      const Poly dp = iterated_delta(eq[j], i + j);
      if (dp.is_zero()) continue;
      q += Poly::falling(j, -i) * dp.shifted(-j - i) * Rational(Integer(1), factorial(i + j));
    }
    rec.window.push_back(std::move(q));
  }
  rec.initial_constraints = low_rows(eq, rec.d);
  check_degree_chain(eq, rec);
  return rec;
}

CoefficientRecurrence shifted_recurrence(const DifferenceEquation& eq, const Rational& rho) {
  if (rho < 0 && is_integer(rho)) throw std::invalid_argument("rho must not be a negative integer");
  // P_j D^j a_n z^<N> = a_n sum_t A_{j,t} sum_k C(t,k) N^<j+k> z^<N+t-k-j>,  N = n + rho
  CoefficientRecurrence rec;
  rec.m = eq.order();
  rec.d = std::max(eq.max_degree(), 0);
  rec.rho_offset = rho;
  rec.first = -rec.m;
  rec.window.assign(static_cast<std::size_t>(rec.m + rec.d) + 1, Poly());
  for (int j = 0; j <= rec.m; ++j) {
    const auto A = to_falling_basis(eq[j]);
    for (int t = 0; t < static_cast<int>(A.size()); ++t) {
      if (A[static_cast<std::size_t>(t)] == 0) continue;
      for (int k = 0; k <= t; ++k) {
        const int i = t - k - j;
        rec.window[static_cast<std::size_t>(i + rec.m)] +=
            Poly::falling(j + k, rho - i) * (A[static_cast<std::size_t>(t)] * Rational(binomial(t, k)));
      }
    }
  }
  if (rho == 0) rec.initial_constraints = low_rows(eq, rec.d);
  return rec;
}

CoefficientRecurrence template_recurrence(const GeneralForm& g) {
  std::vector<Term> terms;
  for (const auto& t : g.terms) {
    if (t.shift <= 0) {
      terms.push_back(t);
      continue;
    }
    const auto c = shifted_delta_coefficients(t.delta_power, t.shift);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) terms.push_back({t.coef * Rational(c[i]), static_cast<int>(i), 0});
    }
  }

  // c(z) = z^<s> R(z),  R(z) = sum_t B_t (z-s)^<t>,
  // z^<s> (z-s)^<t> D^j (z-s)^<n>  ->  sum_k C(t,k) n^<j+k> z^<n-j+t-k+s>
  std::map<int, Poly> window;
  int max_power = 0;
  int max_degree = 0;
  for (const auto& t : terms) {
    const int s = -t.shift;
    Poly r = t.coef;
    for (int root = 0; root < s; ++root) {
      if (r(Rational(root)) != 0) {
        throw std::invalid_argument("template term coefficient not divisible by the falling factorial of its shift");
      }
      r = deflate(r, root);
    }
    max_power = std::max(max_power, t.delta_power);
    max_degree = std::max(max_degree, t.coef.degree());
    const auto B = to_falling_basis(r.shifted(s));
    const int j = t.delta_power;
    for (int tt = 0; tt < static_cast<int>(B.size()); ++tt) {
      if (B[static_cast<std::size_t>(tt)] == 0) continue;
      for (int k = 0; k <= tt; ++k) {
        const int i = -j + tt - k + s;
        window[i] += Poly::falling(j + k, -i) * (B[static_cast<std::size_t>(tt)] * Rational(binomial(tt, k)));
      }
    }
  }
  std::erase_if(window, [](const auto& kv) { return kv.second.is_zero(); });
  if (window.empty()) throw DegenerateEquation("template operator vanishes identically");

  CoefficientRecurrence rec;
  rec.m = max_power;
  rec.d = max_degree;
  rec.first = window.begin()->first;
  for (int i = rec.first; i <= window.rbegin()->first; ++i) {
    auto it = window.find(i);
    rec.window.push_back(it == window.end() ? Poly() : it->second);
  }
  return rec;
}

IndicialResult indicial_exponents(const DifferenceEquation& eq) {
  const int m = eq.order();
  IndicialResult r;
  r.polynomial = Poly::falling(m) * eq[m].shifted(-m);
  if (r.polynomial.is_zero()) throw DegenerateEquation("indicial polynomial vanishes identically");
  r.roots = find_roots(r.polynomial);
  return r;
}

AdamsPolygon adams_polygon(const CoefficientRecurrence& rec) {
  AdamsPolygon poly;
  int D = kZeroDegree;
  for (int i = rec.first; i <= rec.last(); ++i) {
    const int deg = rec.Q(i).degree();
    if (deg > D) {
      D = deg;
      poly.xi = i;
    }
  }
  if (D == kZeroDegree) throw std::invalid_argument("empty recurrence window");
  poly.D = D;
  for (int i = rec.first; i <= rec.last(); ++i) {
    const Poly q = rec.Q(i);
    if (!q.is_zero()) poly.points.emplace_back(i - rec.first, D - q.degree());
  }

  // Lower hull, collinear points dropped from the vertex list.
  std::vector<std::pair<int, int>> hull;
  auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : poly.points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const auto [xl, jl] = hull[h];
    const auto [xr, jr] = hull[h + 1];
    AdamsSegment seg;
    seg.left = xl;
    seg.right = xr;
    seg.span = xr - xl;
    seg.mu = Rational(jr - jl, xr - xl);
    seg.mu.canonicalize();
    std::vector<Rational> cp(static_cast<std::size_t>(seg.span) + 1, 0);
    for (const auto& [x, j] : poly.points) {
      if (x < xl || x > xr) continue;
      if (static_cast<long>(j - jl) * (xr - xl) != static_cast<long>(jr - jl) * (x - xl)) continue;
      cp[static_cast<std::size_t>(xr - x)] = rec.Q(x + rec.first).leading();
    }
    seg.char_poly = Poly(std::move(cp));
    seg.char_roots = find_roots(seg.char_poly);
    if (seg.mu > 0) seg.chi = Rational(Rational(1) / seg.mu);
    poly.segments.push_back(std::move(seg));
  }
  return poly;
}

std::vector<std::optional<Rational>> degree_profile(const CoefficientRecurrence& rec, const Rational& mu) {
  std::vector<std::optional<Rational>> out;
  for (int x = 0; x < static_cast<int>(rec.window.size()); ++x) {
    const auto& q = rec.window[static_cast<std::size_t>(x)];
    if (q.is_zero()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(Rational(q.degree()) + mu * x);
    }
  }
  return out;
}

}  // namespace deltaorder
