#include "deltaorder/newton.hpp"

#include <sstream>
#include <stdexcept>

#include "deltaorder/error.hpp"

namespace deltaorder {

std::vector<int> s_sequence(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  int s = -1;
  for (int k = 0; k < n; ++k) {
    if (degrees[k] == kZeroDegree) continue;
    if (s < 0 || degrees[k] > degrees[s]) s = k;
  }
  if (s < 0) throw DegenerateEquation("all coefficients vanish");

  std::vector<int> seq{s};
  for (;;) {
    const long ys = static_cast<long>(degrees[s]) - s;
    int best = -1;
    Rational best_rho;
    for (int k = 0; k < s; ++k) {
      if (degrees[k] == kZeroDegree) continue;
      const long yk = static_cast<long>(degrees[k]) - k;
      if (yk <= ys) continue;
      const Rational rho(yk - ys, s - k);
      if (best < 0 || rho > best_rho) {
        best = k;
        best_rho = rho;
      }
    }
    if (best < 0) break;
    s = best;
    seq.push_back(s);
  }
  return seq;
}

std::vector<OrderEntry> order_list(std::span<const int> degrees, std::span<const int> s_seq) {
  std::vector<OrderEntry> out;
  for (std::size_t j = 0; j + 1 < s_seq.size(); ++j) {
    const int a = s_seq[j];
    const int b = s_seq[j + 1];
    Rational rho = 1 + Rational(degrees[b] - degrees[a], a - b);
    rho.canonicalize();
    out.push_back({rho, (degrees[b] - b) - (degrees[a] - a)});
  }
  return out;
}

NewtonAnalysis analyze_degrees(std::span<const int> degrees) {
  NewtonAnalysis a;
  a.degrees.assign(degrees.begin(), degrees.end());
  a.s_seq = s_sequence(degrees);
  a.p = static_cast<int>(a.s_seq.size());
  a.orders = order_list(degrees, a.s_seq);
  const int s1 = a.s_seq.front();
  const int sp = a.s_seq.back();
  a.total_bound = (s1 - sp) - (degrees[s1] - degrees[sp]);
  a.exists_sub1 = a.p >= 2;

  int sum = 0;
  for (std::size_t j = 0; j < a.orders.size(); ++j) {
    const int hi = a.s_seq[j];
    const int lo = a.s_seq[j + 1];
    const auto& o = a.orders[j];
    if (!(degrees[hi] > degrees[lo]) || !(degrees[lo] - lo > degrees[hi] - hi) || !(o.rho > 0) ||
        !(o.rho < 1) || o.max_count < 1 || (j > 0 && !(o.rho < a.orders[j - 1].rho))) {
      throw std::logic_error("Newton analysis invariant violated");
    }
    sum += o.max_count;
  }
  if (sum != a.total_bound || (a.p >= 2 && a.total_bound >= static_cast<int>(degrees.size()) - 1)) {
    throw std::logic_error("Newton analysis bound mismatch");
  }
  return a;
}

NewtonAnalysis analyze_newton(const DifferenceEquation& eq) {
  const auto d = eq.degrees();
  return analyze_degrees(d);
}

Verdict verdict(const NewtonAnalysis& analysis) {
  Verdict v;
  v.exists_sub1 = analysis.exists_sub1;
  v.total_bound = analysis.total_bound;
  std::ostringstream os;
  if (!analysis.exists_sub1) {
    os << "p = 1: no sub-1 entire solutions (no transcendental entire solution of order < 1).";
  } else {
    os << "p = " << analysis.p << ": transcendental entire solutions of order < 1 exist; possible orders ";
    for (std::size_t j = 0; j < analysis.orders.size(); ++j) {
      const auto& o = analysis.orders[j];
      if (j > 0) os << ", ";
      os << o.rho.get_str() << " (at most " << o.max_count << ')';
    }
    os << "; at most " << analysis.total_bound << " independent such solutions in total.";
  }
  os << " Order 0 does not occur.";
  v.text = os.str();
  return v;
}

}  // namespace deltaorder
