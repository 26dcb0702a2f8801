#include "deltaorder/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace deltaorder {

// gmpxx leaves two-argument constructions like mpq_class(2, 2) unreduced.
Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::falling(int k, const Rational& shift) {
  Poly r = constant(1);
  for (int t = 0; t < k; ++t) r *= Poly{shift - t, 1};
  return r;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::shifted(const Rational& s) const {
  if (s == 0 || coeffs_.size() <= 1) return *this;
  // Horner in the ring: acc = acc*(z+s) + c_i
  std::vector<Rational> acc;
  acc.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + s * acc[i];
    acc[0] = s * acc[0] + *it;
  }
  return Poly(std::move(acc));
}

Poly Poly::primitive(Rational* scale) const {
  if (is_zero()) {
    if (scale) *scale = 1;
    return *this;
  }
  Integer lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational factor(lcm_den, content);
  factor.canonicalize();
  if (scale) *scale = factor;
  return *this * factor;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

std::string Poly::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (is_integer(mag)) {
        os << mag.get_num().get_str();
      } else {
        os << mag.get_num().get_str() << '/' << mag.get_den().get_str();
        if (i > 0) os << '*';
      }
    }
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly poly_delta(const Poly& p) { return p.shifted(1) - p; }

Poly iterated_delta(const Poly& p, int k) {
  Poly r = p;
  for (int i = 0; i < k && !r.is_zero(); ++i) r = poly_delta(r);
  return r;
}

namespace {

class StirlingTables {
 public:
  Integer first(int n, int k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k < 0 || k > n ? Integer(0) : first_[n][k];
  }
  Integer second(int n, int k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k < 0 || k > n ? Integer(0) : second_[n][k];
  }

 private:
  void grow(int n) {
    if (first_.empty()) {
      first_.push_back({Integer(1)});
      second_.push_back({Integer(1)});
    }
    while (static_cast<int>(first_.size()) <= n) {
      const int m = static_cast<int>(first_.size());  // building row m from row m-1
      const auto& f = first_.back();
      const auto& s = second_.back();
      std::vector<Integer> nf(m + 1), ns(m + 1);
      for (int k = 0; k <= m; ++k) {
        const Integer fa = k >= 1 ? f[k - 1] : Integer(0);
        const Integer fb = k <= m - 1 ? f[k] : Integer(0);
        nf[k] = fa - (m - 1) * fb;  // s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k)
        const Integer sa = k >= 1 ? s[k - 1] : Integer(0);
        const Integer sb = k <= m - 1 ? s[k] : Integer(0);
        ns[k] = sa + k * sb;  // S(m,k) = S(m-1,k-1) + k S(m-1,k)
      }
      first_.push_back(std::move(nf));
      second_.push_back(std::move(ns));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> first_;
  std::vector<std::vector<Integer>> second_;
};

StirlingTables& tables() {
  static StirlingTables t;
  return t;
}

}  // namespace

Integer stirling_first(int n, int k) { return tables().first(n, k); }
Integer stirling_second(int n, int k) { return tables().second(n, k); }

std::vector<Rational> to_falling_basis(const Poly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] += c * Rational(stirling_second(n, k));
  }
  return out;
}

Poly from_falling_basis(std::span<const Rational> coeffs) {
  std::vector<Rational> out(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] == 0) continue;
    for (std::size_t k = 0; k <= n; ++k) {
      out[k] += coeffs[n] * Rational(stirling_first(static_cast<int>(n), static_cast<int>(k)));
    }
  }
  return Poly(std::move(out));
}

}  // namespace deltaorder
