#include "deltaorder/parser.hpp"

#include <cctype>

#include "deltaorder/error.hpp"

namespace deltaorder {

namespace {

constexpr std::string_view kDeltaUtf8 = "\xCE\x94";
constexpr int kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GeneralForm equation() {
    GeneralForm g;
    skip_ws();
    std::size_t sign_pos = std::string_view::npos;
    int sign = 1;
    if (peek('+') || peek('-')) {
      sign_pos = pos_;
      sign = s_[pos_++] == '-' ? -1 : 1;
    }
    g.terms.push_back(term(sign, sign_pos));
    for (;;) {
      skip_ws();
      if (!peek('+') && !peek('-')) break;
      sign_pos = pos_;
      sign = s_[pos_++] == '-' ? -1 : 1;
      g.terms.push_back(term(sign, sign_pos));
    }
    skip_ws();
    if (at_end()) fail("missing '= 0'");
    if (!peek('=')) fail("expected '+', '-' or '='");
    ++pos_;
    skip_ws();
    const std::size_t rhs_pos = pos_;
    if (at_end()) fail("missing right-hand side");
    if (!starts_factor()) fail("expected 0 on the right-hand side");
    const Poly rhs = polyexpr();
    if (!rhs.is_zero()) throw ParseError("right-hand side must be 0", rhs_pos);
    finish();
    return g;
  }

  Poly polynomial() {
    skip_ws();
    Poly p = polyexpr();
    finish();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(char c) const { return !at_end() && s_[pos_] == c; }
  bool at_delta() const { return peek('D') || s_.substr(pos_).starts_with(kDeltaUtf8); }
  bool starts_factor() const {
    return !at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 'z' || s_[pos_] == '(');
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int small_integer() {
    skip_ws();
    const std::size_t start = pos_;
    const Integer v = digits();
    if (v > kMaxExponent) throw ParseError("integer too large", start);
    return static_cast<int>(v.get_si());
  }

  Poly power_of(const Poly& base) {
    skip_ws();
    if (!peek('^')) return base;
    ++pos_;
    const int e = small_integer();
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }

  Poly factor() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      skip_ws();
      Poly inner = polyexpr();
      expect(')');
      return power_of(inner);
    }
    if (peek('z')) {
      ++pos_;
      return power_of(Poly{0, 1});
    }
    if (starts_factor()) {
      Rational v(digits());
      skip_ws();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        const Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        v /= Rational(den);
      }
      return power_of(Poly::constant(v));
    }
    fail("expected a number, 'z' or '('");
  }

  Poly product() {
    Poly p = factor();
    for (;;) {
      const std::size_t save = pos_;
      skip_ws();
      if (peek('*')) {
        ++pos_;
        skip_ws();
        if (!starts_factor()) {
          pos_ = save;
          break;
        }
      } else if (!starts_factor()) {
        pos_ = save;
        break;
      }
      p *= factor();
    }
    return p;
  }

  Poly polyexpr() {
    skip_ws();
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    Poly p = product() * Rational(sign);
    for (;;) {
      skip_ws();
      if (!peek('+') && !peek('-')) break;
      sign = s_[pos_++] == '-' ? -1 : 1;
      p += product() * Rational(sign);
    }
    return p;
  }

  Term term(int sign, std::size_t sign_pos) {
    skip_ws();
    Term t;
    t.coef = Poly::constant(sign);
    bool seen = false;
    if (starts_factor()) {
      t.coef = product() * Rational(sign);
      seen = true;
      skip_ws();
      if (peek('*')) ++pos_;
      skip_ws();
    }
    if (at_delta()) {
      pos_ += peek('D') ? 1 : kDeltaUtf8.size();
      t.delta_power = 1;
      seen = true;
      skip_ws();
      if (peek('^')) {
        ++pos_;
        t.delta_power = small_integer();
      }
      skip_ws();
      if (peek('*')) ++pos_;
      skip_ws();
    }
    if (at_end() || !std::islower(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 'z') {
      if (!seen && sign_pos != std::string_view::npos) {
        throw ParseError("expected a term after '" + std::string(1, s_[sign_pos]) + "'", sign_pos);
      }
      fail("expected 'f(z)'");
    }
    if (unknown_ == 0) unknown_ = s_[pos_];
    if (s_[pos_] != unknown_) fail(std::string("unknown function must be '") + unknown_ + "' throughout");
    ++pos_;
    expect('(');
    expect('z');
    skip_ws();
    if (peek('+') || peek('-')) {
      const int s = s_[pos_++] == '-' ? -1 : 1;
      t.shift = s * small_integer();
    }
    expect(')');
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char unknown_ = 0;
};

}  // namespace

GeneralForm parse_equation(std::string_view text) { return Parser(text).equation(); }

Poly parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

}  // namespace deltaorder
