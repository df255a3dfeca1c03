#include "gjts/scalar.hpp"

#include <cctype>
#include <ostream>

#include "gjts/errors.hpp"

namespace gjts {

Scalar Scalar::fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return Scalar(std::move(r));
}

bool Scalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  Scalar r = x;
  r += y;
  return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  Scalar r = x;
  r -= y;
  return r;
}

Scalar operator-(const Scalar& x) {
  return Scalar(-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  // Rational-by-rational is by far the common case in structure-constant work.
  if (x.is_rational() && y.is_rational()) return Scalar(x.c_[0] * y.c_[0]);
  if (x.is_rational()) {
    const Rational& a = x.c_[0];
    if (sgn(a) == 0) return Scalar();
    return Scalar(a * y.c_[0], a * y.c_[1], a * y.c_[2], a * y.c_[3]);
  }
  if (y.is_rational()) {
    const Rational& a = y.c_[0];
    if (sgn(a) == 0) return Scalar();
    return Scalar(a * x.c_[0], a * x.c_[1], a * x.c_[2], a * x.c_[3]);
  }
  const Rational &a1 = x.c_[0], &b1 = x.c_[1], &c1 = x.c_[2], &d1 = x.c_[3];
  const Rational &a2 = y.c_[0], &b2 = y.c_[1], &c2 = y.c_[2], &d2 = y.c_[3];
  // Basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
  Rational a = a1 * a2 + 2 * (b1 * b2) + 3 * (c1 * c2) + 6 * (d1 * d2);
  Rational b = a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2);
  Rational c = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
  Rational d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
  return Scalar(std::move(a), std::move(b), std::move(c), std::move(d));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(1 / c_[0]);
  Scalar conj_product = conj_sqrt2() * conj_sqrt3() * conj_both();
  Scalar norm = *this * conj_product;
  // The norm is the product of all four conjugates, a nonzero rational.
  const Rational& n = norm.rat();
  Rational inv_n = 1 / n;
  return Scalar(conj_product.c_[0] * inv_n, conj_product.c_[1] * inv_n,
                conj_product.c_[2] * inv_n, conj_product.c_[3] * inv_n);
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

Rational parse_rational(const std::string& text, const std::string& where) {
  if (text.empty()) throw JsonFormatError(where, "empty rational");
  size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw JsonFormatError(where, "expected \"p\" or \"p/q\", got \"" + text + "\"");
  Rational r;
  if (r.set_str(num + "/" + den, 10) != 0)
    throw JsonFormatError(where, "unparseable rational \"" + text + "\"");
  if (sgn(r.get_den()) == 0) throw JsonFormatError(where, "zero denominator in \"" + text + "\"");
  r.canonicalize();
  return r;
}

std::string Scalar::str() const {
  static const char* radicals[4] = {"", "\xE2\x88\x9A""2", "\xE2\x88\x9A""3", "\xE2\x88\x9A""6"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& r = c_[static_cast<size_t>(i)];
    if (sgn(r) == 0) continue;
    Rational abs_r = abs(r);
    std::string term;
    if (i == 0) {
      term = rational_str(abs_r);
    } else {
      if (abs_r == 1)
        term = radicals[i];
      else
        term = rational_str(abs_r) + radicals[i];
    }
    if (out.empty())
      out = (sgn(r) < 0 ? "-" : "") + term;
    else
      out += (sgn(r) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace gjts
