#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace gjts {

/// Exact rational number. Always canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

/// Element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of the real number field
/// Q(sqrt2, sqrt3), stored by its unique rational coordinates in the basis
/// {1, sqrt2, sqrt3, sqrt6}. Values are immutable in spirit: all operations
/// return new scalars, so they can be shared freely across threads.
class Scalar {
public:
  Scalar() : c_{} {}
  Scalar(int n) : c_{Rational(n), Rational(), Rational(), Rational()} {}
  Scalar(long n) : c_{Rational(n), Rational(), Rational(), Rational()} {}
  explicit Scalar(Rational r) : c_{std::move(r), Rational(), Rational(), Rational()} {}
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static Scalar sqrt3() { return Scalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static Scalar sqrt6() { return Scalar(Rational(0), Rational(0), Rational(0), Rational(1)); }
  static Scalar fraction(long num, long den);

  /// Coordinate in the basis {1, sqrt2, sqrt3, sqrt6}; i in [0,4).
  const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  /// Coefficient of 1 (the rational part).
  const Rational& rat() const { return c_[0]; }

  bool is_zero() const;
  /// True when the sqrt2, sqrt3 and sqrt6 coordinates all vanish.
  bool is_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);

  /// Multiplicative inverse, computed from the product of the three Galois
  /// conjugates (sign flips on sqrt2 and sqrt3) divided by the rational norm.
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Conjugates: flip the sign of sqrt2, of sqrt3, or of both.
  Scalar conj_sqrt2() const { return Scalar(c_[0], -c_[1], c_[2], -c_[3]); }
  Scalar conj_sqrt3() const { return Scalar(c_[0], c_[1], -c_[2], -c_[3]); }
  Scalar conj_both() const { return Scalar(c_[0], -c_[1], -c_[2], c_[3]); }

  /// Rendering "a + b√2 + c√3 + d√6" with zero terms elided; "0" for zero.
  std::string str() const;

private:
  std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Formats a canonical rational as "p/q", with "/q" omitted when q = 1.
std::string rational_str(const Rational& r);
/// Parses the "p/q" form; throws JsonFormatError on anything else.
Rational parse_rational(const std::string& text, const std::string& where);

}  // namespace gjts
