#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "exint/errors.hpp"

namespace exint {

using Rational = mpq_class;

// Canonical text form "p/q": lowest terms, q > 0, denominator always written.
std::string rational_str(const Rational& q);

// Rational from integers with canonicalisation (mpq_class(3,6) alone is not
// reduced).
Rational make_rational(long num, long den);

// Parse "p/q" or a bare integer; rejects anything else.
Rational parse_rational(const std::string& text);

// Exact element of Q(i): re + im*i with GMP rational parts, always reduced.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}          // NOLINT: implicit by design
  Scalar(long v) : re_(v), im_(0) {}         // NOLINT
  Scalar(const Rational& re) : re_(re), im_(0) {}  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar of(long num, long den) { return Scalar(make_rational(num, den)); }

  // Accepts "p/q", "p", "p/q+r/s*i", "p/q-r/s*i", "r/s*i" (each part may be a
  // bare integer, optionally signed).  Throws ParseError otherwise.
  static Scalar parse(const std::string& text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const {
    return is_real() && re_.get_den() == 1;
  }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inv() const;
  Scalar pow(long k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical emission; parse(str()) == *this and re-emission is
  // byte-identical.  Real values print as "p/q", complex as "p/q+r/s*i" with
  // "-" replacing "+" for negative imaginary part.
  std::string str() const;

  // Nearest double / complex pair, for the float-side oracles only.
  double to_double() const;
  std::pair<double, double> to_complex_double() const;

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace exint
