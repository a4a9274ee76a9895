#include "exint/scalar.hpp"

#include <cctype>
#include <ostream>

namespace exint {

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// One signed or unsigned "p" or "p/q" starting at pos; advances pos.
Rational scan_rational(const std::string& s, size_t& pos) {
  const size_t start = pos;
  auto fail = [&](const char* why) {
    throw ParseError("bad scalar '" + s + "' at offset " +
                     std::to_string(start) + ": " + why);
  };
  std::string num;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') num += '-';
    ++pos;
  }
  size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    num += s[pos++];
    ++digits;
  }
  if (digits == 0) fail("expected digits");
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den.clear();
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      den += s[pos++];
    }
    if (den.empty()) fail("expected digits after '/'");
  }
  Rational q;
  q.set_str(num + "/" + den, 10);
  if (q.get_den() == 0) fail("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  size_t pos = 0;
  Rational q = scan_rational(text, pos);
  if (pos != text.size()) {
    throw ParseError("trailing characters in rational '" + text + "'");
  }
  return q;
}

Scalar Scalar::parse(const std::string& text) {
  size_t pos = 0;
  Rational first = scan_rational(text, pos);
  if (pos == text.size()) return Scalar(first);

  auto expect_i = [&]() {
    if (pos + 1 >= text.size() || text[pos] != '*' || text[pos + 1] != 'i' ||
        pos + 2 != text.size()) {
      throw ParseError("bad scalar '" + text + "': expected '*i' suffix");
    }
    pos += 2;
  };

  if (text[pos] == '*') {
    expect_i();
    return Scalar(Rational(0), first);
  }
  if (text[pos] == '+' || text[pos] == '-') {
    Rational second = scan_rational(text, pos);
    expect_i();
    return Scalar(first, second);
  }
  throw ParseError("bad scalar '" + text + "': unexpected character at offset " +
                   std::to_string(pos));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero scalar");
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar acc(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string out = rational_str(re_);
  out += sgn(im_) < 0 ? '-' : '+';
  Rational mag = abs(im_);
  out += rational_str(mag);
  out += "*i";
  return out;
}

double Scalar::to_double() const { return re_.get_d(); }

std::pair<double, double> Scalar::to_complex_double() const {
  return {re_.get_d(), im_.get_d()};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace exint
