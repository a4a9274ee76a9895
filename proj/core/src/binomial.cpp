#include "exint/binomial.hpp"

namespace exint {

mpz_class factorial(long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k < 0 ? 0 : k));
  return out;
}

mpz_class binom_int(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Scalar gbinom(const Scalar& x, long k) {
  if (k < 0) return Scalar(0);
  Scalar acc(1);
  for (long j = 0; j < k; ++j) acc *= x - Scalar(j);
  return acc / Scalar(Rational(factorial(k)));
}

Scalar f_pole(long m, const Scalar& x) {
  Scalar den = x - Scalar(make_rational(m, 2));
  if (den.is_zero()) {
    throw PoleError("1/(x - " + std::to_string(m) + "/2) evaluated at its pole");
  }
  return den.inv();
}

bool is_half_integer_pole(const Scalar& x) {
  if (!x.is_real()) return false;
  if (sgn(x.re()) < 0) return false;
  Rational doubled = x.re() * 2;
  return doubled.get_den() == 1;
}

}  // namespace exint
