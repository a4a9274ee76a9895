#pragma once

#include "exint/scalar.hpp"

namespace exint {

mpz_class factorial(long k);

// Integer binomial; zero outside 0 <= k <= n.
mpz_class binom_int(long n, long k);

// Generalised binomial C(x, k) = x(x-1)...(x-k+1)/k! for arbitrary exact x.
// Zero for k < 0.
Scalar gbinom(const Scalar& x, long k);

// 1/(x - m/2).  Throws PoleError exactly at the pole.
Scalar f_pole(long m, const Scalar& x);

// True iff x is a non-negative real half-integer (0, 1/2, 1, 3/2, ...):
// the pole locus shared by every generator construction.
bool is_half_integer_pole(const Scalar& x);

}  // namespace exint
