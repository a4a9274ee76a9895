#pragma once

#include <vector>

#include "exint/report.hpp"
#include "exint/scalar.hpp"
#include "exint/spin_matrix.hpp"

namespace exint {

// The transfer operator at the dissipative point, normalized by its constant
// diagonal so that it becomes a matrix polynomial in the dissipation
// strength: W(eps) = lambda^{-n} S(lambda) at lambda = 2i/eps.  That is the
// unique normalization making W(0) = I with W polynomial of degree <= n.
struct TransferPoly {
  int n = 0;
  std::vector<SpinMatrix> coefficients;  // coefficients[d] multiplies eps^d

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  SpinMatrix eval(const Rational& eps) const;
};

// Exact recovery by interpolation at integer sample points, with one extra
// point held back as a consistency witness.  Internal invariant breaches
// (W(0) != I, non-triangular coefficients, degree > n) throw Error.
TransferPoly build_w(int n);

// coefficient of eps^{2k-1} in log W(eps), times (2k-1)!.  Computed honestly
// for every k >= 1; vanishes beyond the degree bound.
SpinMatrix charge(int n, int k);

// (a) W(eps) W(-eps) = I as an exact polynomial identity and at each sample;
// (b) [Z_j, Z_k] = 0 up to k_max; (c) [Z_k, S(lambda)] = 0 at the sampled
// spectral points; (d) even-order log coefficients vanish up to 2*k_max.
CheckResult check_charge_identities(int n, int k_max,
                                    const std::vector<Rational>& eps_samples,
                                    const std::vector<Scalar>& lambda_samples);

}  // namespace exint
