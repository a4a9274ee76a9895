#pragma once

#include <vector>

#include "exint/linalg.hpp"
#include "exint/report.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Four independent constructions of the same (alpha+1)x(alpha+1) nilpotent
// generator.  All public builders taking an x reject the shared pole locus
// x in {0, 1/2, 1, 3/2, ...} with PoleError, except h_jordan which raises
// SingularW exactly when its triangular weight degenerates.

// Double-sum form with parity completion.
Mat h_first(int alpha, const Scalar& x);

// Single-ratio form (falling-factorial denominator) with parity completion.
Mat h_compact(int alpha, const Scalar& x);

// Residue tensors: Y is the raw tensor, X its odd part under the
// double-reversal symmetry.
Mat y_tensor(int alpha, int p);
Mat x_tensor(int alpha, int p);

struct ResidueFamily {
  int alpha = -1;
  std::vector<Mat> x_tensors;  // p = 0..alpha
};

ResidueFamily h_residue(int alpha);

// sum_p X^p / (x - p/2); PoleError on the pole locus.
Mat reconstruct(const ResidueFamily& family, const Scalar& x);

// Triangular similarity putting the generator into its single nilpotent
// Jordan string: H = W * Delta * W^{-1}.
struct JordanFactors {
  int alpha = -1;
  Scalar x;
  Mat w;      // upper triangular weights
  Mat delta;  // strictly lower 2^{l-k}/(k-l) ladder
};

JordanFactors h_jordan(int alpha, const Scalar& x);  // throws SingularW
Mat reconstruct(const JordanFactors& factors);

// Alternating kernel vector v and its generalized partner u.
struct NullPair {
  std::vector<Scalar> v;  // (-1)^k
  std::vector<Scalar> u;  // (-1)^k * k
};

NullPair null_pair(int alpha);

// H v = 0, H^2 u = 0, and H u = (c/x) v with measured constant c = alpha/2;
// the witness records the measured c.
CheckResult check_null(int alpha, const Scalar& x);

// Residue-tensor action on the null pair: Y^p v = -v, reversed Y^p v = -v;
// Y^0 u = 0, reversed Y^0 u = -alpha v, X^0 u = (alpha/2) v; for p >= 1
// Y^p u = reversed Y^p u = -u.
CheckResult check_residue_vectors(int alpha);

// X^p X^m = 0 for p >= m, and H^(alpha+1) = 0.
CheckResult check_nilpotency(int alpha, const Scalar& x);

// Mixed-size recursion tying X tensors at alpha and alpha+1.
CheckResult check_x_recursion(int alpha);

// Three-term in-sector recursion for the X tensors.
CheckResult check_x_three_term(int alpha);

// The four constructions of the generator agree entrywise: double sum,
// compact ratio, residue reconstruction, Jordan similarity.
CheckResult check_h_forms(int alpha, const Scalar& x);

}  // namespace exint
