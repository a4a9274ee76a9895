#pragma once

#include <vector>

#include "exint/linalg.hpp"
#include "exint/report.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Sector blocks of the infinite-dimensional intertwiner, one exact
// (alpha+1)x(alpha+1) block per sector.  The defining series terminates
// because the generator is nilpotent.
struct RMatrix {
  Scalar lambda, mu;
  int alpha_max = -1;
  std::vector<Mat> blocks;

  const Mat& block(int alpha) const { return blocks.at(alpha); }
};

// PoleError when (lambda+mu)/2 lies on the half-integer pole locus.
RMatrix build_r(const Scalar& lambda, const Scalar& mu, int alpha_max);

// Exchange relation with the two-copy local operator, resolved per spin
// component and sector.
CheckResult check_rll(const Scalar& lambda, const Scalar& mu, int alpha_max);

// Exchange relation with the two-copy monodromy on a chain of n sites,
// resolved per auxiliary sector pair.
CheckResult check_rtt(int n, const Scalar& lambda, const Scalar& mu,
                      int alpha_max);

// Braid consistency on triple sectors of total occupation <= beta_max.
// A PoleError from any of the three constituent intertwiners is annotated
// with the offending argument pair.
CheckResult check_ybe(const Scalar& lambda, const Scalar& mu, const Scalar& eta,
                      int beta_max);

// Exchange symmetry, inverse pairing, involutivity, unipotent spectrum,
// weighted-transpose relation, trace, regularity.
CheckResult check_r_properties(const Scalar& lambda, const Scalar& mu,
                               int alpha_max);

// Graded commutators of the generator with the zeroth-order two-copy blocks
// produce the first-order blocks; plus the in-sector three-term recursion of
// the residue tensors.
CheckResult check_lemma1(const Scalar& x, int alpha_max);

// Second commutators annihilate the first-order blocks (with the 3:1 mixing
// on the raising component), the lowering block commutes exactly, the
// closed-form block algebra holds including the alpha=0 degenerations, and
// the first/second-order blocks act as stated on the null pair.
CheckResult check_lemma2(const Scalar& x, int alpha_max);

}  // namespace exint
