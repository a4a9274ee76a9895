#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "exint/block_matrix.hpp"
#include "exint/linalg.hpp"
#include "exint/report.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Dense truncation (dimension D) of the three auxiliary-space generators:
//   kind '0': diag(lambda - k)
//   kind '+': |k> -> (k-1-2*lambda)|k-1>
//   kind '-': |k> -> (k+1)|k+1>
Mat build_mpa_tensor(char kind, const Scalar& lambda, long dim);

// B: |k> -> 2|k-1>; the lambda-derivative of the raising generator, negated.
Mat build_lowering_b(long dim);

// Diagonal similarity weight diag(C(2*lambda, k)); NotInvertible if any
// diagonal entry vanishes (2*lambda a small non-negative integer).
Mat build_U(const Scalar& lambda, long dim);

// 2x2 spin-component layout of the local operator, with its split into a
// constant part plus lambda times a nilpotent part.
struct LaxMatrix {
  long dim = 0;
  Scalar lambda;
  Mat block[2][2];     // [bra spin][ket spin]
  Mat constant[2][2];  // block = constant + lambda * linear
  Mat linear[2][2];
};

LaxMatrix build_lax(const Scalar& lambda, long dim);

// [raise, lower] = -2*diag, [diag, raise] = +raise, [diag, lower] = -lower,
// compared on the truncation-safe interior block.  TruncationTooSmall for
// dim < 3.
CheckResult check_sl2(const Scalar& lambda, long dim);

// Signed transposes intertwine raise <-> lower under conjugation by the
// binomial weight: (-1)^s A_s^T = U A_{-s} U^{-1} on the leading
// (dim-1)-block.
CheckResult check_AT_symmetry(const Scalar& lambda, long dim);

// --- sector-resolved two-copy blocks ---------------------------------------
// Sector alpha basis: |k, alpha-k>, k = 0..alpha.  A LadderAction maps a
// single-copy index to its images with amplitudes.

using LadderAction = std::function<std::vector<std::pair<long, Scalar>>(long)>;

LadderAction act_diag(const Scalar& x);
LadderAction act_raise(const Scalar& x);
LadderAction act_lower();
LadderAction act_b();
LadderAction act_id();

// Block of sum_i coeff_i * (first_i on copy 1) x (second_i on copy 2),
// mapping sector alpha_src into sector alpha_tgt.
Mat two_copy_block(
    long alpha_src, long alpha_tgt,
    const std::vector<std::tuple<Scalar, LadderAction, LadderAction>>& terms);

// Closed forms of the first- and second-order expansion blocks.
Mat lambda1_sum_block(int alpha);    // "00" + "11", tridiagonal
Mat lambda1_diff_block(int alpha);   // "00" - "11", off-diagonal
Mat lambda1_plus_block(int alpha);   // "01", (alpha+1) x (alpha+2)
Mat lambda1_minus_block(int alpha);  // "10", (alpha+2) x (alpha+1)
Mat lambda2_plus_block(int alpha);   // "01" second order

// All expansion blocks of the two-copy local operator around the symmetric
// point x, orders 0..2, built operator-by-operator and cross-checked against
// the closed forms above (MismatchError on any disagreement).
//
// Shapes by component: "00"/"11" are (a+1)x(a+1); "01" maps sector a+1 down
// to a (indexed by the target a); "10" maps sector a up to a+1 (indexed by
// the source a).
struct LambdaComponents {
  int alpha_max = -1;
  Scalar x;
  // key: {order 0|1|2, component "00"|"01"|"10"|"11"}
  std::map<std::pair<int, std::string>, std::vector<Mat>> blocks;

  const Mat& block(int order, const std::string& comp, int alpha) const {
    return blocks.at({order, comp}).at(alpha);
  }
};

LambdaComponents build_lambda_components(const Scalar& x, int alpha_max);

}  // namespace exint
