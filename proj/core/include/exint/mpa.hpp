#pragma once

#include <complex>
#include <map>
#include <vector>

#include "exint/report.hpp"
#include "exint/scalar.hpp"
#include "exint/spin_matrix.hpp"

namespace exint {

// One matrix element of the auxiliary-space monodromy between occupation
// k_out (bra side) and k_in (ket side), as a sparse chain operator.  Built by
// a pruned walk over per-site transitions; exact in the spectral parameter.
SpinMatrix monodromy_element(int n, long k_out, long k_in, const Scalar& lambda);

// Same walk over complex doubles, for the float-side spectral work.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::complex<double>>
monodromy_element_fp(int n, long k_out, long k_in, std::complex<double> lambda);

// Vacuum-sector element: the (generically non-diagonalisable) transfer
// operator of the driven chain.
SpinMatrix transfer(int n, const Scalar& lambda);

// Independent oracle: expand the monodromy element over all 3^n transition
// strings using dense truncated generators.  Exponential; n <= ~8.
SpinMatrix monodromy_brute_force(int n, long k_out, long k_in,
                                 const Scalar& lambda);

// Reflected-argument partner: (-1)^n times the transpose of the
// (k_in, k_out) element at -x.
SpinMatrix tilde_monodromy(int n, long k_out, long k_in, const Scalar& x);

// Weighted diagonal-element combination commuting with the transfer family.
// DenominatorZero when 2*lambda - k + 1 = 0 for some k in 1..n.
SpinMatrix tilde_transfer(int n, const Scalar& lambda);

// Total magnetization, diagonal in the chain basis.
SpinMatrix magnetization_op(int n);

// Conjugation by the site-reversal permutation.
SpinMatrix reflect(const SpinMatrix& m);

// [S(lambda), S(mu)] = 0, exactly.
CheckResult check_commute(int n, const Scalar& lambda, const Scalar& mu);

// Triangularity, diagonal lambda^n, entrywise selection rule, and the
// occupation-difference band bound.
CheckResult check_transfer_structure(int n, const Scalar& lambda);

// [M, T] = -2(k_out - k_in) T plus the entrywise selection rule; the witness
// records the measured factor.
CheckResult check_magnetization(int n, long k_out, long k_in,
                                const Scalar& lambda);

// [S~(lambda), S~(mu)] = 0 and [S~(lambda), S(mu)] = 0 (conjectured family;
// reported EMPIRICAL).
CheckResult check_tilde_commute(int n, const Scalar& lambda, const Scalar& mu);

// Pairwise weighted-transpose family over all element pairs up to n, plus
// the literal vacuum-element expansion of the transposed transfer operator.
// DenominatorZero when a weight denominator vanishes.
CheckResult check_transpose_relations(int n, const Scalar& lambda);

// Exact coefficients expressing high elements through the independent family
// {T^k_{k+q}}, per sample point, with a lowest-degree exact rational-function
// fit across samples when they allow one.
struct DependencyRow {
  int l = 0;
  // coefficients[sample][k]
  std::vector<std::vector<Scalar>> coefficients;
  bool lambda_independent = false;
};

struct DependencyTable {
  int n = 0, q = 0;
  std::vector<Scalar> lambdas;
  std::vector<DependencyRow> rows;
  CheckResult report;
};

DependencyTable discover_dependencies(int n, int q,
                                      const std::vector<Scalar>& lambdas,
                                      int l_max);

// Vacuum-sector shift relations: closed forms at m = 0; exact stacked solves
// for the m-excitation expansion coefficients r, s and the reflected
// connection coefficients f, g, with the reflected cross-relations verified
// through the same solutions at -lambda.
CheckResult check_shift_relations(int n, int m, int q, int l,
                                  const Scalar& lambda);

}  // namespace exint
