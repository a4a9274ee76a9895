#pragma once

#include <complex>
#include <vector>

#include "exint/report.hpp"
#include "exint/scalar.hpp"
#include "exint/spin_matrix.hpp"

namespace exint {

// Boundary-driven chain at dissipation strength epsilon; the matching
// spectral point is lambda = 2i/epsilon, exactly representable for rational
// epsilon.
struct LindbladProblem {
  int n = 0;
  Rational epsilon;
  Scalar lambda;
};

// Validates epsilon != 0 and n >= 1.
LindbladProblem make_problem(int n, const Rational& epsilon);

// Nearest-neighbour bulk Hamiltonian, 2(s+ s-) + 2(s- s+) + (sz sz) summed
// over adjacent pairs; the n = 1 sum is empty.
SpinMatrix bulk_hamiltonian(int n);

// The two boundary jump operators: raise at site 1, lower at site n.
SpinMatrix jump_raise_first(int n);
SpinMatrix jump_lower_last(int n);

struct NessResult {
  SpinMatrix rho;  // unnormalized, Hermitian positive semidefinite
  Scalar trace;    // rational; division deferred to the caller
};

// rho = S(lambda) S(-lambda)^T over Gaussian rationals.
NessResult build_ness(const LindbladProblem& problem);

// i [H, rho] - epsilon D(rho), exactly; zero iff rho is stationary.
SpinMatrix lindblad_residual(const LindbladProblem& problem,
                             const SpinMatrix& rho);

// Dense floating-point fixed point of the vectorized evolution operator,
// trace-normalized, row-major 2^n x 2^n.  NullSpaceDimensionError unless the
// numerical null space is one-dimensional.
std::vector<std::complex<double>> brute_force_ness(
    const LindbladProblem& problem);

// Bit-exact stationarity plus the positivity-flavoured structure of rho:
// Hermitian, real nonnegative diagonal, positive trace.
CheckResult check_stationarity(int n, const Rational& epsilon);

// S(lambda)^dagger == S(-lambda)^T at the purely imaginary spectral point.
CheckResult check_adjoint_convention(int n, const Rational& epsilon);

// Exact normalized rho against the floating-point null-space oracle.
CheckResult check_ness_oracle(int n, const Rational& epsilon);

}  // namespace exint
