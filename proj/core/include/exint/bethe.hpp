#pragma once

#include <complex>
#include <vector>

#include "exint/report.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Quasi-particle dispersion ((lambda+mu)(lambda+mu-1)) /
// ((lambda-mu)(lambda-mu+1)); SingularDispersion on a vanishing denominator.
Scalar dispersion(const Scalar& mu, const Scalar& lambda);

// The exact identity expanding the fixed-point operator's action on a
// one-excitation vector over three independent vectors, with both dispersion
// argument orders tried and the resolved order recorded in the witness.
// SingularCoefficient when mu-lambda, lambda-mu+1 or lambda+1 vanishes.
CheckResult check_uwt(int n, const Scalar& lambda, const Scalar& mu);

// Coefficients (lowest degree first) of the cleared-denominator rapidity
// polynomial, degree <= 2n+2 after trimming; DegenerateLeadingCoefficient
// if trimming leaves less than a degree-1 polynomial.
std::vector<std::complex<double>> bethe_polynomial(int n,
                                                   std::complex<double> lambda);

struct BetheRoot {
  std::complex<double> xi;
  double poly_residual;      // |P(xi)| of the cleared polynomial
  double equation_residual;  // relative defect in the original equation
};

// All companion-matrix roots that do not zero a cleared denominator.
std::vector<BetheRoot> solve_bethe(int n, std::complex<double> lambda);

struct OneParticleState {
  std::complex<double> c1, c2;
  std::vector<std::complex<double>> state;  // length 2^n
  std::complex<double> eigenvalue;
  double residual = 0;  // ||rho state - eigenvalue state|| / ||state||
};

// Solves the 2x2 cancellation system at the paired spectral arguments
// mu_{1,2}(xi) and assembles the candidate eigenvector.  KernelEmpty when xi
// is not a root at tolerance; DegeneratePair when mu_1 and mu_2 collide.
OneParticleState build_one_particle(int n, std::complex<double> lambda,
                                    std::complex<double> xi);

// Dense spectrum of the fixed-point operator restricted to the
// one-excitation sector above the all-down state (dimension n).
std::vector<std::complex<double>> brute_force_sector_spectrum(
    int n, std::complex<double> lambda);

// Root residuals, eigenvector residuals, dispersion pairing, and membership
// of every constructed eigenvalue in the brute-force sector spectrum;
// coverage of the sector is reported, not asserted.
CheckResult check_bethe_spectrum(int n, std::complex<double> lambda);

}  // namespace exint
