#include <doctest.h>

#include <complex>
#include <vector>

#include "exint/mpa.hpp"
#include "exint/ness.hpp"

using namespace exint;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(make_problem(0, make_rational(1, 2)), Error);
  CHECK_THROWS_AS(make_problem(2, Rational(0)), Error);
  const LindbladProblem p = make_problem(3, make_rational(1, 2));
  CHECK(p.n == 3);
  CHECK(p.lambda == S("4*i"));  // 2i / (1/2)
}

TEST_CASE("bulk Hamiltonian on two sites") {
  const SpinMatrix h = bulk_hamiltonian(2);
  CHECK(h.at(0, 0) == Scalar(1));
  CHECK(h.at(1, 1) == Scalar(-1));
  CHECK(h.at(2, 2) == Scalar(-1));
  CHECK(h.at(3, 3) == Scalar(1));
  CHECK(h.at(1, 2) == Scalar(2));
  CHECK(h.at(2, 1) == Scalar(2));
  CHECK(h.nnz() == 6);
  CHECK(bulk_hamiltonian(1).is_zero());
}

TEST_CASE("boundary jump operators") {
  const SpinMatrix up = jump_raise_first(2);
  CHECK(up.nnz() == 2);
  // raising at site 1 clears the most significant bit
  CHECK(up.at(0, 2) == Scalar(1));
  CHECK(up.at(1, 3) == Scalar(1));
  const SpinMatrix down = jump_lower_last(2);
  CHECK(down.nnz() == 2);
  CHECK(down.at(1, 0) == Scalar(1));
  CHECK(down.at(3, 2) == Scalar(1));
}

TEST_CASE("single-site steady state is a scalar matrix") {
  const LindbladProblem p = make_problem(1, make_rational(1, 2));
  const NessResult res = build_ness(p);
  // (4 / epsilon^2) * identity = 16 * identity
  CHECK(res.rho.at(0, 0) == Scalar(16));
  CHECK(res.rho.at(1, 1) == Scalar(16));
  CHECK(res.rho.nnz() == 2);
  CHECK(res.trace == Scalar(32));
}

TEST_CASE("two-site steady state at epsilon = 1/2") {
  const NessResult res = build_ness(make_problem(2, make_rational(1, 2)));
  CHECK(res.trace == Scalar(1088));
  CHECK(res.rho.at(0, 0) == Scalar(256));
  CHECK(res.rho.at(1, 1) == Scalar(320));
  CHECK(res.rho.at(2, 2) == Scalar(256));
  CHECK(res.rho.at(3, 3) == Scalar(256));
  CHECK(res.rho.at(1, 2) == S("128*i"));
  CHECK(res.rho.at(2, 1) == S("-128*i"));
  CHECK(res.rho == res.rho.conj_transpose());
}

TEST_CASE("the built state is stationary, a perturbed one is not") {
  const LindbladProblem p = make_problem(3, make_rational(3, 5));
  const NessResult res = build_ness(p);
  CHECK(lindblad_residual(p, res.rho).is_zero());

  SpinMatrix bumped = res.rho;
  bumped.add(0, 0, Scalar(1));
  CHECK_FALSE(lindblad_residual(p, bumped).is_zero());
}

TEST_CASE("stationarity holds across lengths and couplings") {
  const std::vector<Rational> eps = {make_rational(1, 2), Rational(1),
                                     make_rational(3, 5)};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& e : eps) {
      const CheckResult res = check_stationarity(n, e);
      CHECK(res.passed());
      CHECK(res.check == "fixed-point-residual");
      CHECK(res.label == "PROVEN-IN-PAPER");
    }
  }
}

TEST_CASE("conjugate transpose equals the reflected-argument transpose") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(check_adjoint_convention(n, make_rational(1, 2)).passed());
  }
  // direct form: at lambda = 2i/epsilon the dagger flips the sign
  const Scalar lam = S("4*i");
  CHECK(transfer(2, lam).conj_transpose() == transfer(2, -lam).transpose());
}

TEST_CASE("float null-space oracle agrees with the exact state") {
  for (int n = 1; n <= 3; ++n) {
    const CheckResult res = check_ness_oracle(n, make_rational(1, 2));
    CHECK(res.passed());
    CHECK(res.label == "EMPIRICAL");
  }
}

TEST_CASE("brute-force fixed point is trace normalized") {
  const LindbladProblem p = make_problem(2, Rational(1));
  const std::vector<std::complex<double>> rho = brute_force_ness(p);
  REQUIRE(rho.size() == 16);
  std::complex<double> tr = 0;
  for (int d = 0; d < 4; ++d) tr += rho[d * 4 + d];
  CHECK(std::abs(tr - 1.0) < 1e-12);
  // Hermitian within numerical error
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(std::abs(rho[r * 4 + c] - std::conj(rho[c * 4 + r])) < 1e-10);
    }
  }
}
