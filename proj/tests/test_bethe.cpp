#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "exint/bethe.hpp"

using namespace exint;
using Cx = std::complex<double>;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("dispersion values and singularities") {
  CHECK(dispersion(S("1"), S("3")) == Scalar(2));
  // ((lambda+mu)(lambda+mu-1)) / ((lambda-mu)(lambda-mu+1))
  CHECK(dispersion(S("19/10"), S("3")) == S("91/11"));
  CHECK_THROWS_AS(dispersion(S("3/7"), S("3/7")), SingularDispersion);
  CHECK_THROWS_AS(dispersion(S("4/3"), S("1/3")), SingularDispersion);
}

TEST_CASE("paired rapidity arguments share the dispersion value") {
  // mu1 = (1 + (2 lambda + 1) xi) / 2, mu2 = (1 + (2 lambda - 1) / xi) / 2
  const Scalar lambda = S("3");
  const Scalar xi = S("2/5");
  const Scalar mu1 = (Scalar(1) + Scalar(7) * xi) / Scalar(2);
  const Scalar mu2 = (Scalar(1) + Scalar(5) / xi) / Scalar(2);
  CHECK(mu1 == S("19/10"));
  CHECK(mu2 == S("27/4"));
  CHECK(dispersion(mu1, lambda) == dispersion(mu2, lambda));
  CHECK(dispersion(mu1, lambda) == S("91/11"));
}

TEST_CASE("action identity holds exactly") {
  SUBCASE("short chain has a two-dimensional span") {
    const CheckResult res = check_uwt(2, S("3/7"), S("1/5"));
    CHECK(res.passed());
    CHECK(res.witness.at("resolved_argument_order").get<std::string>() ==
          "(mu, lambda)");
    CHECK(res.witness.at("span_rank").get<int>() == 2);
  }
  SUBCASE("longer chains resolve a unique expansion") {
    for (int n = 3; n <= 4; ++n) {
      const CheckResult res = check_uwt(n, S("3/7"), S("1/5"));
      CHECK(res.passed());
      CHECK(res.witness.at("span_rank").get<int>() == 3);
      CHECK(res.witness.at("expansion_unique").get<bool>());
    }
  }
  SUBCASE("integer and complex parameter points") {
    CHECK(check_uwt(3, S("3"), S("1/2")).passed());
    CHECK(check_uwt(3, S("1/2+1/3*i"), S("-2/7")).passed());
  }
  SUBCASE("coefficient singularities are rejected") {
    CHECK_THROWS_AS(check_uwt(3, S("3/7"), S("3/7")), SingularCoefficient);
    CHECK_THROWS_AS(check_uwt(3, S("1/3"), S("4/3")), SingularCoefficient);
    CHECK_THROWS_AS(check_uwt(3, S("-1"), S("1/5")), SingularCoefficient);
  }
}

TEST_CASE("cleared rapidity polynomial stays within its degree bound") {
  for (int n = 1; n <= 4; ++n) {
    const auto coeffs = bethe_polynomial(n, Cx(0, 2));
    CHECK(static_cast<int>(coeffs.size()) - 1 <= 2 * n + 2);
    CHECK(coeffs.size() >= 2);
  }
}

TEST_CASE("rapidity roots at the dissipative point") {
  const Cx lambda(0, 2);
  const std::vector<BetheRoot> roots = solve_bethe(3, lambda);
  CHECK(roots.size() == 6);
  for (const auto& r : roots) {
    CHECK(r.equation_residual < 1e-10);
  }

  // the root set is closed under xi -> (2 lambda - 1) / ((2 lambda + 1) xi)
  const Cx a = 2.0 * lambda + 1.0;
  const Cx b = 2.0 * lambda - 1.0;
  for (const auto& r : roots) {
    const Cx partner = b / (a * r.xi);
    double best = 1e300;
    for (const auto& s : roots) best = std::min(best, std::abs(s.xi - partner));
    CHECK(best < 1e-8);
  }

  // frozen magnitudes of the three conjugate pairs
  std::vector<double> mags;
  for (const auto& r : roots) mags.push_back(std::abs(r.xi));
  std::sort(mags.begin(), mags.end());
  CHECK(mags[0] == doctest::Approx(std::abs(Cx(0.388434, 0.097108))).epsilon(1e-4));
  CHECK(mags[2] == doctest::Approx(std::abs(Cx(0.970143, 0.242536))).epsilon(1e-4));
  CHECK(mags[4] == doctest::Approx(std::abs(Cx(2.423003, 0.605751))).epsilon(1e-4));
}

TEST_CASE("one-excitation eigenvectors from paired rapidities") {
  const Cx lambda(0, 2);
  const std::vector<BetheRoot> roots = solve_bethe(2, lambda);
  REQUIRE(!roots.empty());
  int built = 0;
  for (const auto& r : roots) {
    try {
      const OneParticleState st = build_one_particle(2, lambda, r.xi);
      CHECK(st.residual < 1e-8);
      ++built;
    } catch (const DegeneratePair&) {
      // self-paired roots carry no independent second vector
    }
  }
  CHECK(built > 0);
}

TEST_CASE("degenerate and non-root rapidities are rejected") {
  const Cx lambda(0, 2);
  const Cx self_paired =
      std::sqrt((2.0 * lambda - 1.0) / (2.0 * lambda + 1.0));
  CHECK_THROWS_AS(build_one_particle(2, lambda, self_paired), DegeneratePair);
  CHECK_THROWS_AS(build_one_particle(2, lambda, Cx(17.0, 13.0)), KernelEmpty);
}

TEST_CASE("sector spectrum membership") {
  for (int n = 2; n <= 4; ++n) {
    const CheckResult res = check_bethe_spectrum(n, Cx(0, 2));
    CHECK(res.passed());
    CHECK(res.check == "one-particle-spectrum");
    CHECK(res.label == "EMPIRICAL");
  }
  const CheckResult res = check_bethe_spectrum(3, Cx(0, 2));
  CHECK(res.witness.at("roots").get<int>() == 6);
  CHECK(res.witness.at("sector_dimension").get<int>() == 3);
  CHECK(res.witness.at("constructed_states").get<int>() == 4);
}

TEST_CASE("sector spectrum size matches the excitation count") {
  const auto spec = brute_force_sector_spectrum(3, Cx(0, 2));
  CHECK(spec.size() == 3);
}
