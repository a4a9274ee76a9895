#include <doctest.h>

#include <string>

#include "exint/errors.hpp"
#include "exint/rmat.hpp"

using namespace exint;

namespace {
const Scalar kLam = Scalar::of(3, 7);
const Scalar kMu = Scalar::of(1, 5);
}  // namespace

TEST_CASE("sector-1 block closed form") {
  const RMatrix r = build_r(kLam, kMu, 1);
  CHECK(r.block(0) == Mat::eye(1));

  // I + ((lam-mu)/(lam+mu)) [[-1,-1],[1,1]] with (lam-mu)/(lam+mu) = 4/11
  const Mat& b = r.block(1);
  CHECK(b.at(0, 0) == Scalar::of(7, 11));
  CHECK(b.at(0, 1) == Scalar::of(-4, 11));
  CHECK(b.at(1, 0) == Scalar::of(4, 11));
  CHECK(b.at(1, 1) == Scalar::of(15, 11));

  const Scalar lam2(make_rational(-5, 6));
  const Scalar mu2(make_rational(7, 3));
  const Scalar t = (lam2 - mu2) / (lam2 + mu2);
  const RMatrix r2 = build_r(lam2, mu2, 1);
  CHECK(r2.block(1).at(0, 0) == Scalar(1) - t);
  CHECK(r2.block(1).at(0, 1) == -t);
  CHECK(r2.block(1).at(1, 0) == t);
  CHECK(r2.block(1).at(1, 1) == Scalar(1) + t);
}

TEST_CASE("argument midpoints on the locus are rejected") {
  CHECK_THROWS_AS(build_r(Scalar::of(1, 2), Scalar::of(1, 2), 2), PoleError);
  CHECK_THROWS_AS(build_r(Scalar(1), Scalar(2), 2), PoleError);  // midpoint 3/2
  CHECK_NOTHROW(build_r(Scalar(-1), Scalar(-2), 2));
}

TEST_CASE("exchange relation with the two-copy local operator") {
  CHECK(check_rll(kLam, kMu, 5).passed());
  CHECK(check_rll(Scalar(make_rational(1, 3), Rational(2)),
                  Scalar(Rational(1), make_rational(1, 5)), 4)
            .passed());
}

TEST_CASE("exchange relation with the two-copy monodromy") {
  CHECK(check_rtt(2, kLam, kMu, 3).passed());
  CHECK(check_rtt(3, kLam, kMu, 2).passed());
}

TEST_CASE("triple-argument consistency on weight sectors") {
  const CheckResult r = check_ybe(kLam, kMu, Scalar::of(2, 9), 4);
  CHECK(r.passed());
  CHECK(r.label == std::string(kLabelEmpirical));

  // lambda + mu = 1 puts the (lambda, mu) midpoint on the locus; the error
  // must name the offending pair
  try {
    check_ybe(kLam, Scalar::of(4, 7), Scalar::of(2, 9), 2);
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("pair") != std::string::npos);
  }
}

TEST_CASE("intertwiner properties hold blockwise") {
  CHECK(check_r_properties(kLam, kMu, 5).passed());
  CHECK(check_r_properties(Scalar(make_rational(-1, 2), Rational(1)),
                           Scalar(make_rational(3, 4), make_rational(-2, 3)),
                           4)
            .passed());
}

TEST_CASE("weighted transposal numbers at sector 1") {
  // R(mu,lam)^T = U(mu,lam) R(lam,mu) U(lam,mu)^{-1} with
  // U(z,y) = diag(C(2z,k) C(2y,alpha-k)); entry (0,0) picks up
  // C(2lam,1)/C(2mu,1) = (6/7)/(2/5)
  const RMatrix fwd = build_r(kLam, kMu, 1);
  const RMatrix bwd = build_r(kMu, kLam, 1);
  const Scalar w = Scalar::of(6, 7) / Scalar::of(2, 5);
  CHECK(bwd.block(1).transpose().at(0, 0) == w * fwd.block(1).at(0, 0));
  CHECK(bwd.block(1).transpose().at(0, 0) == Scalar::of(15, 11));
}

TEST_CASE("expansion-block commutator ladder") {
  CHECK(check_lemma1(kLam, 5).passed());
  CHECK(check_lemma1(Scalar::of(-8, 3), 4).passed());
}

TEST_CASE("expansion-block quadratic algebra") {
  CHECK(check_lemma2(kLam, 5).passed());
  CHECK(check_lemma2(Scalar(make_rational(1, 4), Rational(1)), 4).passed());
}
