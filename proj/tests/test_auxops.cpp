#include <doctest.h>

#include "exint/auxops.hpp"
#include "exint/binomial.hpp"
#include "exint/errors.hpp"

using namespace exint;

namespace {
const Scalar kLam = Scalar::of(3, 7);
}

TEST_CASE("truncated generator entries") {
  const Mat a0 = build_mpa_tensor('0', kLam, 4);
  const Mat ap = build_mpa_tensor('+', kLam, 4);
  const Mat am = build_mpa_tensor('-', kLam, 4);
  for (long k = 0; k < 4; ++k) {
    CHECK(a0.at(k, k) == kLam - Scalar(k));
  }
  for (long k = 0; k + 1 < 4; ++k) {
    CHECK(ap.at(k, k + 1) == Scalar(k) - Scalar(2) * kLam);
    CHECK(am.at(k + 1, k) == Scalar(k + 1));
    CHECK(ap.at(k + 1, k).is_zero());
    CHECK(am.at(k, k + 1).is_zero());
  }

  const Mat b = build_lowering_b(4);
  for (long k = 0; k + 1 < 4; ++k) CHECK(b.at(k, k + 1) == Scalar(2));
}

TEST_CASE("binomial weight diagonal") {
  const Mat u = build_U(kLam, 3);
  CHECK(u.at(0, 0) == Scalar(1));
  CHECK(u.at(1, 1) == Scalar::of(6, 7));
  CHECK(u.at(2, 2) == Scalar::of(-3, 49));
  CHECK(u.at(0, 1).is_zero());
  // 2*lambda = 4: C(4,k) vanishes beyond k = 4
  CHECK_THROWS_AS(build_U(Scalar(2), 6), NotInvertible);
}

TEST_CASE("lax blocks split into constant plus linear part") {
  const LaxMatrix lax = build_lax(kLam, 5);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(lax.block[r][c] ==
            lax.constant[r][c] + lax.linear[r][c] * kLam);
    }
  }
  CHECK(lax.block[0][0] == build_mpa_tensor('0', kLam, 5));
  CHECK(lax.block[0][1] == build_mpa_tensor('+', kLam, 5));
  CHECK(lax.block[1][0] == build_mpa_tensor('-', kLam, 5));
  CHECK(lax.block[1][1] == build_mpa_tensor('0', kLam, 5));
}

TEST_CASE("algebra relations on the interior block") {
  CHECK(check_sl2(kLam, 8).passed());
  CHECK(check_sl2(Scalar(Rational(1), Rational(2)), 6).passed());
  CHECK_THROWS_AS(check_sl2(kLam, 2), TruncationTooSmall);
  CHECK(check_AT_symmetry(kLam, 8).passed());
  CHECK(check_AT_symmetry(Scalar::of(-5, 9), 7).passed());
}

TEST_CASE("two-copy sector blocks match the closed forms") {
  // build_lambda_components cross-checks operator-built blocks against every
  // closed form and throws MismatchError on any disagreement.
  const LambdaComponents lc = build_lambda_components(kLam, 5);

  SUBCASE("order-1 tridiagonal sum block") {
    for (int alpha = 0; alpha <= 3; ++alpha) {
      const Mat sum = lambda1_sum_block(alpha);
      for (int k = 0; k <= alpha; ++k) {
        CHECK(sum.at(k, k) == Scalar(2 * (alpha - 2 * k)));
        if (k + 1 <= alpha) {
          CHECK(sum.at(k, k + 1) == Scalar(2 * (alpha - k)));
          CHECK(sum.at(k + 1, k) == Scalar(-2 * (k + 1)));
        }
      }
    }
  }

  SUBCASE("order-2 blocks collapse") {
    for (int alpha = 0; alpha <= 4; ++alpha) {
      CHECK(lc.block(2, "00", alpha) == Mat::eye(alpha + 1));
      CHECK(lc.block(2, "11", alpha) == Mat::eye(alpha + 1));
      CHECK(lc.block(2, "10", alpha).is_zero());
    }
  }

  SUBCASE("mixed components have ladder shapes") {
    for (int alpha = 0; alpha <= 3; ++alpha) {
      CHECK(lc.block(1, "01", alpha).rows() == alpha + 1);
      CHECK(lc.block(1, "01", alpha).cols() == alpha + 2);
      CHECK(lc.block(1, "10", alpha).rows() == alpha + 2);
      CHECK(lc.block(1, "10", alpha).cols() == alpha + 1);
    }
  }
}

TEST_CASE("closed forms at a second expansion point") {
  CHECK_NOTHROW(build_lambda_components(Scalar::of(-5, 6), 4));
  CHECK_NOTHROW(build_lambda_components(Scalar(Rational(1), Rational(1)), 3));
}
