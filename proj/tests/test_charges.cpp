#include <doctest.h>

#include <vector>

#include "exint/charges.hpp"
#include "exint/mpa.hpp"

using namespace exint;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("normalized transfer polynomial on two sites") {
  const TransferPoly w = build_w(2);
  CHECK(w.n == 2);
  CHECK(w.degree() <= 2);

  // constant term is the identity
  CHECK(w.coefficients[0] == SpinMatrix::identity(2));

  // linear term is i sigma+ (x) sigma-: the single hopping entry |01><10|
  REQUIRE(w.degree() >= 1);
  const SpinMatrix& lin = w.coefficients[1];
  CHECK(lin.nnz() == 1);
  CHECK(lin.at(1, 2) == S("1*i"));

  const SpinMatrix w1 = w.eval(Rational(1));
  CHECK(w1.at(0, 0) == Scalar(1));
  CHECK(w1.at(1, 1) == Scalar(1));
  CHECK(w1.at(2, 2) == Scalar(1));
  CHECK(w1.at(3, 3) == Scalar(1));
  CHECK(w1.at(1, 2) == S("1*i"));
  CHECK(w1.nnz() == 5);
}

TEST_CASE("polynomial evaluation matches the scaled transfer operator") {
  const Rational eps = make_rational(3, 7);
  const Scalar lam = S("14/3*i");  // 2i / eps
  for (int n = 1; n <= 4; ++n) {
    const TransferPoly w = build_w(n);
    const Scalar scale = lam.pow(n).inv();
    CHECK(w.eval(eps) == transfer(n, lam) * scale);
  }
}

TEST_CASE("interpolation stays exact through length five") {
  for (int n = 1; n <= 5; ++n) {
    const TransferPoly w = build_w(n);
    CHECK(w.degree() <= n);
    CHECK(w.coefficients[0] == SpinMatrix::identity(n));
  }
}

TEST_CASE("leading charge on two sites") {
  const SpinMatrix z1 = charge(2, 1);
  CHECK(z1.nnz() == 1);
  CHECK(z1.at(1, 2) == S("1*i"));
  // the degree bound kills everything past k = n/2 rounded up
  CHECK(charge(2, 2).is_zero());
  CHECK(charge(3, 3).is_zero());
}

TEST_CASE("charge family identities") {
  const std::vector<Rational> eps = {make_rational(1, 2), Rational(1),
                                     make_rational(3, 5)};
  const std::vector<Scalar> lambdas = {S("3/7"), S("1/5")};
  for (int n = 1; n <= 4; ++n) {
    const CheckResult res = check_charge_identities(n, 3, eps, lambdas);
    CHECK(res.passed());
    CHECK(res.check == "charge-tower-identities");
  }
}
