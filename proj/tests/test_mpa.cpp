#include <doctest.h>

#include <complex>
#include <vector>

#include "exint/mpa.hpp"

using namespace exint;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("single-site monodromy elements in closed form") {
  const Scalar lam = S("3/7");

  const SpinMatrix t00 = monodromy_element(1, 0, 0, lam);
  CHECK(t00.nnz() == 2);
  CHECK(t00.at(0, 0) == lam);
  CHECK(t00.at(1, 1) == lam);

  const SpinMatrix t01 = monodromy_element(1, 0, 1, lam);
  CHECK(t01.nnz() == 1);
  CHECK(t01.at(0, 1) == S("-6/7"));

  const SpinMatrix t10 = monodromy_element(1, 1, 0, lam);
  CHECK(t10.nnz() == 1);
  CHECK(t10.at(1, 0) == Scalar(1));

  const SpinMatrix t11 = monodromy_element(1, 1, 1, lam);
  CHECK(t11.at(0, 0) == S("-4/7"));
  CHECK(t11.at(1, 1) == S("-4/7"));
}

TEST_CASE("walk agrees with the 3^n transition-string expansion") {
  const std::vector<Scalar> lambdas = {S("3/7"), S("1+2*i")};
  for (const auto& lam : lambdas) {
    for (int n = 1; n <= 3; ++n) {
      for (long k_out = 0; k_out <= n; ++k_out) {
        for (long k_in = 0; k_in <= n; ++k_in) {
          CHECK(monodromy_element(n, k_out, k_in, lam) ==
                monodromy_brute_force(n, k_out, k_in, lam));
        }
      }
    }
  }
}

TEST_CASE("elements with occupation gap beyond the length vanish") {
  CHECK(monodromy_element(2, 3, 0, S("3/7")).is_zero());
  CHECK(monodromy_element(1, 2, 0, S("1/5")).is_zero());
}

TEST_CASE("float walk matches the exact walk") {
  const Scalar lam = S("3/7+1/2*i");
  const auto [lre, lim] = lam.to_complex_double();
  const std::complex<double> lamf(lre, lim);
  for (long k_out = 0; k_out <= 2; ++k_out) {
    for (long k_in = 0; k_in <= 2; ++k_in) {
      const SpinMatrix exact = monodromy_element(2, k_out, k_in, lam);
      const auto fp = monodromy_element_fp(2, k_out, k_in, lamf);
      CHECK(fp.size() == exact.nnz());
      for (const auto& [key, value] : exact.entries()) {
        const auto it = fp.find(key);
        REQUIRE(it != fp.end());
        const auto [re, im] = value.to_complex_double();
        CHECK(std::abs(it->second - std::complex<double>(re, im)) < 1e-12);
      }
    }
  }
}

TEST_CASE("two-site transfer operator") {
  const SpinMatrix s = transfer(2, S("3/7"));
  CHECK(s.nnz() == 5);
  for (std::uint32_t d = 0; d < 4; ++d) CHECK(s.at(d, d) == S("9/49"));
  CHECK(s.at(1, 2) == S("-6/7"));
}

TEST_CASE("transfer structure holds across lengths") {
  for (int n = 1; n <= 5; ++n) {
    const CheckResult res = check_transfer_structure(n, S("3/7"));
    CHECK(res.passed());
    CHECK(res.check == "transfer-structure");
  }
  CHECK(check_transfer_structure(3, S("1+2*i")).passed());
}

TEST_CASE("transfer family commutes") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_commute(n, S("3/7"), S("1/5")).passed());
  }
  CHECK(check_commute(3, S("1/2+1/3*i"), S("-2/5")).passed());
}

TEST_CASE("magnetization grading") {
  const SpinMatrix m = magnetization_op(2);
  CHECK(m.at(0, 0) == Scalar(2));
  CHECK(m.at(1, 1) == Scalar(0));
  CHECK(m.at(2, 2) == Scalar(0));
  CHECK(m.at(3, 3) == Scalar(-2));

  for (long k_out = 0; k_out <= 3; ++k_out) {
    for (long k_in = 0; k_in <= 3; ++k_in) {
      const CheckResult res = check_magnetization(3, k_out, k_in, S("3/7"));
      CHECK(res.passed());
      CHECK(res.witness.at("measured_factor").get<long>() ==
            -2 * (k_out - k_in));
    }
  }
}

TEST_CASE("reflected-argument partner matches its definition") {
  const Scalar x = S("2/3");
  for (long k_out = 0; k_out <= 2; ++k_out) {
    for (long k_in = 0; k_in <= 2; ++k_in) {
      const SpinMatrix direct =
          monodromy_element(2, k_in, k_out, -x).transpose();
      CHECK(tilde_monodromy(2, k_out, k_in, x) == direct);
      const SpinMatrix odd =
          -monodromy_element(3, k_in, k_out, -x).transpose();
      CHECK(tilde_monodromy(3, k_out, k_in, x) == odd);
    }
  }
}

TEST_CASE("weighted diagonal combination commutes with the transfer family") {
  const CheckResult res = check_tilde_commute(2, S("3/7"), S("1/5"));
  CHECK(res.passed());
  CHECK(res.label == "EMPIRICAL");
  CHECK(check_tilde_commute(3, S("2/3"), S("-3/4")).passed());
}

TEST_CASE("weighted combination rejects vanishing denominators") {
  CHECK_THROWS_AS(tilde_transfer(2, S("1/2")), DenominatorZero);
  CHECK_NOTHROW(tilde_transfer(2, S("3/7")));
}

TEST_CASE("site reversal conjugation") {
  SpinMatrix m(2);
  m.set(1, 2, S("5"));  // |01><10| -> |10><01| under bit reversal
  const SpinMatrix r = reflect(m);
  CHECK(r.nnz() == 1);
  CHECK(r.at(2, 1) == S("5"));
}

TEST_CASE("transpose relations across the element family") {
  CHECK(check_transpose_relations(2, S("3/7")).passed());
  CHECK(check_transpose_relations(3, S("3/7")).passed());
  CHECK(check_transpose_relations(2, S("1/3+1/4*i")).passed());
}

TEST_CASE("transpose relations reject weight and expansion poles") {
  // C(2*lambda, 2) vanishes at lambda = 1/2
  CHECK_THROWS_AS(check_transpose_relations(2, S("1/2")), DenominatorZero);
  // 2*lambda - 2 vanishes at lambda = 1
  CHECK_THROWS_AS(check_transpose_relations(2, S("1")), DenominatorZero);
}

TEST_CASE("dependency table over the independent family") {
  const std::vector<Scalar> lambdas = {S("3/7"), S("1/5")};

  SUBCASE("diagonal family coefficients are lambda independent") {
    const DependencyTable t = discover_dependencies(2, 0, lambdas, 3);
    REQUIRE(t.rows.size() == 1);
    const DependencyRow& row = t.rows[0];
    CHECK(row.l == 3);
    CHECK(row.lambda_independent);
    const std::vector<Scalar> expect = {S("1"), S("-3"), S("3")};
    CHECK(row.coefficients[0] == expect);
    CHECK(row.coefficients[1] == expect);
  }

  SUBCASE("raising families pick up lambda dependence") {
    const DependencyTable t = discover_dependencies(2, 1, lambdas, 2);
    REQUIRE(t.rows.size() == 1);
    const DependencyRow& row = t.rows[0];
    CHECK(row.l == 2);
    CHECK_FALSE(row.lambda_independent);
    CHECK(row.coefficients[0] == std::vector<Scalar>{S("4/3"), S("16")});
    CHECK(row.coefficients[1] == std::vector<Scalar>{S("4"), S("16/3")});
    // lambda-dependent rows carry an exact rational fit in the witness
    const Json& rows = t.report.witness.at("rows");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].contains("rational_fits"));
  }

  SUBCASE("single-element family at maximal step") {
    const DependencyTable t = discover_dependencies(2, 2, lambdas, 1);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].coefficients[0] == std::vector<Scalar>{S("-4/3")});
    CHECK(t.rows[0].coefficients[1] == std::vector<Scalar>{S("-4")});
  }

  SUBCASE("three-site lowering chain") {
    const DependencyTable t = discover_dependencies(3, 1, {S("3/7")}, 3);
    REQUIRE(t.rows.size() == 1);
    const std::vector<Scalar> expect = {S("-5/2"), S("-45"), S("45/8")};
    CHECK(t.rows[0].coefficients[0] == expect);
    CHECK(t.report.witness.at("basis_rank").get<int>() == 3);
  }
}

TEST_CASE("vacuum shift relations in closed form") {
  const CheckResult a = check_shift_relations(3, 0, 1, 1, S("3/7"));
  CHECK(a.passed());
  CHECK(a.witness.at("down_coefficient").get<std::string>() == "1/8");
  CHECK(a.witness.at("up_coefficient").get<std::string>() == "2/1");

  const CheckResult b = check_shift_relations(3, 0, 1, 2, S("3/7"));
  CHECK(b.passed());
  CHECK(b.witness.at("down_coefficient").get<std::string>() == "4/11");

  const CheckResult c = check_shift_relations(2, 0, 2, 1, S("3/7"));
  CHECK(c.passed());
  CHECK(c.witness.at("up_coefficient").get<std::string>() == "3/1");

  // C(2*lambda - 2l, q) vanishes at lambda = 1, l = 1, q = 1
  CHECK_THROWS_AS(check_shift_relations(2, 0, 1, 1, S("1")), DenominatorZero);
}

TEST_CASE("excited shift relations solve to shared coefficients") {
  const CheckResult res = check_shift_relations(3, 1, 1, 2, S("3/7"));
  CHECK(res.passed());
  CHECK(res.label == "EMPIRICAL");
  const auto strs = [&](const char* key) {
    std::vector<std::string> out;
    for (const auto& s : res.witness.at(key)) out.push_back(s.get<std::string>());
    return out;
  };
  CHECK(strs("r") == std::vector<std::string>{"3/11", "2/15"});
  CHECK(strs("s") == std::vector<std::string>{"9/4", "3/8"});
  CHECK(strs("f") == std::vector<std::string>{"-88/35", "24/35"});
  CHECK(strs("g") == std::vector<std::string>{"595/496", "-1134/1705"});
  CHECK(strs("f_neg") == std::vector<std::string>{"-1700/217", "540/217"});
  CHECK(strs("g_neg") == std::vector<std::string>{"77/60", "-126/215"});
}

TEST_CASE("chain operators reject mismatched lengths and bad indices") {
  CHECK_THROWS_AS(monodromy_element(0, 0, 0, S("3/7")), Error);
  CHECK_THROWS_AS(monodromy_element(2, -1, 0, S("3/7")), Error);
  CHECK_THROWS_AS(transfer(2, S("1/5")) + transfer(3, S("1/5")),
                  DimensionMismatch);
}
