#include "exint/charges.hpp"

#include <utility>

#include "exint/binomial.hpp"
#include "exint/mpa.hpp"
#include "exint/poly.hpp"

namespace exint {

SpinMatrix TransferPoly::eval(const Rational& eps) const {
  SpinMatrix out(n);
  Scalar pw(1);
  const Scalar e{eps};
  for (const auto& coeff : coefficients) {
    out = out + coeff * pw;
    pw *= e;
  }
  return out;
}

TransferPoly build_w(int n) {
  if (n < 1) throw Error("need at least one site");

  auto sample = [n](long eps_num) {
    const Scalar lambda(Rational(0), make_rational(2, eps_num));
    return transfer(n, lambda) * lambda.pow(-n);
  };

  std::vector<std::pair<Scalar, SpinMatrix>> points;
  for (long e = 1; e <= n + 1; ++e) points.emplace_back(Scalar(e), sample(e));

  TransferPoly w;
  w.n = n;
  w.coefficients = interpolate(points, SpinMatrix(n));

  if (w.coefficients.empty() || w.coefficients[0] != SpinMatrix::identity(n)) {
    throw Error("normalized transfer polynomial has wrong constant term");
  }
  if (w.degree() > n) {
    throw Error("normalized transfer polynomial exceeds degree bound");
  }
  for (int d = 1; d <= w.degree(); ++d) {
    for (const auto& [key, value] : w.coefficients[d].entries()) {
      if (key.first >= key.second) {
        throw Error("degree-" + std::to_string(d) +
                    " coefficient is not strictly upper triangular");
      }
    }
  }
  if (w.eval(Rational(n + 2)) != sample(n + 2)) {
    throw Error("interpolated polynomial fails at the held-back sample");
  }
  return w;
}

namespace {

// coefficients of log W(eps) through eps^cap, via the terminating series
// sum_m (-1)^{m+1} N^m / m with N = W - I strictly upper triangular
std::vector<SpinMatrix> log_w_coefficients(const TransferPoly& w, int cap) {
  const int n = w.n;
  std::vector<SpinMatrix> nil(cap + 1, SpinMatrix(n));
  for (int d = 1; d <= std::min(cap, w.degree()); ++d) {
    nil[d] = w.coefficients[d];
  }
  auto truncated_mul = [cap, n](const std::vector<SpinMatrix>& a,
                                const std::vector<SpinMatrix>& b) {
    std::vector<SpinMatrix> out(cap + 1, SpinMatrix(n));
    for (int i = 0; i <= cap; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= cap; ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    return out;
  };

  std::vector<SpinMatrix> acc(cap + 1, SpinMatrix(n));
  std::vector<SpinMatrix> power = nil;
  // N^m has eps-valuation >= m, so the series ends at m = cap
  for (int m = 1; m <= cap; ++m) {
    const Scalar factor = Scalar(((m + 1) & 1) ? -1 : 1) / Scalar(m);
    bool any = false;
    for (int d = 0; d <= cap; ++d) {
      if (power[d].is_zero()) continue;
      acc[d] = acc[d] + power[d] * factor;
      any = true;
    }
    if (!any) break;
    if (m < cap) power = truncated_mul(power, nil);
  }
  return acc;
}

}  // namespace

SpinMatrix charge(int n, int k) {
  if (k < 1) throw Error("charge order must be >= 1");
  const int d = 2 * k - 1;
  const TransferPoly w = build_w(n);
  const std::vector<SpinMatrix> lw = log_w_coefficients(w, d);
  return lw[d] * Scalar(Rational(factorial(d)));
}

CheckResult check_charge_identities(int n, int k_max,
                                    const std::vector<Rational>& eps_samples,
                                    const std::vector<Scalar>& lambda_samples) {
  CheckResult res;
  res.check = "charge-tower-identities";
  Json eps_json = Json::array(), lam_json = Json::array();
  for (const auto& e : eps_samples) eps_json.push_back(rational_str(e));
  for (const auto& l : lambda_samples) lam_json.push_back(l.str());
  res.params = Json{{"n", n}, {"k_max", k_max}, {"eps_samples", eps_json},
                    {"lambda_samples", lam_json}};

  const TransferPoly w = build_w(n);

  // W(eps) W(-eps) = I as a polynomial identity: exact convolution
  const int deg = w.degree();
  for (int d = 0; d <= 2 * deg; ++d) {
    SpinMatrix conv(n);
    for (int i = std::max(0, d - deg); i <= std::min(d, deg); ++i) {
      const int j = d - i;
      SpinMatrix term = w.coefficients[i] * w.coefficients[j];
      if (j & 1) term = -term;
      conv = conv + term;
    }
    if (d == 0 ? conv != SpinMatrix::identity(n) : !conv.is_zero()) {
      res.fail("inverse_polynomial", Json{{"degree", d}});
      return res;
    }
  }
  for (const auto& eps : eps_samples) {
    if (w.eval(eps) * w.eval(-eps) != SpinMatrix::identity(n)) {
      res.fail("inverse_sample", rational_str(eps));
      return res;
    }
  }

  const std::vector<SpinMatrix> lw = log_w_coefficients(w, 2 * k_max);
  for (int d = 2; d <= 2 * k_max; d += 2) {
    if (!lw[d].is_zero()) {
      res.fail("even_log_coefficient", Json{{"degree", d}});
      return res;
    }
  }
  res.note("even_coefficient_cap", 2 * k_max);

  std::vector<SpinMatrix> charges;
  for (int k = 1; k <= k_max; ++k) {
    const int d = 2 * k - 1;
    charges.push_back(lw[d] * Scalar(Rational(factorial(d))));
  }
  for (int j = 0; j < k_max; ++j) {
    for (int k = j + 1; k < k_max; ++k) {
      if (!commutator(charges[j], charges[k]).is_zero()) {
        res.fail("charge_commutator", Json{{"j", j + 1}, {"k", k + 1}});
        return res;
      }
    }
  }
  for (const auto& lambda : lambda_samples) {
    const SpinMatrix s = transfer(n, lambda);
    for (int k = 0; k < k_max; ++k) {
      if (!commutator(charges[k], s).is_zero()) {
        res.fail("transfer_commutator",
                 Json{{"k", k + 1}, {"lambda", lambda.str()}});
        return res;
      }
    }
  }
  return res;
}

}  // namespace exint
