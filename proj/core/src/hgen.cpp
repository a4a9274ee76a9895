#include "exint/hgen.hpp"

#include "exint/binomial.hpp"

namespace exint {

namespace {

Scalar sign_pow(long e) { return Scalar((e & 1L) ? -1 : 1); }

Rational pow2(long e) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q = e >= 0 ? Rational(big) : Rational(1, big);
  q.canonicalize();
  return q;
}

void reject_pole(const Scalar& x, const char* who) {
  if (is_half_integer_pole(x)) {
    throw PoleError(std::string(who) +
                    " evaluated on the half-integer pole locus, x = " + x.str());
  }
}

}  // namespace

Mat h_first(int alpha, const Scalar& x) {
  reject_pole(x, "h_first");
  Mat h(alpha + 1, alpha + 1);
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      if (k < l + 1) continue;
      Scalar s(0);
      for (int m = l; m < k; ++m) {
        s += sign_pow(m) * Scalar(Rational(binom_int(k - l - 1, m - l))) *
             f_pole(m, x);
      }
      h.at(k, l) = sign_pow(k - 1) * Scalar(make_rational(1, 2)) *
                   Scalar(Rational(binom_int(k, l))) * s;
    }
  }
  for (int k = 0; k <= alpha; ++k) {
    if (2 * k > alpha) continue;
    Scalar s(0);
    for (int m = k; m < alpha - k; ++m) s += f_pole(m, x);
    h.at(k, k) = Scalar(make_rational(-1, 2)) * s;
  }
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      if (k < l || (k == l && 2 * k > alpha)) {
        h.at(k, l) = -h.at(alpha - k, alpha - l);
      }
    }
  }
  return h;
}

Mat h_compact(int alpha, const Scalar& x) {
  reject_pole(x, "h_compact");
  Mat h(alpha + 1, alpha + 1);
  const Scalar two_x = Scalar(2) * x;
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      if (k < l + 1) continue;
      const Scalar den = gbinom(Scalar(k - 1) - two_x, k - l);
      h.at(k, l) = sign_pow(k - l) * Scalar(make_rational(1, k - l)) *
                   Scalar(Rational(binom_int(k, l))) / den;
    }
  }
  for (int k = 0; k <= alpha; ++k) {
    if (2 * k > alpha) continue;
    const int m = alpha - 2 * k;
    const Scalar z = Scalar(alpha - k - 1) - two_x;
    Scalar s(0);
    for (int j = 0; j < m; ++j) s += (z - Scalar(j)).inv();
    h.at(k, k) = s;
  }
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      if (k < l || (k == l && 2 * k > alpha)) {
        h.at(k, l) = -h.at(alpha - k, alpha - l);
      }
    }
  }
  return h;
}

Mat y_tensor(int alpha, int p) {
  Mat y(alpha + 1, alpha + 1);
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      if (p - l < 0) continue;
      // Extended binomials: C(k-l-1, p-l) keeps the falling-factorial
      // convention for negative upper argument.
      y.at(k, l) = sign_pow(k - p - 1) * gbinom(Scalar(k), l) *
                   gbinom(Scalar(k - l - 1), p - l);
    }
  }
  return y;
}

Mat x_tensor(int alpha, int p) {
  const Mat y = y_tensor(alpha, p);
  Mat x(alpha + 1, alpha + 1);
  const Scalar half = Scalar(make_rational(1, 2));
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l <= alpha; ++l) {
      x.at(k, l) = (y.at(k, l) - y.at(alpha - k, alpha - l)) * half;
    }
  }
  return x;
}

ResidueFamily h_residue(int alpha) {
  ResidueFamily fam;
  fam.alpha = alpha;
  for (int p = 0; p <= alpha; ++p) fam.x_tensors.push_back(x_tensor(alpha, p));
  return fam;
}

Mat reconstruct(const ResidueFamily& family, const Scalar& x) {
  reject_pole(x, "residue reconstruction");
  Mat h(family.alpha + 1, family.alpha + 1);
  for (int p = 0; p <= family.alpha; ++p) {
    h = h + family.x_tensors[p] * f_pole(p, x);
  }
  return h;
}

JordanFactors h_jordan(int alpha, const Scalar& x) {
  JordanFactors out;
  out.alpha = alpha;
  out.x = x;
  const Scalar two_x = Scalar(2) * x;
  for (int l = 0; l <= alpha; ++l) {
    if (gbinom(two_x, alpha - l).is_zero()) {
      throw SingularW("triangular weight C(2x," + std::to_string(alpha - l) +
                      ") vanishes at x = " + x.str());
    }
  }
  Mat w(alpha + 1, alpha + 1);
  for (int k = 0; k <= alpha; ++k) {
    for (int l = k; l <= alpha; ++l) {
      w.at(k, l) = sign_pow(k + l) * Scalar(pow2(l - alpha)) *
                   Scalar(Rational(binom_int(alpha - k, alpha - l))) /
                   Scalar(Rational(binom_int(alpha, l))) * gbinom(two_x, alpha - l);
    }
  }
  Mat delta(alpha + 1, alpha + 1);
  for (int k = 0; k <= alpha; ++k) {
    for (int l = 0; l < k; ++l) {
      delta.at(k, l) = Scalar(pow2(l - k)) * Scalar(make_rational(1, k - l));
    }
  }
  out.w = w;
  out.delta = delta;
  return out;
}

Mat reconstruct(const JordanFactors& factors) {
  return factors.w * factors.delta * factors.w.inverse();
}

NullPair null_pair(int alpha) {
  NullPair np;
  for (int k = 0; k <= alpha; ++k) {
    np.v.push_back(sign_pow(k));
    np.u.push_back(sign_pow(k) * Scalar(k));
  }
  return np;
}

CheckResult check_null(int alpha, const Scalar& x) {
  CheckResult res;
  res.check = "generator-null-pair";
  res.params = Json{{"alpha", alpha}, {"x", x.str()}};

  const Mat h = h_first(alpha, x);
  const NullPair np = null_pair(alpha);
  const std::vector<Scalar> hv = h.apply(np.v);
  const std::vector<Scalar> hu = h.apply(np.u);
  const std::vector<Scalar> h2u = h.apply(hu);

  for (const Scalar& t : hv) {
    if (!t.is_zero()) {
      res.fail("kernel", "H v != 0");
      return res;
    }
  }
  for (const Scalar& t : h2u) {
    if (!t.is_zero()) {
      res.fail("generalized", "H^2 u != 0");
      return res;
    }
  }
  // H u = (c/x) v for a constant c; measure c and confront alpha/2.
  const Scalar c = hu[0] / np.v[0] * x;
  for (int i = 0; i <= alpha; ++i) {
    if (!(hu[i] - (c / x) * np.v[i]).is_zero()) {
      res.fail("proportionality", "H u not proportional to v");
      return res;
    }
  }
  res.note("measured_c", c.str());
  if (!(c == Scalar(make_rational(alpha, 2)))) {
    res.fail("constant", "measured c != alpha/2");
  }
  return res;
}

CheckResult check_residue_vectors(int alpha) {
  CheckResult res;
  res.check = "residue-tensor-vectors";
  res.params = Json{{"alpha", alpha}};

  const NullPair np = null_pair(alpha);
  auto reversed = [&](const Mat& m) {
    Mat r(alpha + 1, alpha + 1);
    for (int k = 0; k <= alpha; ++k) {
      for (int l = 0; l <= alpha; ++l) r.at(k, l) = m.at(alpha - k, alpha - l);
    }
    return r;
  };
  auto is_vec = [&](const std::vector<Scalar>& got,
                    const std::vector<Scalar>& want) {
    for (size_t i = 0; i < got.size(); ++i) {
      if (!(got[i] == want[i])) return false;
    }
    return true;
  };
  auto scaled = [&](const std::vector<Scalar>& v, const Scalar& c) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(t * c);
    return out;
  };

  for (int p = 0; p <= alpha; ++p) {
    const Mat y = y_tensor(alpha, p);
    const Mat yr = reversed(y);
    if (!is_vec(y.apply(np.v), scaled(np.v, Scalar(-1)))) {
      res.fail("y_v", Json{{"p", p}});
      return res;
    }
    if (!is_vec(yr.apply(np.v), scaled(np.v, Scalar(-1)))) {
      res.fail("reversed_y_v", Json{{"p", p}});
      return res;
    }
    if (p == 0) {
      if (!is_vec(y.apply(np.u), scaled(np.v, Scalar(0)))) {
        res.fail("y0_u", "Y^0 u != 0");
        return res;
      }
      if (!is_vec(yr.apply(np.u), scaled(np.v, Scalar(-alpha)))) {
        res.fail("reversed_y0_u", "reversed Y^0 u != -alpha v");
        return res;
      }
      if (!is_vec(x_tensor(alpha, 0).apply(np.u),
                  scaled(np.v, Scalar(make_rational(alpha, 2))))) {
        res.fail("x0_u", "X^0 u != (alpha/2) v");
        return res;
      }
    } else {
      if (!is_vec(y.apply(np.u), scaled(np.u, Scalar(-1)))) {
        res.fail("yp_u", Json{{"p", p}});
        return res;
      }
      if (!is_vec(yr.apply(np.u), scaled(np.u, Scalar(-1)))) {
        res.fail("reversed_yp_u", Json{{"p", p}});
        return res;
      }
    }
  }
  return res;
}

CheckResult check_nilpotency(int alpha, const Scalar& x) {
  CheckResult res;
  res.check = "generator-nilpotency";
  res.params = Json{{"alpha", alpha}, {"x", x.str()}};

  const Mat h = h_first(alpha, x);
  if (!mat_pow(h, alpha + 1).is_zero()) {
    res.fail("order", "H^(alpha+1) != 0");
    return res;
  }
  const ResidueFamily fam = h_residue(alpha);
  for (int p = 0; p <= alpha; ++p) {
    for (int m = 0; m <= p; ++m) {
      if (!(fam.x_tensors[p] * fam.x_tensors[m]).is_zero()) {
        res.fail("residue_product", Json{{"p", p}, {"m", m}});
        return res;
      }
    }
  }
  return res;
}

CheckResult check_x_recursion(int alpha) {
  CheckResult res;
  res.check = "residue-tensor-recursion";
  res.params = Json{{"alpha", alpha}};

  for (int p = 0; p <= alpha + 1; ++p) {
    const Mat x1 = x_tensor(alpha + 1, p);
    const Mat x0 = p <= alpha ? x_tensor(alpha, p) : Mat(alpha + 1, alpha + 1);
    auto get = [](const Mat& m, int i, int j, int dim) {
      return (i >= 0 && i < dim && j >= 0 && j < dim) ? m.at(i, j) : Scalar(0);
    };
    for (int k = 0; k <= alpha + 1; ++k) {
      for (int l = 0; l <= alpha; ++l) {
        const Scalar t = Scalar(l + 1) * get(x1, k, l + 1, alpha + 2) -
                         Scalar(k) * get(x0, k - 1, l, alpha + 1) -
                         Scalar(alpha - l + 1) * get(x1, k, l, alpha + 2) +
                         Scalar(alpha - k + 1) * get(x0, k, l, alpha + 1);
        if (!t.is_zero()) {
          res.fail("recursion", Json{{"p", p}, {"k", k}, {"l", l}});
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_x_three_term(int alpha) {
  CheckResult res;
  res.check = "residue-tensor-three-term";
  res.params = Json{{"alpha", alpha}};

  for (int p = 0; p <= alpha; ++p) {
    const Mat x = x_tensor(alpha, p);
    auto get = [&](int i, int j) {
      return (i >= 0 && i <= alpha && j >= 0 && j <= alpha) ? x.at(i, j)
                                                            : Scalar(0);
    };
    for (int k = 0; k <= alpha; ++k) {
      for (int l = 0; l <= alpha; ++l) {
        const Scalar t = Scalar((k - l) * (k + l - alpha)) * get(k, l) +
                         Scalar((alpha - l + 1) * (l - 1 - p)) * get(k, l - 1) +
                         Scalar((k - alpha) * (k - p)) * get(k + 1, l);
        if (!t.is_zero()) {
          res.fail("three_term", Json{{"p", p}, {"k", k}, {"l", l}});
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_h_forms(int alpha, const Scalar& x) {
  CheckResult res;
  res.check = "generator-forms-agreement";
  res.params = Json{{"alpha", alpha}, {"x", x.str()}};

  const Mat first = h_first(alpha, x);
  if (h_compact(alpha, x) != first) {
    res.fail("compact", "compact ratio form disagrees with double sum");
    return res;
  }
  if (reconstruct(h_residue(alpha), x) != first) {
    res.fail("residue", "residue reconstruction disagrees with double sum");
    return res;
  }
  if (reconstruct(h_jordan(alpha, x)) != first) {
    res.fail("jordan", "Jordan similarity disagrees with double sum");
    return res;
  }
  return res;
}

}  // namespace exint
