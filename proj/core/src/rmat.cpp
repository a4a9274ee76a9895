#include "exint/rmat.hpp"

#include <map>
#include <utility>

#include "exint/auxops.hpp"
#include "exint/binomial.hpp"
#include "exint/hgen.hpp"
#include "exint/mpa.hpp"
#include "exint/spin_matrix.hpp"

namespace exint {

RMatrix build_r(const Scalar& lambda, const Scalar& mu, int alpha_max) {
  const Scalar x = (lambda + mu) / Scalar(2);
  if (is_half_integer_pole(x)) {
    throw PoleError("(lambda+mu)/2 = " + x.str() + " lies on the pole locus");
  }
  RMatrix r;
  r.lambda = lambda;
  r.mu = mu;
  r.alpha_max = alpha_max;
  const Scalar diff = lambda - mu;
  for (int a = 0; a <= alpha_max; ++a) {
    const Mat h = h_first(a, x);
    Mat acc = Mat::eye(a + 1);
    Mat hpow = Mat::eye(a + 1);
    Scalar coeff(1);
    // the series ends at order a: the generator is nilpotent of index a+1
    for (int j = 1; j <= a; ++j) {
      hpow = hpow * h;
      coeff = coeff * diff / Scalar(j);
      acc = acc + hpow * coeff;
    }
    r.blocks.push_back(acc);
  }
  return r;
}

namespace {

// Spin components of the two-copy local operator at sector resolution:
// component (out, in) of L(l1) L(l2) with the copies acting on the two
// tensor slots of the sector basis |k, alpha-k>.
Mat ll_block(const std::string& comp, long a_src, long a_tgt, const Scalar& l1,
             const Scalar& l2) {
  std::vector<std::tuple<Scalar, LadderAction, LadderAction>> terms;
  if (comp == "00") {
    terms.emplace_back(Scalar(1), act_diag(l1), act_diag(l2));
    terms.emplace_back(Scalar(1), act_raise(l1), act_lower());
  } else if (comp == "01") {
    terms.emplace_back(Scalar(1), act_diag(l1), act_raise(l2));
    terms.emplace_back(Scalar(1), act_raise(l1), act_diag(l2));
  } else if (comp == "10") {
    terms.emplace_back(Scalar(1), act_diag(l1), act_lower());
    terms.emplace_back(Scalar(1), act_lower(), act_diag(l2));
  } else {
    terms.emplace_back(Scalar(1), act_diag(l1), act_diag(l2));
    terms.emplace_back(Scalar(1), act_lower(), act_raise(l2));
  }
  return two_copy_block(a_src, a_tgt, terms);
}

constexpr int kComponentShift[4] = {0, -1, 1, 0};
const char* const kComponents[4] = {"00", "01", "10", "11"};

}  // namespace

CheckResult check_rll(const Scalar& lambda, const Scalar& mu, int alpha_max) {
  CheckResult res;
  res.check = "local-exchange-relation";
  res.params = Json{{"alpha_max", alpha_max}, {"lambda", lambda.str()},
                    {"mu", mu.str()}};

  const RMatrix r = build_r(lambda, mu, alpha_max);
  for (int ci = 0; ci < 4; ++ci) {
    const std::string comp = kComponents[ci];
    for (int src = 0; src <= alpha_max; ++src) {
      const int tgt = src + kComponentShift[ci];
      if (tgt < 0 || tgt > alpha_max) continue;
      const Mat lhs = r.block(tgt) * ll_block(comp, src, tgt, lambda, mu);
      const Mat rhs = ll_block(comp, src, tgt, mu, lambda) * r.block(src);
      if (lhs != rhs) {
        res.fail("exchange", Json{{"component", comp}, {"alpha", src}});
        return res;
      }
    }
  }
  return res;
}

CheckResult check_rtt(int n, const Scalar& lambda, const Scalar& mu,
                      int alpha_max) {
  CheckResult res;
  res.check = "monodromy-exchange-relation";
  res.params = Json{{"n", n}, {"alpha_max", alpha_max},
                    {"lambda", lambda.str()}, {"mu", mu.str()}};

  const RMatrix r = build_r(lambda, mu, alpha_max);
  std::map<std::pair<long, long>, SpinMatrix> tl, tm;
  auto element = [n](std::map<std::pair<long, long>, SpinMatrix>& cache,
                     const Scalar& z, long a, long b) -> const SpinMatrix& {
    auto it = cache.find({a, b});
    if (it == cache.end()) {
      it = cache.emplace(std::make_pair(a, b), monodromy_element(n, a, b, z))
               .first;
    }
    return it->second;
  };

  for (long a = 0; a <= alpha_max; ++a) {
    for (long b = 0; a + b <= alpha_max; ++b) {
      for (long c = 0; c <= alpha_max; ++c) {
        for (long d = 0; c + d <= alpha_max; ++d) {
          SpinMatrix lhs(n), rhs(n);
          for (long e = 0; e <= a + b; ++e) {
            const Scalar& w = r.block(static_cast<int>(a + b)).at(a, e);
            if (w.is_zero()) continue;
            lhs = lhs + element(tl, lambda, e, c) *
                            element(tm, mu, a + b - e, d) * w;
          }
          for (long e = 0; e <= c + d; ++e) {
            const Scalar& w = r.block(static_cast<int>(c + d)).at(e, c);
            if (w.is_zero()) continue;
            rhs = rhs + element(tm, mu, a, e) *
                            element(tl, lambda, b, c + d - e) * w;
          }
          if (!(lhs == rhs)) {
            res.fail("exchange",
                     Json{{"a", a}, {"b", b}, {"c", c}, {"d", d}});
            return res;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_ybe(const Scalar& lambda, const Scalar& mu, const Scalar& eta,
                      int beta_max) {
  CheckResult res;
  res.check = "braid-consistency";
  res.label = kLabelEmpirical;
  res.params = Json{{"beta_max", beta_max}, {"lambda", lambda.str()},
                    {"mu", mu.str()}, {"eta", eta.str()}};

  auto guarded = [beta_max](const Scalar& z1, const Scalar& z2) {
    try {
      return build_r(z1, z2, beta_max);
    } catch (const PoleError& e) {
      throw PoleError("pair (" + z1.str() + ", " + z2.str() + "): " + e.what());
    }
  };
  const RMatrix r_lm = guarded(lambda, mu);
  const RMatrix r_le = guarded(lambda, eta);
  const RMatrix r_me = guarded(mu, eta);

  for (int beta = 0; beta <= beta_max; ++beta) {
    // triple-sector basis (k1, k2, k3 = beta - k1 - k2)
    std::map<std::pair<int, int>, long> index;
    long dim = 0;
    for (int k1 = 0; k1 <= beta; ++k1) {
      for (int k2 = 0; k2 + k1 <= beta; ++k2) index[{k1, k2}] = dim++;
    }
    auto inner = [&](const RMatrix& r) {  // acts on slots 2,3
      Mat m(dim, dim);
      for (const auto& [kk, row] : index) {
        for (int k2p = 0; k2p + kk.first <= beta; ++k2p) {
          m.at(row, index.at({kk.first, k2p})) =
              r.block(beta - kk.first).at(kk.second, k2p);
        }
      }
      return m;
    };
    auto outer = [&](const RMatrix& r) {  // acts on slots 1,2
      Mat m(dim, dim);
      for (const auto& [kk, row] : index) {
        const int total = kk.first + kk.second;
        for (int k1p = 0; k1p <= total; ++k1p) {
          m.at(row, index.at({k1p, total - k1p})) =
              r.block(total).at(kk.first, k1p);
        }
      }
      return m;
    };
    const Mat lhs = inner(r_lm) * outer(r_le) * inner(r_me);
    const Mat rhs = outer(r_me) * inner(r_le) * outer(r_lm);
    if (lhs != rhs) {
      res.fail("braid", Json{{"beta", beta}});
      return res;
    }
  }
  return res;
}

CheckResult check_r_properties(const Scalar& lambda, const Scalar& mu,
                               int alpha_max) {
  CheckResult res;
  res.check = "intertwiner-properties";
  res.params = Json{{"alpha_max", alpha_max}, {"lambda", lambda.str()},
                    {"mu", mu.str()}};

  const RMatrix r = build_r(lambda, mu, alpha_max);
  const RMatrix rr = build_r(mu, lambda, alpha_max);
  const RMatrix reg = build_r(lambda, lambda, alpha_max);
  const Scalar two_lambda = Scalar(2) * lambda;
  const Scalar two_mu = Scalar(2) * mu;

  for (int a = 0; a <= alpha_max; ++a) {
    const Mat& fwd = r.block(a);
    const Mat& bwd = rr.block(a);
    const Mat eye = Mat::eye(a + 1);
    const Mat p = exchange_block(a);

    if (p * fwd * p != bwd) {
      res.fail("exchange_symmetry", Json{{"alpha", a}});
      return res;
    }
    if (fwd * bwd != eye) {
      res.fail("inverse_pair", Json{{"alpha", a}});
      return res;
    }
    const Mat pr = p * fwd;
    if (pr * pr != eye) {
      res.fail("involution", Json{{"alpha", a}});
      return res;
    }

    std::vector<Scalar> ul(a + 1), um(a + 1);
    for (int k = 0; k <= a; ++k) {
      ul[k] = gbinom(two_lambda, k);
      um[k] = gbinom(two_mu, k);
    }
    Mat weighted(a + 1, a + 1);
    for (int k = 0; k <= a; ++k) {
      for (int l = 0; l <= a; ++l) {
        const Scalar den = ul[l] * um[a - l];
        if (den.is_zero()) {
          throw DenominatorZero("transposal weight vanishes at (alpha=" +
                                std::to_string(a) + ", l=" + std::to_string(l) +
                                ")");
        }
        weighted.at(k, l) = um[k] * ul[a - k] * fwd.at(k, l) / den;
      }
    }
    if (weighted != bwd.transpose()) {
      res.fail("weighted_transpose", Json{{"alpha", a}});
      return res;
    }

    if (!mat_pow(fwd - eye, a + 1).is_zero()) {
      res.fail("unipotent", Json{{"alpha", a}});
      return res;
    }
    const ScalarPoly cp = charpoly(fwd);
    for (int j = 0; j <= a + 1; ++j) {
      const Scalar expected = Scalar(Rational(binom_int(a + 1, j))) *
                              Scalar(((a + 1 - j) & 1) ? -1 : 1);
      if (!(cp[j] == expected)) {
        res.fail("characteristic", Json{{"alpha", a}, {"degree", j}});
        return res;
      }
    }
    if (!(fwd.trace() == Scalar(a + 1))) {
      res.fail("trace", Json{{"alpha", a}});
      return res;
    }
    if (reg.block(a) != eye) {
      res.fail("regularity", Json{{"alpha", a}});
      return res;
    }
  }
  return res;
}

CheckResult check_lemma1(const Scalar& x, int alpha_max) {
  CheckResult res;
  res.check = "expansion-block-commutators";
  res.params = Json{{"alpha_max", alpha_max}, {"x", x.str()}};

  const LambdaComponents lc = build_lambda_components(x, alpha_max);
  std::vector<Mat> h;
  for (int a = 0; a <= alpha_max + 1; ++a) h.push_back(h_first(a, x));

  for (int a = 0; a <= alpha_max; ++a) {
    const Mat& gen = h[a];
    const Mat& gen1 = h[a + 1];
    if (commutator(gen, lc.block(0, "00", a)) != lc.block(1, "00", a)) {
      res.fail("comp00", Json{{"alpha", a}});
      return res;
    }
    if (gen * lc.block(0, "01", a) - lc.block(0, "01", a) * gen1 !=
        lc.block(1, "01", a)) {
      res.fail("comp01", Json{{"alpha", a}});
      return res;
    }
    if (gen1 * lc.block(0, "10", a) - lc.block(0, "10", a) * gen !=
        lc.block(1, "10", a)) {
      res.fail("comp10", Json{{"alpha", a}});
      return res;
    }
    if (commutator(gen, lc.block(0, "11", a)) != lc.block(1, "11", a)) {
      res.fail("comp11", Json{{"alpha", a}});
      return res;
    }
    const CheckResult three = check_x_three_term(a);
    if (!three.passed()) {
      res.fail("three_term", Json{{"alpha", a}, {"detail", three.witness}});
      return res;
    }
  }
  return res;
}

CheckResult check_lemma2(const Scalar& x, int alpha_max) {
  CheckResult res;
  res.check = "expansion-block-algebra";
  res.params = Json{{"alpha_max", alpha_max}, {"x", x.str()}};

  // graded commutator of the generator pair with a block mapping sector
  // src -> tgt
  auto graded = [](const Mat& h_src, const Mat& h_tgt, const Mat& m) {
    return h_tgt * m - m * h_src;
  };

  for (int a = 0; a <= alpha_max; ++a) {
    const Mat gen = h_first(a, x);
    const Mat gen1 = h_first(a + 1, x);
    const Mat sum0 = lambda1_sum_block(a);
    const Mat diff0 = lambda1_diff_block(a);
    const Mat plus1 = lambda1_plus_block(a);
    const Mat minus1 = lambda1_minus_block(a);
    const Mat plus2 = lambda2_plus_block(a);

    if (!commutator(gen, commutator(gen, sum0)).is_zero()) {
      res.fail("sum_double_commutator", Json{{"alpha", a}});
      return res;
    }
    if (!commutator(gen, commutator(gen, diff0)).is_zero()) {
      res.fail("diff_double_commutator", Json{{"alpha", a}});
      return res;
    }
    const Mat c1 = graded(gen1, gen, plus1);
    const Mat c2 = graded(gen1, gen, c1);
    const Mat c3 = graded(gen1, gen, plus2);
    if (!(c2 + c3 * Scalar(3)).is_zero()) {
      res.fail("raising_mixing", Json{{"alpha", a}});
      return res;
    }
    if (!graded(gen1, gen, c3).is_zero()) {
      res.fail("raising_second_order", Json{{"alpha", a}});
      return res;
    }
    const Mat d1 = graded(gen, gen1, minus1);
    if (!d1.is_zero()) {
      res.fail("lowering_charge", Json{{"alpha", a}});
      return res;
    }
    if (!graded(gen, gen1, d1).is_zero()) {
      res.fail("lowering_second_order", Json{{"alpha", a}});
      return res;
    }

    if (lambda1_sum_block(a + 1) * minus1 != minus1 * sum0) {
      res.fail("sum_intertwine", Json{{"alpha", a}});
      return res;
    }
    if (lambda1_diff_block(a + 1) * minus1 !=
        minus1 * diff0 - minus1 * Scalar(2)) {
      res.fail("diff_intertwine", Json{{"alpha", a}});
      return res;
    }
    if (a >= 1) {
      if (plus1 * minus1 != lambda1_minus_block(a - 1) * lambda1_plus_block(a - 1) + diff0) {
        res.fail("ladder_bracket", Json{{"alpha", a}});
        return res;
      }
      if (plus2 * minus1 != lambda1_minus_block(a - 1) * lambda2_plus_block(a - 1)) {
        res.fail("second_ladder_bracket", Json{{"alpha", a}});
        return res;
      }
    } else {
      if (plus1 * minus1 != diff0) {
        res.fail("ladder_bracket_base", Json{{"alpha", a}});
        return res;
      }
      if (!(plus2 * minus1).is_zero()) {
        res.fail("second_ladder_bracket_base", Json{{"alpha", a}});
        return res;
      }
    }

    const NullPair pair_a = null_pair(a);
    const NullPair pair_a1 = null_pair(a + 1);
    const std::vector<Scalar> zv = diff0.apply(pair_a.v);
    for (int k = 0; k <= a; ++k) {
      if (!(zv[k] == Scalar(-2 * a) * pair_a.v[k])) {
        res.fail("diff_null_vector", Json{{"alpha", a}});
        return res;
      }
    }
    const std::vector<Scalar> pu = plus2.apply(pair_a1.u);
    for (int k = 0; k <= a; ++k) {
      if (!(pu[k] == Scalar(2) * pair_a.v[k])) {
        res.fail("raising_null_vector", Json{{"alpha", a}});
        return res;
      }
    }
  }
  return res;
}

}  // namespace exint
