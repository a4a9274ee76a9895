#include "exint/mpa.hpp"

#include <cstdlib>
#include <functional>
#include <set>
#include <tuple>

#include "exint/auxops.hpp"
#include "exint/binomial.hpp"
#include "exint/linalg.hpp"

namespace exint {

namespace {

// Walk the chain site by site.  State: auxiliary occupation a, partial bra
// row and ket col bit strings.  Per site the bra/ket bit pair (b, k) moves a
// by s = k - b with amplitude (lambda - a), (a - 2 lambda), or a.  Prune when
// the remaining sites cannot bring a back to k_in.
template <class F, class Sink>
void monodromy_walk(int n, long k_out, long k_in, const F& lambda, Sink&& sink) {
  std::function<void(int, long, const F&, std::uint32_t, std::uint32_t)> dfs =
      [&](int j, long a, const F& amp, std::uint32_t row, std::uint32_t col) {
        if (j == n) {
          if (a == k_in) sink(row, col, amp);
          return;
        }
        const long rem = n - j - 1;
        for (int ket = 0; ket < 2; ++ket) {
          for (int bra = 0; bra < 2; ++bra) {
            const int s = ket - bra;
            long na;
            F namp;
            if (s == 0) {
              na = a;
              namp = amp * (lambda - F(a));
            } else if (s == 1) {
              na = a + 1;
              namp = amp * (F(a) - F(2) * lambda);
            } else {
              if (a == 0) continue;
              na = a - 1;
              namp = amp * F(a);
            }
            if (std::labs(na - k_in) > rem) continue;
            dfs(j + 1, na, namp, (row << 1) | std::uint32_t(bra),
                (col << 1) | std::uint32_t(ket));
          }
        }
      };
  dfs(0, k_out, F(1), 0, 0);
}

}  // namespace

SpinMatrix monodromy_element(int n, long k_out, long k_in, const Scalar& lambda) {
  if (n < 1) throw DimensionMismatch("chain length must be >= 1");
  if (k_out < 0 || k_in < 0) throw Error("occupation indices must be >= 0");
  SpinMatrix out(n);
  monodromy_walk<Scalar>(n, k_out, k_in, lambda,
                         [&](std::uint32_t row, std::uint32_t col,
                             const Scalar& amp) { out.add(row, col, amp); });
  return out;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::complex<double>>
monodromy_element_fp(int n, long k_out, long k_in, std::complex<double> lambda) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::complex<double>> out;
  monodromy_walk<std::complex<double>>(
      n, k_out, k_in, lambda,
      [&](std::uint32_t row, std::uint32_t col, const std::complex<double>& amp) {
        out[{row, col}] += amp;
      });
  return out;
}

SpinMatrix transfer(int n, const Scalar& lambda) {
  return monodromy_element(n, 0, 0, lambda);
}

SpinMatrix monodromy_brute_force(int n, long k_out, long k_in,
                                 const Scalar& lambda) {
  const long dim = std::max(k_out, k_in) + n + 1;
  const Mat gens[3] = {build_mpa_tensor('0', lambda, dim),
                       build_mpa_tensor('+', lambda, dim),
                       build_mpa_tensor('-', lambda, dim)};
  SpinMatrix out(n);

  std::vector<int> moves(n, 0);  // 0: stay, 1: raise, 2: lower
  for (;;) {
    // amplitude <k_out| G_{s_1} ... G_{s_n} |k_in>
    std::vector<Scalar> vec(dim, Scalar(0));
    vec[k_in] = Scalar(1);
    for (int j = n - 1; j >= 0; --j) vec = gens[moves[j]].apply(vec);
    const Scalar amp = vec[k_out];
    if (!amp.is_zero()) {
      // distribute over every compatible bra/ket bit assignment: a stay step
      // admits (0,0) and (1,1), raise admits (bra 0, ket 1), lower (1, 0)
      std::function<void(int, std::uint32_t, std::uint32_t)> assign =
          [&](int j, std::uint32_t row, std::uint32_t col) {
            if (j == n) {
              out.add(row, col, amp);
              return;
            }
            if (moves[j] == 0) {
              assign(j + 1, row << 1, col << 1);
              assign(j + 1, (row << 1) | 1, (col << 1) | 1);
            } else if (moves[j] == 1) {
              assign(j + 1, row << 1, (col << 1) | 1);
            } else {
              assign(j + 1, (row << 1) | 1, col << 1);
            }
          };
      assign(0, 0, 0);
    }
    int j = n - 1;
    while (j >= 0 && moves[j] == 2) moves[j--] = 0;
    if (j < 0) break;
    ++moves[j];
  }
  return out;
}

SpinMatrix tilde_monodromy(int n, long k_out, long k_in, const Scalar& x) {
  SpinMatrix t = monodromy_element(n, k_in, k_out, -x).transpose();
  return (n & 1) ? -t : t;
}

SpinMatrix tilde_transfer(int n, const Scalar& lambda) {
  const Scalar two_lambda = Scalar(2) * lambda;
  SpinMatrix acc(n);
  for (int k = 1; k <= n; ++k) {
    const Scalar den = two_lambda - Scalar(k - 1);
    if (den.is_zero()) {
      throw DenominatorZero("2*lambda - " + std::to_string(k) +
                            " + 1 vanishes at lambda = " + lambda.str());
    }
    const Scalar coeff = Scalar(((n + k) & 1) ? -1 : 1) *
                         Scalar(Rational(binom_int(n, k))) *
                         (two_lambda - Scalar(n - 1)) / den;
    acc = acc + monodromy_element(n, k, k, lambda) * coeff;
  }
  return acc;
}

SpinMatrix magnetization_op(int n) {
  SpinMatrix m(n);
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << n); ++r) {
    m.set(r, r, Scalar(n - 2 * __builtin_popcount(r)));
  }
  return m;
}

SpinMatrix reflect(const SpinMatrix& m) {
  const int n = m.n();
  auto rev = [n](std::uint32_t x) {
    std::uint32_t out = 0;
    for (int b = 0; b < n; ++b) {
      out = (out << 1) | (x & 1);
      x >>= 1;
    }
    return out;
  };
  SpinMatrix out(n);
  for (const auto& [key, value] : m.entries()) {
    out.set(rev(key.first), rev(key.second), value);
  }
  return out;
}

CheckResult check_commute(int n, const Scalar& lambda, const Scalar& mu) {
  CheckResult res;
  res.check = "transfer-commute";
  res.params = Json{{"n", n}, {"lambda", lambda.str()}, {"mu", mu.str()}};
  const SpinMatrix a = transfer(n, lambda);
  const SpinMatrix b = transfer(n, mu);
  if (!commutator(a, b).is_zero()) res.fail("commutator", "[S,S'] != 0");
  return res;
}

CheckResult check_transfer_structure(int n, const Scalar& lambda) {
  CheckResult res;
  res.check = "transfer-structure";
  res.params = Json{{"n", n}, {"lambda", lambda.str()}};

  const SpinMatrix s = transfer(n, lambda);
  const Scalar diag = lambda.pow(n);
  for (const auto& [key, value] : s.entries()) {
    if (key.first > key.second) {
      res.fail("triangular", Json{{"row", key.first}, {"col", key.second}});
      return res;
    }
  }
  for (std::uint32_t i = 0; i < s.dim(); ++i) {
    if (!(s.at(i, i) == diag)) {
      res.fail("diagonal", Json{{"index", i}});
      return res;
    }
  }
  // selection rule on a spread of elements; band bound just outside it
  for (long k_out = 0; k_out <= n; ++k_out) {
    for (long k_in = 0; k_in <= n; ++k_in) {
      const SpinMatrix t = monodromy_element(n, k_out, k_in, lambda);
      for (const auto& [key, value] : t.entries()) {
        const long lhs = (k_out - k_in) + __builtin_popcount(key.second) -
                         __builtin_popcount(key.first);
        if (lhs != 0) {
          res.fail("selection",
                   Json{{"k_out", k_out}, {"k_in", k_in}, {"row", key.first}});
          return res;
        }
      }
    }
  }
  for (long k = 0; k <= 1; ++k) {
    if (!monodromy_element(n, k + n + 1, k, lambda).is_zero() ||
        !monodromy_element(n, k, k + n + 1, lambda).is_zero()) {
      res.fail("band", Json{{"k", k}});
      return res;
    }
  }
  return res;
}

CheckResult check_magnetization(int n, long k_out, long k_in,
                                const Scalar& lambda) {
  CheckResult res;
  res.check = "magnetization-commutator";
  res.params = Json{{"n", n}, {"k_out", k_out}, {"k_in", k_in},
                    {"lambda", lambda.str()}};

  const SpinMatrix t = monodromy_element(n, k_out, k_in, lambda);
  const SpinMatrix m = magnetization_op(n);
  const long factor = -2 * (k_out - k_in);
  res.note("measured_factor", factor);
  if (!(commutator(m, t) == t * Scalar(factor))) {
    res.fail("commutator", "[M,T] != -2(k_out-k_in) T");
    return res;
  }
  for (const auto& [key, value] : t.entries()) {
    const long lhs = (k_out - k_in) + __builtin_popcount(key.second) -
                     __builtin_popcount(key.first);
    if (lhs != 0) {
      res.fail("selection", Json{{"row", key.first}, {"col", key.second}});
      return res;
    }
  }
  return res;
}

CheckResult check_tilde_commute(int n, const Scalar& lambda, const Scalar& mu) {
  CheckResult res;
  res.check = "weighted-transfer-commute";
  res.label = kLabelEmpirical;
  res.params = Json{{"n", n}, {"lambda", lambda.str()}, {"mu", mu.str()}};

  const SpinMatrix st1 = tilde_transfer(n, lambda);
  const SpinMatrix st2 = tilde_transfer(n, mu);
  const SpinMatrix s2 = transfer(n, mu);
  if (!commutator(st1, st2).is_zero()) res.fail("tilde_tilde", "[S~,S~'] != 0");
  if (!commutator(st1, s2).is_zero()) res.fail("tilde_plain", "[S~,S'] != 0");
  return res;
}

namespace {

// Stack the sparse matrices as exact column vectors over the union support
// and solve; NoSolution if inconsistent.
std::vector<Scalar> expand_in_family(const SpinMatrix& target,
                                     const std::vector<SpinMatrix>& family,
                                     const char* what) {
  std::set<SpinMatrix::Key> support;
  for (const auto& [key, value] : target.entries()) support.insert(key);
  for (const auto& m : family) {
    for (const auto& [key, value] : m.entries()) support.insert(key);
  }
  Mat a(static_cast<long>(support.size()), static_cast<long>(family.size()));
  std::vector<Scalar> b;
  b.reserve(support.size());
  long row = 0;
  for (const auto& key : support) {
    for (size_t j = 0; j < family.size(); ++j) {
      a.at(row, static_cast<long>(j)) = family[j].at(key.first, key.second);
    }
    b.push_back(target.at(key.first, key.second));
    ++row;
  }
  LinearSolution sol = solve_linear(std::move(a), std::move(b));
  if (!sol.consistent) {
    throw NoSolution(std::string(what) + ": inconsistent exact system");
  }
  return sol.x;
}

// Lowest total degree p/q with p(x_s) = c_s q(x_s) through all samples,
// found as an exact kernel vector and verified with nonvanishing q.
Json fit_rational_function(const std::vector<std::pair<Scalar, Scalar>>& samples) {
  const long count = static_cast<long>(samples.size());
  for (long total = 0; total < count; ++total) {
    for (long dq = 0; dq <= total; ++dq) {
      const long dp = total - dq;
      Mat a(count, dp + dq + 2);
      for (long i = 0; i < count; ++i) {
        Scalar pw(1);
        for (long j = 0; j <= dp; ++j) {
          a.at(i, j) = pw;
          pw *= samples[i].first;
        }
        pw = Scalar(1);
        for (long j = 0; j <= dq; ++j) {
          a.at(i, dp + 1 + j) = -samples[i].second * pw;
          pw *= samples[i].first;
        }
      }
      for (const auto& vec : kernel_basis(std::move(a))) {
        std::vector<Scalar> p(vec.begin(), vec.begin() + dp + 1);
        std::vector<Scalar> q(vec.begin() + dp + 1, vec.end());
        Scalar lead(0);
        for (const auto& c : q) {
          if (!c.is_zero()) {
            lead = c;
            break;
          }
        }
        if (lead.is_zero()) continue;
        for (auto& c : p) c /= lead;
        for (auto& c : q) c /= lead;
        bool ok = true;
        for (const auto& [x, value] : samples) {
          const Scalar qv = poly_eval(q, x);
          if (qv.is_zero() || !(poly_eval(p, x) == value * qv)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        Json pj = Json::array(), qj = Json::array();
        for (const auto& c : p) pj.push_back(c.str());
        for (const auto& c : q) qj.push_back(c.str());
        return Json{{"numerator", pj}, {"denominator", qj}};
      }
    }
  }
  return Json{{"status", "no-fit"}};
}

}  // namespace

CheckResult check_transpose_relations(int n, const Scalar& lambda) {
  CheckResult res;
  res.check = "transpose-relations";
  res.params = Json{{"n", n}, {"lambda", lambda.str()}};

  const Scalar two_lambda = Scalar(2) * lambda;
  for (long k = 0; k <= n; ++k) {
    for (long l = 0; l <= n; ++l) {
      const Scalar den = gbinom(two_lambda, l);
      if (den.is_zero()) {
        throw DenominatorZero("transpose weight C(2*lambda," +
                              std::to_string(l) + ") vanishes");
      }
      const SpinMatrix lhs = monodromy_element(n, l, k, lambda).transpose();
      const Scalar w =
          Scalar(((k - l) & 1L) ? -1 : 1) * gbinom(two_lambda, k) / den;
      const SpinMatrix rhs = reflect(monodromy_element(n, k, l, lambda)) * w;
      if (!(lhs == rhs)) {
        res.fail("pairwise", Json{{"k", k}, {"l", l}});
        return res;
      }
    }
  }
  // literal expansion of the transposed vacuum element over the diagonal
  // family, no site reversal involved
  for (long k = 0; k <= n; ++k) {
    if ((two_lambda - Scalar(k)).is_zero()) {
      throw DenominatorZero("expansion denominator 2*lambda - " +
                            std::to_string(k) + " vanishes");
    }
  }
  SpinMatrix acc(n);
  for (long k = 0; k <= n; ++k) {
    const Scalar coeff = Scalar(Rational(binom_int(n + 1, k + 1))) *
                         Scalar((k & 1L) ? -1 : 1) * Scalar(k + 1) /
                         (two_lambda - Scalar(k));
    acc = acc + monodromy_element(n, k, k, lambda) * coeff;
  }
  acc = acc * gbinom(two_lambda, n + 1);
  if (!(transfer(n, lambda).transpose() == acc)) {
    res.fail("vacuum_expansion", "transposed transfer expansion mismatch");
  }
  return res;
}

DependencyTable discover_dependencies(int n, int q,
                                      const std::vector<Scalar>& lambdas,
                                      int l_max) {
  if (q < 0 || q > n) throw Error("need 0 <= q <= n");
  DependencyTable table;
  table.n = n;
  table.q = q;
  table.lambdas = lambdas;
  table.report.check = "element-dependencies";
  Json lam_json = Json::array();
  for (const auto& l : lambdas) lam_json.push_back(l.str());
  table.report.params = Json{{"n", n}, {"q", q}, {"l_max", l_max},
                             {"lambdas", lam_json}};

  const int basis_size = n - q + 1;
  std::vector<std::vector<SpinMatrix>> families;
  for (const auto& lambda : lambdas) {
    std::vector<SpinMatrix> family;
    for (int k = 0; k < basis_size; ++k) {
      family.push_back(monodromy_element(n, k, k + q, lambda));
    }
    // independence of the family itself
    std::set<SpinMatrix::Key> support;
    for (const auto& m : family) {
      for (const auto& [key, value] : m.entries()) support.insert(key);
    }
    Mat a(static_cast<long>(support.size()), basis_size);
    long row = 0;
    for (const auto& key : support) {
      for (int j = 0; j < basis_size; ++j) {
        a.at(row, j) = family[j].at(key.first, key.second);
      }
      ++row;
    }
    if (mat_rank(a) != basis_size) {
      throw RankDeficient("independent family has rank below " +
                          std::to_string(basis_size) + " at lambda = " +
                          lambda.str());
    }
    families.push_back(std::move(family));
  }
  table.report.note("basis_rank", basis_size);

  for (int l = basis_size; l <= l_max; ++l) {
    DependencyRow row;
    row.l = l;
    for (size_t s = 0; s < lambdas.size(); ++s) {
      row.coefficients.push_back(
          expand_in_family(monodromy_element(n, l, l + q, lambdas[s]),
                           families[s], "dependency"));
    }
    row.lambda_independent = true;
    for (size_t s = 1; s < row.coefficients.size(); ++s) {
      if (row.coefficients[s] != row.coefficients[0]) {
        row.lambda_independent = false;
        break;
      }
    }
    table.rows.push_back(std::move(row));
  }

  Json rows_json = Json::array();
  for (const auto& row : table.rows) {
    Json coeffs = Json::array();
    for (const auto& per_sample : row.coefficients) {
      Json cs = Json::array();
      for (const auto& c : per_sample) cs.push_back(c.str());
      coeffs.push_back(cs);
    }
    Json row_json{{"l", row.l},
                  {"coefficients", coeffs},
                  {"lambda_independent", row.lambda_independent}};
    if (!row.lambda_independent && lambdas.size() >= 2) {
      Json fits = Json::array();
      for (size_t k = 0; k < row.coefficients[0].size(); ++k) {
        std::vector<std::pair<Scalar, Scalar>> samples;
        for (size_t s = 0; s < lambdas.size(); ++s) {
          samples.emplace_back(lambdas[s], row.coefficients[s][k]);
        }
        fits.push_back(fit_rational_function(samples));
      }
      row_json["rational_fits"] = fits;
    }
    rows_json.push_back(row_json);
  }
  table.report.note("rows", rows_json);
  return table;
}

CheckResult check_shift_relations(int n, int m, int q, int l,
                                  const Scalar& lambda) {
  CheckResult res;
  res.check = "vacuum-shift-relations";
  res.params = Json{{"n", n}, {"m", m}, {"q", q}, {"l", l},
                    {"lambda", lambda.str()}};

  if (m == 0) {
    const Scalar two_lambda = Scalar(2) * lambda;
    const Scalar den = gbinom(two_lambda - Scalar(2 * l), q);
    if (den.is_zero()) {
      throw DenominatorZero("shift coefficient C(2*lambda-2l,q) vanishes");
    }
    const std::uint32_t dim = std::uint32_t{1} << n;
    std::vector<Scalar> down(dim, Scalar(0)), up(dim, Scalar(0));
    down[dim - 1] = Scalar(1);
    up[0] = Scalar(1);

    const Scalar coeff = gbinom(two_lambda - Scalar(l), q) / den;
    const std::vector<Scalar> lhs1 =
        monodromy_element(n, l, l + q, lambda).apply(down);
    const std::vector<Scalar> rhs1 =
        monodromy_element(n, 0, q, lambda - Scalar(l)).apply(down);
    for (std::uint32_t i = 0; i < dim; ++i) {
      if (!(lhs1[i] == coeff * rhs1[i])) {
        res.fail("down_vacuum", "shifted expansion fails");
        return res;
      }
    }
    const Scalar coeff2 = gbinom(Scalar(l + q), l);
    const std::vector<Scalar> lhs2 =
        monodromy_element(n, l + q, l, lambda).apply(up);
    const std::vector<Scalar> rhs2 =
        monodromy_element(n, q, 0, lambda - Scalar(l)).apply(up);
    for (std::uint32_t i = 0; i < dim; ++i) {
      if (!(lhs2[i] == coeff2 * rhs2[i])) {
        res.fail("up_vacuum", "shifted expansion fails");
        return res;
      }
    }
    res.note("down_coefficient", coeff.str());
    res.note("up_coefficient", coeff2.str());
    return res;
  }

  // m >= 1: stack the action on every m-excitation basis state and solve for
  // shared coefficients.  Length independence of the solutions is observed,
  // not proven.
  res.label = kLabelEmpirical;
  auto solve_family = [&](int chain, const SpinMatrix& lhs_op,
                          const std::vector<SpinMatrix>& rhs_ops,
                          int up_spins) -> std::vector<Scalar> {
    const std::uint32_t dim = std::uint32_t{1} << chain;
    std::vector<long> rows_per_state;
    std::vector<Scalar> b;
    std::vector<std::vector<Scalar>> cols(rhs_ops.size());
    for (std::uint32_t w = 0; w < dim; ++w) {
      if (chain - __builtin_popcount(w) != up_spins) continue;
      const std::vector<Scalar> lv = lhs_op.column(w);
      std::vector<std::vector<Scalar>> rv;
      for (const auto& op : rhs_ops) rv.push_back(op.column(w));
      for (std::uint32_t i = 0; i < dim; ++i) {
        b.push_back(lv[i]);
        for (size_t j = 0; j < rhs_ops.size(); ++j) cols[j].push_back(rv[j][i]);
      }
    }
    Mat a(static_cast<long>(b.size()), static_cast<long>(rhs_ops.size()));
    for (long i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < rhs_ops.size(); ++j) {
        a.at(i, static_cast<long>(j)) = cols[j][i];
      }
    }
    LinearSolution sol = solve_linear(std::move(a), std::move(b));
    if (!sol.consistent) {
      throw NoSolution("shift-relation system inconsistent");
    }
    return sol.x;
  };

  auto families = [&](int chain, const Scalar& lam) {
    struct Out {
      std::vector<Scalar> r, s, f, g;
    } out;
    std::vector<SpinMatrix> rhs;
    for (int k = 0; k <= m; ++k) {
      rhs.push_back(monodromy_element(chain, k, k + q, lam - Scalar(l - k)));
    }
    out.r = solve_family(chain, monodromy_element(chain, l, l + q, lam), rhs, m);
    rhs.clear();
    for (int k = 0; k <= m; ++k) {
      rhs.push_back(monodromy_element(chain, k + q, k, lam - Scalar(l - k)));
    }
    out.s = solve_family(chain, monodromy_element(chain, l + q, l, lam), rhs,
                         chain - m);
    rhs.clear();
    for (int k = 0; k <= m; ++k) {
      rhs.push_back(tilde_monodromy(chain, k, k + q, lam - Scalar(q + l + k)));
    }
    out.f = solve_family(chain, monodromy_element(chain, l, l + q, lam), rhs, m);
    rhs.clear();
    for (int k = 0; k <= m; ++k) {
      rhs.push_back(monodromy_element(chain, k, k + q, lam + Scalar(q + l + k)));
    }
    out.g = solve_family(chain, tilde_monodromy(chain, l, l + q, lam), rhs, m);
    return out;
  };

  const auto fams = families(n, lambda);
  const auto fams_next = families(n + 1, lambda);
  if (fams.r != fams_next.r || fams.s != fams_next.s ||
      fams.f != fams_next.f || fams.g != fams_next.g) {
    res.fail("length_independence", "coefficients differ between n and n+1");
    return res;
  }

  // reflected cross-relations reuse the -lambda solutions
  const auto fams_neg = families(n, -lambda);
  std::vector<SpinMatrix> rhs;
  for (int k = 0; k <= m; ++k) {
    rhs.push_back(tilde_monodromy(n, k + q, k, lambda - Scalar(q + l + k)));
  }
  const std::vector<Scalar> cross_g = solve_family(
      n, monodromy_element(n, l + q, l, lambda), rhs, n - m);
  rhs.clear();
  for (int k = 0; k <= m; ++k) {
    rhs.push_back(monodromy_element(n, k + q, k, lambda + Scalar(q + l + k)));
  }
  const std::vector<Scalar> cross_f =
      solve_family(n, tilde_monodromy(n, l + q, l, lambda), rhs, n - m);
  if (cross_g != fams_neg.g) {
    res.fail("cross_g", "reflected relation does not reuse g(-lambda)");
    return res;
  }
  if (cross_f != fams_neg.f) {
    res.fail("cross_f", "reflected relation does not reuse f(-lambda)");
    return res;
  }

  auto to_json = [](const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
  };
  res.note("r", to_json(fams.r));
  res.note("s", to_json(fams.s));
  res.note("f", to_json(fams.f));
  res.note("g", to_json(fams.g));
  res.note("f_neg", to_json(fams_neg.f));
  res.note("g_neg", to_json(fams_neg.g));
  return res;
}

}  // namespace exint
