#include "exint/ness.hpp"

#include <Eigen/Dense>

#include "exint/mpa.hpp"

namespace exint {

namespace {

constexpr double kKernelTol = 1e-8;
constexpr double kOracleTol = 1e-10;

}  // namespace

LindbladProblem make_problem(int n, const Rational& epsilon) {
  if (n < 1) throw Error("need at least one site");
  if (epsilon == 0) throw Error("dissipation strength must be nonzero");
  LindbladProblem p;
  p.n = n;
  p.epsilon = epsilon;
  p.lambda = Scalar(Rational(0), Rational(2) / epsilon);
  return p;
}

SpinMatrix bulk_hamiltonian(int n) {
  SpinMatrix h(n);
  for (int j = 1; j < n; ++j) {
    const std::uint32_t left = std::uint32_t{1} << (n - j);
    const std::uint32_t right = std::uint32_t{1} << (n - j - 1);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
      const bool ld = (b & left) != 0;   // down at site j
      const bool rd = (b & right) != 0;  // down at site j+1
      // sz sz
      h.add(b, b, Scalar(ld == rd ? 1 : -1));
      // 2 s+ s- : needs up at j, down at j+1 on the ket
      if (!ld && rd) h.add((b | left) & ~right, b, Scalar(2));
      // 2 s- s+
      if (ld && !rd) h.add((b & ~left) | right, b, Scalar(2));
    }
  }
  return h;
}

SpinMatrix jump_raise_first(int n) {
  SpinMatrix l(n);
  const std::uint32_t mask = std::uint32_t{1} << (n - 1);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    if (b & mask) l.add(b & ~mask, b, Scalar(1));
  }
  return l;
}

SpinMatrix jump_lower_last(int n) {
  SpinMatrix l(n);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    if (!(b & 1u)) l.add(b | 1u, b, Scalar(1));
  }
  return l;
}

NessResult build_ness(const LindbladProblem& problem) {
  const SpinMatrix s = transfer(problem.n, problem.lambda);
  const SpinMatrix st = transfer(problem.n, -problem.lambda).transpose();
  NessResult out;
  out.rho = s * st;
  const Scalar tr = out.rho.trace();
  if (!tr.is_real()) throw Error("fixed-point trace is not real");
  out.trace = tr;
  return out;
}

namespace {

SpinMatrix dissipator(const SpinMatrix& jump, const SpinMatrix& rho) {
  const SpinMatrix jdag = jump.conj_transpose();
  const SpinMatrix jj = jdag * jump;
  return jump * rho * jdag * Scalar(2) - anticommutator(jj, rho);
}

}  // namespace

SpinMatrix lindblad_residual(const LindbladProblem& problem,
                             const SpinMatrix& rho) {
  if (rho.n() != problem.n) {
    throw DimensionMismatch("density operator length mismatch");
  }
  const SpinMatrix h = bulk_hamiltonian(problem.n);
  const SpinMatrix diss = dissipator(jump_raise_first(problem.n), rho) +
                          dissipator(jump_lower_last(problem.n), rho);
  return commutator(h, rho) * Scalar::i() - diss * Scalar(problem.epsilon);
}

std::vector<std::complex<double>> brute_force_ness(
    const LindbladProblem& problem) {
  using Cx = std::complex<double>;
  const int n = problem.n;
  const long dim = 1L << n;
  const long dim2 = dim * dim;
  const double eps = Rational(problem.epsilon).get_d();

  auto dense = [dim](const SpinMatrix& m) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [key, value] : m.entries()) {
      const auto [re, im] = value.to_complex_double();
      out(key.first, key.second) = Cx(re, im);
    }
    return out;
  };
  const Eigen::MatrixXcd h = dense(bulk_hamiltonian(n));
  const Eigen::MatrixXcd jumps[2] = {dense(jump_raise_first(n)),
                                     dense(jump_lower_last(n))};

  // row-major vectorization: vec(A rho B) = (A kron B^T) vec(rho)
  auto kron = [dim, dim2](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(dim2, dim2);
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) {
        out.block(i * dim, j * dim, dim, dim) = a(i, j) * b;
      }
    }
    return out;
  };
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd liou =
      Cx(0, -1) * (kron(h, eye) - kron(eye, h.transpose()));
  for (const auto& jump : jumps) {
    const Eigen::MatrixXcd jd = jump.adjoint();
    const Eigen::MatrixXcd jj = jd * jump;
    liou += eps * (2.0 * kron(jump, jd.transpose()) - kron(jj, eye) -
                   kron(eye, jj.transpose()));
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(liou);
  lu.setThreshold(kKernelTol);
  const Eigen::MatrixXcd kernel = lu.kernel();
  if (lu.dimensionOfKernel() != 1) {
    throw NullSpaceDimensionError(
        "evolution operator has null-space dimension " +
        std::to_string(lu.dimensionOfKernel()));
  }

  Cx tr(0, 0);
  for (long i = 0; i < dim; ++i) tr += kernel(i * dim + i, 0);
  std::vector<Cx> out(dim2);
  for (long i = 0; i < dim2; ++i) out[i] = kernel(i, 0) / tr;
  return out;
}

CheckResult check_stationarity(int n, const Rational& epsilon) {
  CheckResult res;
  res.check = "fixed-point-residual";
  res.params = Json{{"n", n}, {"epsilon", rational_str(epsilon)}};

  const LindbladProblem problem = make_problem(n, epsilon);
  const NessResult built = build_ness(problem);
  if (!lindblad_residual(problem, built.rho).is_zero()) {
    res.fail("residual", "stationarity residual is nonzero");
    return res;
  }
  if (!(built.rho == built.rho.conj_transpose())) {
    res.fail("hermiticity", "rho != rho^dagger");
    return res;
  }
  for (std::uint32_t i = 0; i < built.rho.dim(); ++i) {
    const Scalar d = built.rho.at(i, i);
    if (!d.is_real() || d.re() < 0) {
      res.fail("diagonal", Json{{"index", i}, {"value", d.str()}});
      return res;
    }
  }
  if (!(built.trace.re() > 0)) {
    res.fail("trace", built.trace.str());
    return res;
  }
  res.note("trace", built.trace.str());
  return res;
}

CheckResult check_adjoint_convention(int n, const Rational& epsilon) {
  CheckResult res;
  res.check = "adjoint-convention";
  res.params = Json{{"n", n}, {"epsilon", rational_str(epsilon)}};

  const LindbladProblem problem = make_problem(n, epsilon);
  const SpinMatrix dag = transfer(n, problem.lambda).conj_transpose();
  const SpinMatrix refl = transfer(n, -problem.lambda).transpose();
  if (!(dag == refl)) res.fail("identity", "S(lambda)^dagger != S(-lambda)^T");
  return res;
}

CheckResult check_ness_oracle(int n, const Rational& epsilon) {
  CheckResult res;
  res.check = "fixed-point-oracle";
  res.label = kLabelEmpirical;  // tolerance-based comparison
  res.params = Json{{"n", n}, {"epsilon", rational_str(epsilon)}};

  const LindbladProblem problem = make_problem(n, epsilon);
  const NessResult built = build_ness(problem);
  const std::vector<std::complex<double>> oracle = brute_force_ness(problem);
  const Scalar inv_trace = built.trace.inv();
  const long dim = 1L << n;

  double worst = 0;
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      const auto [re, im] =
          (built.rho.at(static_cast<std::uint32_t>(i),
                        static_cast<std::uint32_t>(j)) *
           inv_trace)
              .to_complex_double();
      worst = std::max(worst,
                       std::abs(std::complex<double>(re, im) - oracle[i * dim + j]));
    }
  }
  res.note("max_entry_distance", worst);
  if (!(worst <= kOracleTol)) {
    res.fail("distance", Json{{"max_entry_distance", worst},
                              {"tolerance", kOracleTol}});
  }
  return res;
}

}  // namespace exint
