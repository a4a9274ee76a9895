#pragma once

#include <vector>

#include "exint/errors.hpp"
#include "exint/poly.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Dense exact matrix.  Sizes here are auxiliary-space truncations and sector
// dimensions, i.e. small; everything is O(n^3) Gauss without pivot heuristics.
class Mat {
 public:
  Mat() = default;
  Mat(long rows, long cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat eye(long d);

  long rows() const { return r_; }
  long cols() const { return c_; }

  Scalar& at(long i, long j) { return a_[i * c_ + j]; }
  const Scalar& at(long i, long j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  bool is_square() const { return r_ == c_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  friend Mat operator*(Mat m, const Scalar& s);
  friend Mat operator*(const Scalar& s, Mat m) { return std::move(m) * s; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Scalar trace() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  // Exact Gauss-Jordan inverse; NotInvertible on a singular input.
  Mat inverse() const;

 private:
  long r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Mat commutator(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, long k);

// det(tI - A), monic, coefficients lowest degree first (Faddeev-LeVerrier,
// division-free apart from exact integer divides).
ScalarPoly charpoly(const Mat& a);

struct LinearSolution {
  std::vector<Scalar> x;  // particular solution with free variables at zero
  long rank = 0;
  bool consistent = false;
};

// Exact solve of A x = b for rectangular A.
LinearSolution solve_linear(Mat a, std::vector<Scalar> b);

long mat_rank(Mat a);

// Basis of the exact null space of A (free-variable columns back-substituted).
std::vector<std::vector<Scalar>> kernel_basis(Mat a);

}  // namespace exint
