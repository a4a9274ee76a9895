#include "exint/linalg.hpp"

namespace exint {

Mat Mat::eye(long d) {
  Mat m(d, d);
  for (long i = 0; i < d; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : a_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix add shape");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sub shape");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw DimensionMismatch("matrix mul shape");
  Mat out(r_, o.c_);
  for (long i = 0; i < r_; ++i) {
    for (long k = 0; k < c_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (long j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += v * o.at(k, j);
      }
    }
  }
  return out;
}

Mat Mat::operator-() const {
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

Mat operator*(Mat m, const Scalar& s) {
  for (auto& v : m.a_) v *= s;
  return m;
}

Mat Mat::transpose() const {
  Mat out(c_, r_);
  for (long i = 0; i < r_; ++i) {
    for (long j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Scalar Mat::trace() const {
  Scalar acc(0);
  for (long i = 0; i < r_ && i < c_; ++i) acc += at(i, i);
  return acc;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (static_cast<long>(v.size()) != c_) throw DimensionMismatch("matrix apply shape");
  std::vector<Scalar> out(r_, Scalar(0));
  for (long i = 0; i < r_; ++i) {
    for (long j = 0; j < c_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Mat Mat::inverse() const {
  if (!is_square()) throw NotInvertible("inverse of non-square matrix");
  const long d = r_;
  Mat work = *this;
  Mat inv = Mat::eye(d);
  for (long col = 0; col < d; ++col) {
    long pivot = -1;
    for (long row = col; row < d; ++row) {
      if (!work.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw NotInvertible("singular matrix");
    if (pivot != col) {
      for (long j = 0; j < d; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar scale = work.at(col, col).inv();
    for (long j = 0; j < d; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (long row = 0; row < d; ++row) {
      if (row == col || work.at(row, col).is_zero()) continue;
      const Scalar factor = work.at(row, col);
      for (long j = 0; j < d; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat mat_pow(const Mat& a, long k) {
  if (!a.is_square()) throw DimensionMismatch("power of non-square matrix");
  Mat acc = Mat::eye(a.rows());
  for (long j = 0; j < k; ++j) acc = acc * a;
  return acc;
}

ScalarPoly charpoly(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("charpoly of non-square matrix");
  const long d = a.rows();
  ScalarPoly c(d + 1, Scalar(0));
  c[d] = Scalar(1);
  Mat m = Mat::eye(d);
  for (long k = 1; k <= d; ++k) {
    m = a * m;
    const Scalar ck = -(m.trace() / Scalar(k));
    c[d - k] = ck;
    for (long i = 0; i < d; ++i) m.at(i, i) += ck;
  }
  return c;
}

namespace {

// Row-reduce [A | b...] in place; returns pivot columns.
std::vector<long> row_reduce(Mat& m, long lhs_cols) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < lhs_cols && row < m.rows(); ++col) {
    long pivot = -1;
    for (long r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Scalar scale = m.at(row, col).inv();
    for (long j = 0; j < m.cols(); ++j) m.at(row, j) *= scale;
    for (long r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (long j = 0; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(Mat a, std::vector<Scalar> b) {
  if (static_cast<long>(b.size()) != a.rows()) {
    throw DimensionMismatch("solve_linear rhs length");
  }
  Mat aug(a.rows(), a.cols() + 1);
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const std::vector<long> pivots = row_reduce(aug, a.cols());

  LinearSolution sol;
  sol.rank = static_cast<long>(pivots.size());
  sol.consistent = true;
  for (long r = sol.rank; r < a.rows(); ++r) {
    if (!aug.at(r, a.cols()).is_zero()) {
      sol.consistent = false;
      return sol;
    }
  }
  sol.x.assign(a.cols(), Scalar(0));
  for (size_t p = 0; p < pivots.size(); ++p) {
    sol.x[pivots[p]] = aug.at(static_cast<long>(p), a.cols());
  }
  return sol;
}

long mat_rank(Mat a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<long>(row_reduce(a, a.cols()).size());
}

std::vector<std::vector<Scalar>> kernel_basis(Mat a) {
  const long cols = a.cols();
  const std::vector<long> pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (long p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(cols, Scalar(0));
    x[free] = Scalar(1);
    for (size_t p = 0; p < pivots.size(); ++p) {
      x[pivots[p]] = -a.at(static_cast<long>(p), free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace exint
