#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "exint/errors.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Sparse exact operator on the 2^n-dimensional chain space.  Basis index
// bits run site 1 = most significant ... site n = least significant; bit
// value 0 is spin-up.  Zero entries are never stored.
class SpinMatrix {
 public:
  using Index = std::uint32_t;
  using Key = std::pair<Index, Index>;

  SpinMatrix() = default;
  explicit SpinMatrix(int n) : n_(n) {}
  static SpinMatrix identity(int n);

  int n() const { return n_; }
  Index dim() const { return Index{1} << n_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  const std::map<Key, Scalar>& entries() const { return entries_; }
  Scalar at(Index row, Index col) const;
  void add(Index row, Index col, const Scalar& value);
  void set(Index row, Index col, const Scalar& value);

  SpinMatrix operator+(const SpinMatrix& o) const;
  SpinMatrix operator-(const SpinMatrix& o) const;
  SpinMatrix operator*(const SpinMatrix& o) const;
  SpinMatrix operator*(const Scalar& s) const;
  SpinMatrix operator-() const { return *this * Scalar(-1); }

  bool operator==(const SpinMatrix& o) const;
  bool operator!=(const SpinMatrix& o) const { return !(*this == o); }

  SpinMatrix transpose() const;
  SpinMatrix conj_transpose() const;
  Scalar trace() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::vector<Scalar> column(Index col) const;

 private:
  void check_same(const SpinMatrix& o) const {
    if (n_ != o.n_) {
      throw DimensionMismatch("chain operators on different lengths: " +
                              std::to_string(n_) + " vs " +
                              std::to_string(o.n_));
    }
  }

  int n_ = 0;
  std::map<Key, Scalar> entries_;
};

SpinMatrix commutator(const SpinMatrix& a, const SpinMatrix& b);
SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b);

}  // namespace exint
