#include "exint/spin_matrix.hpp"

namespace exint {

SpinMatrix SpinMatrix::identity(int n) {
  SpinMatrix m(n);
  for (Index i = 0; i < m.dim(); ++i) m.entries_[{i, i}] = Scalar(1);
  return m;
}

Scalar SpinMatrix::at(Index row, Index col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void SpinMatrix::add(Index row, Index col, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SpinMatrix::set(Index row, Index col, const Scalar& value) {
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

SpinMatrix SpinMatrix::operator+(const SpinMatrix& o) const {
  check_same(o);
  SpinMatrix out = *this;
  for (const auto& [key, value] : o.entries_) out.add(key.first, key.second, value);
  return out;
}

SpinMatrix SpinMatrix::operator-(const SpinMatrix& o) const {
  check_same(o);
  SpinMatrix out = *this;
  for (const auto& [key, value] : o.entries_) out.add(key.first, key.second, -value);
  return out;
}

SpinMatrix SpinMatrix::operator*(const SpinMatrix& o) const {
  check_same(o);
  SpinMatrix out(n_);
  // group the right factor by row once
  std::map<Index, std::vector<std::pair<Index, const Scalar*>>> by_row;
  for (const auto& [key, value] : o.entries_) {
    by_row[key.first].emplace_back(key.second, &value);
  }
  for (const auto& [key, value] : entries_) {
    auto it = by_row.find(key.second);
    if (it == by_row.end()) continue;
    for (const auto& [col, rhs] : it->second) {
      out.add(key.first, col, value * *rhs);
    }
  }
  return out;
}

SpinMatrix SpinMatrix::operator*(const Scalar& s) const {
  SpinMatrix out(n_);
  if (s.is_zero()) return out;
  for (const auto& [key, value] : entries_) {
    out.entries_[key] = value * s;
  }
  return out;
}

bool SpinMatrix::operator==(const SpinMatrix& o) const {
  return n_ == o.n_ && entries_ == o.entries_;
}

SpinMatrix SpinMatrix::transpose() const {
  SpinMatrix out(n_);
  for (const auto& [key, value] : entries_) {
    out.entries_[{key.second, key.first}] = value;
  }
  return out;
}

SpinMatrix SpinMatrix::conj_transpose() const {
  SpinMatrix out(n_);
  for (const auto& [key, value] : entries_) {
    out.entries_[{key.second, key.first}] = value.conj();
  }
  return out;
}

Scalar SpinMatrix::trace() const {
  Scalar acc(0);
  for (const auto& [key, value] : entries_) {
    if (key.first == key.second) acc += value;
  }
  return acc;
}

std::vector<Scalar> SpinMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != dim()) throw DimensionMismatch("vector length vs chain dim");
  std::vector<Scalar> out(dim(), Scalar(0));
  for (const auto& [key, value] : entries_) {
    if (!v[key.second].is_zero()) out[key.first] += value * v[key.second];
  }
  return out;
}

std::vector<Scalar> SpinMatrix::column(Index col) const {
  std::vector<Scalar> out(dim(), Scalar(0));
  for (const auto& [key, value] : entries_) {
    if (key.second == col) out[key.first] = value;
  }
  return out;
}

SpinMatrix commutator(const SpinMatrix& a, const SpinMatrix& b) {
  return a * b - b * a;
}

SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b) {
  return a * b + b * a;
}

}  // namespace exint
