#include "exint/poly.hpp"

namespace exint {

void poly_trim(ScalarPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ScalarPoly poly_add(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

ScalarPoly poly_mul(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.empty() || b.empty()) return {};
  ScalarPoly out(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

ScalarPoly poly_scale(const ScalarPoly& a, const Scalar& c) {
  if (c.is_zero()) return {};
  ScalarPoly out = a;
  for (auto& v : out) v *= c;
  return out;
}

Scalar poly_eval(const ScalarPoly& p, const Scalar& x) {
  Scalar acc(0);
  for (size_t d = p.size(); d-- > 0;) acc = acc * x + p[d];
  return acc;
}

std::vector<ScalarPoly> lagrange_basis(const std::vector<Scalar>& xs) {
  const size_t n = xs.size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (xs[a] == xs[b]) {
        throw DuplicateAbscissa("repeated interpolation point " + xs[a].str());
      }
    }
  }
  std::vector<ScalarPoly> basis(n);
  for (size_t j = 0; j < n; ++j) {
    ScalarPoly num{Scalar(1)};
    Scalar den(1);
    for (size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      num = poly_mul(num, ScalarPoly{-xs[m], Scalar(1)});
      den *= xs[j] - xs[m];
    }
    basis[j] = poly_scale(num, den.inv());
  }
  return basis;
}

}  // namespace exint
