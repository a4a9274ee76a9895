#pragma once

#include <utility>
#include <vector>

#include "exint/errors.hpp"
#include "exint/scalar.hpp"

namespace exint {

// Dense exact polynomial, coeffs[d] multiplying x^d; the zero polynomial is
// the empty vector.
using ScalarPoly = std::vector<Scalar>;

void poly_trim(ScalarPoly& p);
ScalarPoly poly_add(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly poly_mul(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly poly_scale(const ScalarPoly& a, const Scalar& c);
Scalar poly_eval(const ScalarPoly& p, const Scalar& x);

// Coefficient form of the Lagrange basis over the given abscissae.
// Throws DuplicateAbscissa on a repeated point.
std::vector<ScalarPoly> lagrange_basis(const std::vector<Scalar>& xs);

// Exact interpolation of vector-valued samples.  V needs operator+(V, V),
// operator*(V, Scalar) and is_zero().  Returns coefficients lowest degree
// first, trailing zeros trimmed.
template <class V>
std::vector<V> interpolate(const std::vector<std::pair<Scalar, V>>& points,
                           const V& zero) {
  std::vector<Scalar> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.first);
  const std::vector<ScalarPoly> basis = lagrange_basis(xs);

  std::vector<V> out(points.size(), zero);
  for (size_t j = 0; j < points.size(); ++j) {
    for (size_t d = 0; d < basis[j].size(); ++d) {
      if (!basis[j][d].is_zero()) out[d] = out[d] + points[j].second * basis[j][d];
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace exint
