#pragma once

#include "exint/linalg.hpp"
#include "exint/report.hpp"
#include "exint/rmat.hpp"
#include "exint/spin_matrix.hpp"

namespace exint {

// {"n": n, "entries": [[row, col, "scalar"], ...]} sorted by (row, col)
Json spin_matrix_to_json(const SpinMatrix& m);
SpinMatrix spin_matrix_from_json(const Json& j);  // ParseError on bad shape

// dense rows of canonical scalar strings
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// {"lambda", "mu", "alpha_max", "blocks": [dense block, ...]}
Json rmatrix_to_json(const RMatrix& r);

}  // namespace exint
