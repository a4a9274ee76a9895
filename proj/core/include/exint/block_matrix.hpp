#pragma once

#include <vector>

#include "exint/linalg.hpp"

namespace exint {

// A sector-diagonal operator on the graded auxiliary pair space: one exact
// block per total occupation alpha = 0..alpha_max, block alpha acting on the
// (alpha+1)-dimensional sector.
struct BlockMatrix {
  int alpha_max = -1;
  std::vector<Mat> blocks;

  const Mat& block(int alpha) const { return blocks.at(alpha); }
};

// Permutation exchanging the two copies: antidiagonal in the sector basis.
Mat exchange_block(int alpha);

// Total-occupation number operator restricted to one sector.
Mat number_block(int alpha);

struct StructOps {
  BlockMatrix number;
  BlockMatrix exchange;
};

StructOps build_structops(int alpha_max);

}  // namespace exint
