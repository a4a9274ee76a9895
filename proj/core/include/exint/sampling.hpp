#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "exint/scalar.hpp"

namespace exint {

// Deterministic parameter sampler.  Draws via modulo on a fixed-width
// generator so that a seed reproduces the same parameters on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long pick(long lo, long hi);  // uniform-ish over [lo, hi]

  // num/den with |num| <= bound, 1 <= den <= bound; never zero
  Scalar rational(long bound = 40);

  // a rational point off the half-integer degeneration locus
  Scalar off_locus(long bound = 40);

  // distinct arguments, both off the locus, with midpoint off the locus
  std::pair<Scalar, Scalar> argument_pair(long bound = 40);

  // three pairwise-distinct arguments with all pairwise midpoints off the
  // locus
  std::array<Scalar, 3> argument_triple(long bound = 40);

 private:
  std::mt19937_64 rng_;
};

}  // namespace exint
