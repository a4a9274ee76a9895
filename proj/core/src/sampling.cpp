#include "exint/sampling.hpp"

#include "exint/binomial.hpp"

namespace exint {

long Sampler::pick(long lo, long hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % range);
}

Scalar Sampler::rational(long bound) {
  for (;;) {
    const long num = pick(-bound, bound);
    if (num == 0) continue;
    return Scalar::of(num, pick(1, bound));
  }
}

Scalar Sampler::off_locus(long bound) {
  for (;;) {
    const Scalar x = rational(bound);
    if (!is_half_integer_pole(x)) return x;
  }
}

std::pair<Scalar, Scalar> Sampler::argument_pair(long bound) {
  for (;;) {
    const Scalar a = off_locus(bound);
    const Scalar b = off_locus(bound);
    if (a == b) continue;
    if (is_half_integer_pole((a + b) / Scalar(2))) continue;
    return {a, b};
  }
}

std::array<Scalar, 3> Sampler::argument_triple(long bound) {
  for (;;) {
    const Scalar a = off_locus(bound);
    const Scalar b = off_locus(bound);
    const Scalar c = off_locus(bound);
    if (a == b || a == c || b == c) continue;
    if (is_half_integer_pole((a + b) / Scalar(2)) ||
        is_half_integer_pole((a + c) / Scalar(2)) ||
        is_half_integer_pole((b + c) / Scalar(2))) {
      continue;
    }
    return {a, b, c};
  }
}

}  // namespace exint
