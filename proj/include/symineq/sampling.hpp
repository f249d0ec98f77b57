#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symineq/rational.hpp"
#include "symineq/symmetric.hpp"

namespace symineq {

// Deterministic rational sampler. All draws go through bounded(), which uses
// plain modulo reduction on mt19937_64 output; std::uniform_int_distribution
// is not pinned across standard library implementations, so we avoid it.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

    // uniform-ish draw in [0, m); m >= 1
    std::uint64_t bounded(std::uint64_t m);

    // numerator in [0, bound], denominator in [1, bound]; bound defaults to 100
    Rat nonneg(unsigned bound = 100);
    // like nonneg but never zero
    Rat positive(unsigned bound = 100);
    // either sign
    Rat signed_rat(unsigned bound = 100);

    EvalPoint nonneg_point(unsigned n, unsigned bound = 100);
    EvalPoint signed_point(unsigned n, unsigned bound = 100);
    // nonnegative point with a random nonempty zero set
    EvalPoint boundary_point(unsigned n, unsigned bound = 100);

private:
    std::mt19937_64 rng_;
};

// the n+1 points (1,..,1,0,..,0) with j leading ones, j = 0..n
EvalPoint canonical_corner(unsigned n, unsigned ones);

}  // namespace symineq
