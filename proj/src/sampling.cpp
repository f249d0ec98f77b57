#include "symineq/sampling.hpp"

#include <stdexcept>

namespace symineq {

std::uint64_t RatSampler::bounded(std::uint64_t m) {
    if (m == 0) throw std::domain_error("bounded(0)");
    return rng_() % m;
}

Rat RatSampler::nonneg(unsigned bound) {
    const auto num = bounded(bound + 1);
    const auto den = 1 + bounded(bound);
    Rat q(Int(static_cast<unsigned long>(num)), Int(static_cast<unsigned long>(den)));
    q.canonicalize();
    return q;
}

Rat RatSampler::positive(unsigned bound) {
    const auto num = 1 + bounded(bound);
    const auto den = 1 + bounded(bound);
    Rat q(Int(static_cast<unsigned long>(num)), Int(static_cast<unsigned long>(den)));
    q.canonicalize();
    return q;
}

Rat RatSampler::signed_rat(unsigned bound) {
    Rat q = nonneg(bound);
    if (bounded(2) == 1) q = -q;
    return q;
}

EvalPoint RatSampler::nonneg_point(unsigned n, unsigned bound) {
    EvalPoint x(n);
    for (auto& c : x) c = nonneg(bound);
    return x;
}

EvalPoint RatSampler::signed_point(unsigned n, unsigned bound) {
    EvalPoint x(n);
    for (auto& c : x) c = signed_rat(bound);
    return x;
}

EvalPoint RatSampler::boundary_point(unsigned n, unsigned bound) {
    if (n == 0) throw std::domain_error("boundary_point needs n >= 1");
    EvalPoint x(n);
    for (auto& c : x) c = nonneg(bound);
    const auto zeros = 1 + bounded(n);  // at least one coordinate pinned to zero
    for (std::uint64_t i = 0; i < zeros; ++i) x[bounded(n)] = 0;
    return x;
}

EvalPoint canonical_corner(unsigned n, unsigned ones) {
    if (ones > n) throw std::domain_error("canonical_corner: ones > n");
    EvalPoint x(n, Rat(0));
    for (unsigned i = 0; i < ones; ++i) x[i] = 1;
    return x;
}

}  // namespace symineq
