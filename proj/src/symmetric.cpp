#include "symineq/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace symineq {

bool is_nonnegative(const EvalPoint& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& c) { return sgn(c) >= 0; });
}

Family family_from_string(const std::string& s) {
    if (s == "m" || s == "monomial") return Family::monomial;
    if (s == "p" || s == "power_sum" || s == "power-sum") return Family::power_sum;
    if (s == "h" || s == "complete_h" || s == "complete-h") return Family::complete_h;
    throw std::invalid_argument("unknown family '" + s + "' (expected m, p or h)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::monomial: return "m";
        case Family::power_sum: return "p";
        case Family::complete_h: return "h";
    }
    return "?";
}

Rat power_sum(const EvalPoint& x, unsigned k) {
    if (x.empty()) throw std::domain_error("evaluation point must have n >= 1 coordinates");
    if (k == 0) throw std::domain_error("power_sum rejects k = 0");
    Rat sum = 0;
    for (const Rat& c : x) sum += rat_pow(c, k);
    return sum;
}

std::vector<Rat> complete_h_prefix(const EvalPoint& x, unsigned kmax) {
    if (x.empty()) throw std::domain_error("evaluation point must have n >= 1 coordinates");
    std::vector<Rat> h(kmax + 1);
    h[0] = 1;
    if (kmax == 0) return h;
    std::vector<Rat> p(kmax + 1);
    for (unsigned i = 1; i <= kmax; ++i) p[i] = power_sum(x, i);
    for (unsigned k = 1; k <= kmax; ++k) {
        Rat acc = 0;
        for (unsigned i = 1; i <= k; ++i) acc += h[k - i] * p[i];
        h[k] = acc / k;
    }
    return h;
}

Rat complete_h(const EvalPoint& x, unsigned k) {
    return complete_h_prefix(x, k)[k];
}

Rat monomial_m(const EvalPoint& x, const Partition& lambda) {
    const std::size_t n = x.size();
    if (n == 0) throw std::domain_error("evaluation point must have n >= 1 coordinates");
    if (lambda.length() > n)
        throw std::domain_error("monomial_m requires length(lambda) <= n");
    std::vector<unsigned> expo(n, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), expo.begin());
    std::sort(expo.begin(), expo.end());  // ascending start for next_permutation
    Rat sum = 0;
    do {
        Rat term = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (expo[i] != 0) term *= rat_pow(x[i], expo[i]);
        sum += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return sum;
}

Rat h_lambda(const EvalPoint& x, const Partition& lambda) {
    const auto h = complete_h_prefix(x, lambda.max_part());
    Rat prod = 1;
    for (unsigned part : lambda.parts()) prod *= h[part];
    return prod;
}

Rat raw_eval(Family family, const Partition& lambda, const EvalPoint& x) {
    switch (family) {
        case Family::monomial:
            return monomial_m(x, lambda);
        case Family::power_sum: {
            Rat prod = 1;
            for (unsigned part : lambda.parts()) prod *= power_sum(x, part);
            return prod;
        }
        case Family::complete_h:
            return h_lambda(x, lambda);
    }
    throw std::logic_error("unreachable family");
}

Rat normalization_constant(Family family, unsigned n, const Partition& lambda) {
    if (n == 0) throw std::domain_error("need n >= 1 variables");
    switch (family) {
        case Family::complete_h: {
            Int prod = 1;
            for (unsigned part : lambda.parts()) prod *= binom(n + part - 1, part);
            return Rat(prod);
        }
        case Family::power_sum:
            return Rat(int_pow(Int(n), lambda.length()));
        case Family::monomial: {
            if (lambda.length() > n)
                throw std::domain_error("monomial family requires length(lambda) <= n");
            // orbit size: n! / prod of multiplicities! (zeros counted as one block)
            Int orbit = 1;
            for (unsigned i = 2; i <= n; ++i) orbit *= i;
            const auto& parts = lambda.parts();
            std::size_t i = 0;
            while (i < parts.size()) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                Int fact = 1;
                for (std::size_t r = 2; r <= j - i; ++r) fact *= r;
                orbit /= fact;
                i = j;
            }
            Int zfact = 1;
            for (std::size_t r = 2; r <= n - parts.size(); ++r) zfact *= r;
            orbit /= zfact;
            return Rat(orbit);
        }
    }
    throw std::logic_error("unreachable family");
}

Rat eval_normalized(Family family, unsigned n, const Partition& lambda, const EvalPoint& x) {
    if (x.size() != n)
        throw std::domain_error("evaluation point length does not match n");
    return raw_eval(family, lambda, x) / normalization_constant(family, n, lambda);
}

std::pair<Rat, Rat> eval_normalized_pair(Family family, const Partition& mu,
                                         const Partition& lambda, const EvalPoint& x) {
    const unsigned n = static_cast<unsigned>(x.size());
    if (family == Family::complete_h) {
        const unsigned kmax = std::max(mu.max_part(), lambda.max_part());
        const auto h = complete_h_prefix(x, kmax);
        // explicit Rat return: a deduced type would be a lazy gmp expression
        // referencing locals that die with the lambda frame
        auto value = [&](const Partition& lam) -> Rat {
            Rat prod = 1;
            for (unsigned part : lam.parts()) prod *= h[part];
            return prod / normalization_constant(family, n, lam);
        };
        return {value(mu), value(lambda)};
    }
    return {eval_normalized(family, n, mu, x), eval_normalized(family, n, lambda, x)};
}

}  // namespace symineq
