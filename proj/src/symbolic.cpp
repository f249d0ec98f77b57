#include "symineq/symbolic.hpp"

#include <stdexcept>

#include "symineq/errors.hpp"

namespace symineq {

std::string coord_name(unsigned i) {
    if (i == 0) throw std::domain_error("coordinates are 1-based");
    return "x" + std::to_string(i);
}

SparsePoly symbolic_h(unsigned n, unsigned k) {
    if (n == 0) throw std::domain_error("symbolic_h needs n >= 1");
    if (n > 6 || k > 8)
        throw resource_error("symbolic_h capped at n <= 6, k <= 8");
    if (k == 0) return SparsePoly(Rat(1));
    // walk weakly increasing index tuples 1 <= i_1 <= ... <= i_k <= n
    SparsePoly out;
    std::vector<unsigned> idx(k, 1);
    for (;;) {
        std::map<std::string, unsigned> mono;
        for (unsigned i : idx) mono[coord_name(i)] += 1;
        out += SparsePoly::monomial(Rat(1), mono);
        // advance to the next weakly increasing tuple
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n) --j;
        if (j == 0) break;
        const unsigned next = idx[j - 1] + 1;
        for (std::size_t r = j - 1; r < k; ++r) idx[r] = next;
    }
    return out;
}

bool verify_dh_identity(unsigned n, unsigned k, unsigned i) {
    if (k == 0) throw std::domain_error("verify_dh_identity needs k >= 1");
    if (i == 0 || i > n) throw std::domain_error("index i out of range");
    const SparsePoly lhs = symbolic_h(n, k).differentiate(coord_name(i));
    SparsePoly rhs;
    const SparsePoly xi = SparsePoly::variable(coord_name(i));
    for (unsigned j = 0; j < k; ++j) rhs += symbolic_h(n, j) * xi.pow(k - 1 - j);
    return lhs == rhs;
}

}  // namespace symineq
