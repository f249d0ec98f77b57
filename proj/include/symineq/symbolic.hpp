#pragma once

#include "symineq/poly.hpp"

namespace symineq {

// canonical name of the i-th symbolic coordinate, 1-based: "x1", "x2", ...
std::string coord_name(unsigned i);

// Full expansion of h_{n,k} in x1..xn; C(n+k-1,k) terms. Capped at n <= 6,
// k <= 8 (resource_error beyond), which covers every symbolic need here.
SparsePoly symbolic_h(unsigned n, unsigned k);

// Checks d h_{n,k} / d x_i == sum_{j=0}^{k-1} h_{n,j} x_i^(k-1-j) as
// polynomials; i is 1-based.
bool verify_dh_identity(unsigned n, unsigned k, unsigned i);

}  // namespace symineq
