#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symineq/partition.hpp"
#include "symineq/rational.hpp"

namespace symineq {

/// Evaluation argument x in n >= 1 variables. Inequality verdicts are only
/// meaningful for nonnegative coordinates; algebra-identity checks may use
/// arbitrary rationals and say so at the call site.
using EvalPoint = std::vector<Rat>;

bool is_nonnegative(const EvalPoint& x);

enum class Family { monomial, power_sum, complete_h };

/// One-letter family codes "m" / "p" / "h" as used by the CLI.
Family family_from_string(const std::string& s);
std::string family_name(Family f);

/// p_k(x) = sum_i x_i^k. Rejects k = 0 (std::domain_error).
Rat power_sum(const EvalPoint& x, unsigned k);

/// h_0(x) .. h_kmax(x) by the Newton-type recurrence
/// h_k = (1/k) * sum_{i=1..k} h_{k-i} p_i, with h_0 = 1.
std::vector<Rat> complete_h_prefix(const EvalPoint& x, unsigned kmax);

/// h_k(x), exact.
Rat complete_h(const EvalPoint& x, unsigned k);

/// Monomial symmetric function m_lambda(x): sum over the distinct
/// permutations of the exponent vector. Requires length(lambda) <= n.
Rat monomial_m(const EvalPoint& x, const Partition& lambda);

/// h_lambda(x) = prod_j h_{lambda_j}(x).
Rat h_lambda(const EvalPoint& x, const Partition& lambda);

/// Unnormalized evaluation of the requested family at x.
Rat raw_eval(Family family, const Partition& lambda, const EvalPoint& x);

/// f(1,...,1) for the family: the binomial product for h, the orbit size
/// for m, n per part for p. Throws std::domain_error when the family is
/// not defined for the shape (m with more parts than variables, n = 0).
Rat normalization_constant(Family family, unsigned n, const Partition& lambda);

/// Term-normalized value F(x) = f(x) / f(1,...,1). Requires x.size() == n.
Rat eval_normalized(Family family, unsigned n, const Partition& lambda, const EvalPoint& x);

/// (F_mu(x), F_lambda(x)) with shared power-sum work for the h family.
std::pair<Rat, Rat> eval_normalized_pair(Family family, const Partition& mu,
                                         const Partition& lambda, const EvalPoint& x);

}  // namespace symineq
