#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symineq/certificates.hpp"
#include "symineq/partition.hpp"
#include "symineq/symmetric.hpp"

namespace symineq {

// Two-value point (t,...,t | u copies, 1,...,1 | v copies). Interior simplex
// minimizers of the studied differences have this shape, so scanning these
// profiles is a meaningful global probe.
struct ProfilePoint {
    Rat t;
    unsigned u = 1;  // >= 1
    unsigned v = 0;

    EvalPoint point() const;          // length u+v, unnormalized
    EvalPoint simplex_point() const;  // scaled to coordinate sum 1; throws if sum is 0
    std::string str() const;
};

// 70 distinct nonnegative rationals: the dense window {j/16 : 0 <= j <= 64}
// plus the large-t probes {5, 10, 100, 1000, 10000}
std::vector<Rat> default_t_grid();

struct ProfileScanResult {
    Rat minimum;  // min over the grid of F_mu(x) - F_lambda(x)
    ProfilePoint argmin;
    unsigned long evaluations = 0;
};

// Exact minimum of the normalized difference over all splits u+v = n, u >= 1,
// and all grid values of t. Degrees of mu and lambda must agree; grid entries
// must be >= 0.
ProfileScanResult profile_scan(const Partition& mu, const Partition& lambda, unsigned n,
                               const std::vector<Rat>& t_grid,
                               Family family = Family::complete_h);

enum class VerdictStatus { holds_on_evidence, counterexample_found, inconclusive };

std::string verdict_status_name(VerdictStatus status);

struct Witness {
    EvalPoint x;
    Rat mu_value;
    Rat lambda_value;
};

struct InequalityVerdict {
    Partition mu, lambda;
    unsigned n_lo = 1, n_hi = 1;
    VerdictStatus status = VerdictStatus::inconclusive;
    std::optional<Witness> witness;
    std::vector<std::string> evidence;
};

struct SearchConfig {
    std::uint64_t seed = 0;
    unsigned samples = 200;
    std::vector<Rat> t_grid;  // empty means default_t_grid()
    unsigned bound = 100;     // numerator/denominator bound for sampled rationals
};

// Seeded falsifier for F_mu >= F_lambda at fixed n. Probes the canonical 0/1
// corners first, then boundary-heavy samples, then interior points; returns
// on the first exact violation.
InequalityVerdict sample_check(const Partition& mu, const Partition& lambda, unsigned n,
                               unsigned samples, std::uint64_t seed,
                               Family family = Family::complete_h, unsigned bound = 100);

// The induction engine for the boundary case, checked at a concrete point
// with vanishing last coordinate:
//   k1 J_n(p) - k2 J_{n-1}(p~) == (T(n) - T(n-1)) h_{n,(2^4)}(p),
// k1 = C(n+2,3) n^5, k2 = C(n+1,3) (n-1)^5. Requires n >= 3.
bool boundary_identity_check(unsigned n, const EvalPoint& p);

struct TheoremEvidence {
    unsigned d = 0;
    InequalityVerdict verdict;
    D8Certificate certificate;
    std::vector<std::string> chain;  // reduction steps down to the degree-8 core
    bool majorization_fails = false;
    bool chain_ok = false;

    bool ok() const {
        return majorization_fails && chain_ok && certificate.valid &&
               verdict.status == VerdictStatus::holds_on_evidence;
    }
};

// Full evidence bundle for the degree-d counterexample pair: the pair itself,
// failure of majorization, per-n profile scans and sampling, the degree-8
// certificate, and the chain identities reducing degree d to 8. d >= 8.
TheoremEvidence verify_counterexample(unsigned d, unsigned n_lo, unsigned n_hi,
                                      const SearchConfig& config);

struct ScanEntry {
    Partition mu, lambda;
    InequalityVerdict verdict;
};

struct ScanResult {
    unsigned d = 0;
    std::vector<ScanEntry> falsified;    // explicit witness found
    std::vector<ScanEntry> unfalsified;  // survived every check: candidate pairs
};

// Sweeps ordered pairs with mu not majorizing lambda in Par(d), running
// sample_check and profile_scan per n. `only` restricts to one pair.
ScanResult scan_incomparable(
    unsigned d, unsigned n_lo, unsigned n_hi, const SearchConfig& config,
    const std::optional<std::pair<Partition, Partition>>& only = std::nullopt);

}  // namespace symineq
