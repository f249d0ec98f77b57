#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symineq/poly.hpp"
#include "symineq/symmetric.hpp"

namespace symineq {

// H_{n,(2^4)} - H_{n,(3,1^5)} as an expanded polynomial in x1..xn
SparsePoly symbolic_jn(unsigned n);

struct J2Factorization {
    SparsePoly j2;        // expanded in x1, x2
    SparsePoly quotient;  // P with j2 = (x1 - x2)^2 * P
    long scale = 10368;
    std::vector<Int> scaled_coeffs;  // scale*P on x1^6, x1^5 x2, ..., x2^6
    bool coeff_vector_ok = false;    // equals (47,120,177,176,177,120,47)
    bool palindromic = false;
};

// Factors the two-variable difference; throws divisibility_error if the
// square factor is missing (that would falsify the whole base case).
J2Factorization expand_J2();

// The difference as a rational function of p1, p2, p3 and the symbolic
// variable n:
//   [ (p1^2+p2)^4 (n+2) n^2 - (p1^8 + 3 p1^6 p2 + 2 p1^5 p3)(n+1)^3 ]
//   / [ (n+2)(n+1)^4 n^6 ]
RationalFunction jn_in_power_sums();

struct BreveJ {
    RationalFunction jhat;    // u v (t-1)^2 / ((u+v+2)(u+v+1)^4 (u+v)^6)
    SparsePoly profile_num;   // numerator of the difference at (t^u, 1^v), in (t,u,v)
    SparsePoly jbreve_tuv;    // profile_num / (u v (t-1)^2)
    SparsePoly jbreve;        // after u = k+1, v = l+1, in (t,k,l)
};

// Profile factorization: the difference at (t^u, 1^v) equals jhat * jbreve.
BreveJ breve_J();

// the seven published coefficient expressions c0..c6, as parseable text in (k, l)
const std::array<std::string, 7>& appendix_c_expressions();

// Reads an expression file: lines "c<i> = <expression>", i = 0..6, '#' comments.
std::array<std::string, 7> load_appendix_file(const std::string& path);

struct InteriorRecord {
    std::vector<SparsePoly> c_polys;  // c0..c6 in (k,l)
    bool appendix_match = false;
    bool all_monomials_positive = false;
    std::string failure;  // first offending c_i and detail, empty when ok
    bool ok() const { return appendix_match && all_monomials_positive; }
};

InteriorRecord verify_appendix_coeffs(const SparsePoly& jbreve);
InteriorRecord verify_appendix_coeffs(const SparsePoly& jbreve,
                                      const std::array<std::string, 7>& expected);

struct TRatio {
    unsigned n;
    Rat value;  // C(n+2,3) n^5 / C(n+1,2)^4, cross-checked against (8/3)(n^3+2n^2)/(n+1)^3
};

TRatio t_ratio(unsigned n);

struct BoundaryRecord {
    unsigned n_lo = 3;
    unsigned n_hi = 200;
    bool closed_forms_agree = false;
    bool monotone = false;
    bool ok() const { return closed_forms_agree && monotone; }
};

// checks T(n) > T(n-1) for every n in [n_lo, n_hi], both closed forms agreeing
BoundaryRecord check_t_ratio_range(unsigned n_lo, unsigned n_hi);

enum class IdentityMode { automatic, symbolic, sampled };

// The chain step behind the even-degree extension: cross-multiplied,
//   H_{n,(2^m)} H_{n,(3,1^{2m-5})} H_{n,(1,1)}
//     == H_{n,(2^{m-1})} H_{n,(3,1^{2m-3})} H_{n,(2)}.
// Symbolic for n <= 3 under automatic mode, else verified at `samples`
// seeded points. Also samples the direction H_{n,(2)} >= H_{n,(1,1)} on
// nonnegative points. m >= 5.
bool ratio_step_identity(unsigned n, unsigned m, IdentityMode mode = IdentityMode::automatic,
                         std::uint64_t seed = 0, unsigned samples = 100);

// Odd-degree reduction: H_{n,(2^m,1)} H_{n,(3,1^{2m-3})}
//   == H_{n,(2^m)} H_{n,(3,1^{2m-2})}. m >= 4.
bool odd_reduction_identity(unsigned n, unsigned m, IdentityMode mode = IdentityMode::automatic,
                            std::uint64_t seed = 0, unsigned samples = 100);

struct CertificateStep {
    std::string name;
    bool passed = false;
    std::string evidence;
};

struct D8Certificate {
    J2Factorization base_case;
    InteriorRecord interior;
    BoundaryRecord boundary;
    std::vector<CertificateStep> steps;
    bool valid = false;

    nlohmann::ordered_json to_json() const;
};

D8Certificate build_d8_certificate(unsigned t_lo = 3, unsigned t_hi = 200);
D8Certificate build_d8_certificate(unsigned t_lo, unsigned t_hi,
                                   const std::array<std::string, 7>& appendix);

// Stationarity cross-check at a concrete point: every partial derivative of
// the difference fits the same quadratic a x_i^2 + b x_i + c with point-only
// coefficients (the multiplier-free part of the first-order conditions).
// n <= 4 (symbolic differentiation under the hood).
bool lagrange_quadratic_identity(unsigned n, const EvalPoint& x);

}  // namespace symineq
