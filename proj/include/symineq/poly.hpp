#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symineq/errors.hpp"
#include "symineq/rational.hpp"

namespace symineq {

// Graded lexicographic order on exponent vectors of equal length: compare
// total degree first, ties broken lexicographically (earlier variable wins).
struct GrlexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Exact sparse multivariate polynomial. Variables are identified by name and
// kept sorted; exponent vectors follow that order. The representation is
// canonical: no zero coefficients, no variable column that is zero in every
// term. Structural equality therefore coincides with polynomial equality.
class SparsePoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    SparsePoly() = default;  // zero polynomial
    explicit SparsePoly(const Rat& c);
    explicit SparsePoly(long c);

    static SparsePoly variable(const std::string& name);
    static SparsePoly monomial(const Rat& coeff, const std::map<std::string, unsigned>& mono);

    // Accepts the grammar printed by str(): sums/differences of products of
    // rational literals ("2", "1/3"), named variables, parenthesized
    // subexpressions and ^ powers; '*' is optional (juxtaposition works).
    static SparsePoly parse(const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Rat constant_value() const;  // throws std::logic_error unless constant

    unsigned total_degree() const;                  // 0 for the zero polynomial
    unsigned degree_in(const std::string& var) const;

    // coefficient of the exact monomial {name: exponent}; names omitted from
    // mono must have exponent zero in the matching term
    Rat coefficient(const std::map<std::string, unsigned>& mono) const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }

    SparsePoly& operator*=(const Rat& c);
    friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
    friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }

    SparsePoly pow(unsigned k) const;

    SparsePoly differentiate(const std::string& var) const;

    // replaces each mapped variable by its polynomial; unmapped variables stay
    SparsePoly substitute(const std::map<std::string, SparsePoly>& repl) const;
    SparsePoly evaluate_partial(const std::map<std::string, Rat>& point) const;
    // every variable must be bound; throws std::invalid_argument otherwise
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    // f = sum_j out[j] * var^j with every out[j] free of var
    std::vector<SparsePoly> collect_coefficients(const std::string& var) const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    SparsePoly(std::vector<std::string> vars, TermMap terms);
    // drop zero coefficients and unused variable columns
    void normalize();
    // remap terms onto a variable superset (newvars must contain vars_)
    SparsePoly embedded(const std::vector<std::string>& newvars) const;
    static std::vector<std::string> merged_vars(const SparsePoly& a, const SparsePoly& b);

    std::vector<std::string> vars_;  // sorted, unique
    TermMap terms_;

    friend SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g);
};

// Quotient f/g when g divides f exactly; throws divisibility_error otherwise.
// Single-divisor division over grlex: for exact multiples the remainder's
// leading term is always reducible, so getting stuck proves non-divisibility.
SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g);

// Quotient of polynomials kept reduced by content-gcd and common monomial
// factors only (no multivariate gcd). Denominator sign is normalized so its
// grlex-leading coefficient is positive. Equality is decided exactly by
// cross-multiplication, so representation differences never leak.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(SparsePoly num, SparsePoly den);
    static RationalFunction from_poly(SparsePoly p);

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction substitute(const std::map<std::string, SparsePoly>& repl) const;
    // throws std::domain_error if the denominator vanishes at the point
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    std::string str() const;

private:
    void reduce();
    SparsePoly num_, den_;
};

}  // namespace symineq
