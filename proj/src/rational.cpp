#include "symineq/rational.hpp"

#include <stdexcept>

namespace symineq {

Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        s.push_back(c);
    }
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::domain_error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;  // base canonical => powers of coprime ints stay coprime
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Int binom(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    Int num;
    mpz_gcd(num.get_mpz_t(), Int(a.get_num() * b.get_den()).get_mpz_t(),
            Int(b.get_num() * a.get_den()).get_mpz_t());
    Rat g(num, a.get_den() * b.get_den());
    g.canonicalize();
    return g;
}

}  // namespace symineq
