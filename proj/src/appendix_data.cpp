#include "symineq/certificates.hpp"

namespace symineq {

// Published closed forms of the seven t-coefficients, kept verbatim as
// expression text so the equality check targets the printed formulas rather
// than anything re-derived inside this library.
const std::array<std::string, 7>& appendix_c_expressions() {
    static const std::array<std::string, 7> exprs = {
        // c0
        "(l+2)*(l+1)^3*(k^2*l^2 + 2*k*l^3 + l^4 + 5*k^2*l + 17*k*l^2 + 12*l^3"
        " + 5*k^2 + 43*k*l + 49*l^2 + 32*k + 82*l + 47)",
        // c1
        "2*(l+2)*(l+1)^3*(3*k^3*l + 6*k^2*l^2 + 3*k*l^3 + 7*k^3 + 37*k^2*l + 32*k*l^2"
        " + 2*l^3 + 52*k^2 + 106*k*l + 21*l^2 + 109*k + 64*l + 60)",
        // c2
        "(l+1)^2*(k+1)*(15*k^3*l^2 + 30*k^2*l^3 + 15*k*l^4 + 46*k^3*l + 208*k^2*l^2"
        " + 173*k*l^3 + 11*l^4 + 35*k^3 + 426*k^2*l + 677*k*l^2 + 121*l^3 + 272*k^2"
        " + 1074*k*l + 442*l^2 + 599*k + 662*l + 354)",
        // c3
        "4*(l+1)^2*(k+1)^2*(5*k^3*l + 10*k^2*l^2 + 5*k*l^3 + 6*k^3 + 53*k^2*l"
        " + 53*k*l^2 + 6*l^3 + 51*k^2 + 157*k*l + 51*l^2 + 125*k + 125*l + 88)",
        // c4
        "(l+1)*(k+1)^2*(15*k^4*l + 30*k^3*l^2 + 15*k^2*l^3 + 11*k^4 + 173*k^3*l"
        " + 208*k^2*l^2 + 46*k*l^3 + 121*k^3 + 677*k^2*l + 426*k*l^2 + 35*l^3"
        " + 442*k^2 + 1074*k*l + 272*l^2 + 662*k + 599*l + 354)",
        // c5
        "2*(k+2)*(k+1)^3*(3*k^3*l + 6*k^2*l^2 + 3*k*l^3 + 2*k^3 + 32*k^2*l + 37*k*l^2"
        " + 7*l^3 + 21*k^2 + 106*k*l + 52*l^2 + 64*k + 109*l + 60)",
        // c6
        "(k+2)*(k+1)^3*(k^4 + 2*k^3*l + k^2*l^2 + 12*k^3 + 17*k^2*l + 5*k*l^2"
        " + 49*k^2 + 43*k*l + 5*l^2 + 82*k + 32*l + 47)",
    };
    return exprs;
}

}  // namespace symineq
