#ifndef SSP3_CURVES_HPP
#define SSP3_CURVES_HPP

#include <array>
#include <vector>

#include "ssp3/field.hpp"

namespace ssp {

// y^2 = x(x-1) prod (x - lambda_k); 3 lambdas for g=2, 5 for g=3.
struct HyperellipticModel {
    int g = 0;
    std::vector<Fe> lambdas;
};

// Ternary quartic in graded lex order x > y > z: the 15 monomials
// x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3, xy^2z, xyz^2, xz^3,
// y^4, y^3z, y^2z^2, yz^3, z^4.
struct QuarticModel {
    std::array<Fe, 15> coeffs{};
};

// Monomial exponents in the declared order.
inline constexpr std::array<std::array<int, 3>, 15> quartic_monomials = {{
    {4,0,0}, {3,1,0}, {3,0,1}, {2,2,0}, {2,1,1}, {2,0,2},
    {1,3,0}, {1,2,1}, {1,1,2}, {1,0,3},
    {0,4,0}, {0,3,1}, {0,2,2}, {0,1,3}, {0,0,4},
}};

// Coefficient list of x(x-1) prod (x - lambda_k), lowest degree first.
std::vector<Fe> hyperelliptic_rhs(const Fq& F, const HyperellipticModel& m);

} // namespace ssp

#endif
