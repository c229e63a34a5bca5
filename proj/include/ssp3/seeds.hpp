#ifndef SSP3_SEEDS_HPP
#define SSP3_SEEDS_HPP

#include <vector>

#include "ssp3/theta.hpp"

namespace ssp {

// Supersingular member of the Legendre family y^2 = x(x-1)(x-lambda).
struct EllipticSeed {
    Fe lambda;
    Fe j;
    ThetaNull theta;   // g=1 squared null point [sqrt(lambda), sqrt(lambda-1), 1, 0]
};

// All roots of the Hasse polynomial sum C(m,i)^2 x^i, m=(p-1)/2, in F_{p^2}.
std::vector<Fe> hasse_polynomial_roots(const Fq& F);

Fe legendre_j(const Fq& F, const Fe& lam);
std::vector<Fe> legendre_orbit(const Fq& F, const Fe& lam);

// One seed per j-isomorphism class; the lambda representative is the first element
// of its orbit (in the canonical field order) with lambda and lambda-1 both squares.
std::vector<EllipticSeed> supersingular_lambdas(const Fq& F);

ThetaNull elliptic_theta(const Fq& F, const Fe& lambda);

// Null point of a product abelian variety; factor 1 occupies the low characteristic
// coordinates. g1 + g2 must be 2 or 3.
ThetaNull product_theta(const Fq& F, const ThetaNull& A, const ThetaNull& B);

} // namespace ssp

#endif
