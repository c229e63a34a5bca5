#ifndef SSP3_POLY_HPP
#define SSP3_POLY_HPP

#include <vector>

#include "ssp3/field.hpp"

namespace ssp {

// Dense univariate polynomial over F_{p^2}; coefficient k multiplies x^k.
using Poly = std::vector<Fe>;

namespace poly {

void trim(const Fq& F, Poly& a);
int degree(const Fq& F, const Poly& a);   // -1 for the zero polynomial
Poly add(const Fq& F, const Poly& a, const Poly& b);
Poly sub(const Fq& F, const Poly& a, const Poly& b);
Poly mul(const Fq& F, const Poly& a, const Poly& b);
Poly scale(const Fq& F, const Poly& a, const Fe& c);
Fe eval(const Fq& F, const Poly& a, const Fe& x);
Poly derivative(const Fq& F, const Poly& a);
// a = q*b + r with deg r < deg b; returns {q, r}. b must be nonzero.
std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b);
Poly mod(const Fq& F, const Poly& a, const Poly& b);
Poly gcd(const Fq& F, Poly a, Poly b);    // monic
Poly powmod(const Fq& F, Poly base, unsigned __int128 e, const Poly& modulus);
// All roots in F_{p^2}, with multiplicity collapsed; deterministic order.
std::vector<Fe> roots(const Fq& F, const Poly& a);

} // namespace poly
} // namespace ssp

#endif
