#ifndef SSP3_RECONSTRUCT_HPP
#define SSP3_RECONSTRUCT_HPP

#include "ssp3/curves.hpp"
#include "ssp3/theta.hpp"

namespace ssp {

// Genus-3 hyperelliptic model from a null-point with exactly one vanishing even
// entry. Normalizes the vanishing index to 61, then reads off the five branch
// values as degree-0 ratios of squared entries.
HyperellipticModel rosenhain_g3(const Fq& F, const ThetaNull& T);

// Genus-2 model from a Jacobian node (no vanishing even entry).
HyperellipticModel rosenhain_g2(const Fq& F, const ThetaNull& T);

// Plane quartic from a g=3 null-point with no vanishing even entry.
// sign_mask bits 0..2 flip the free square-root choices of a11, a21, a31;
// all eight choices give isomorphic quartics.
QuarticModel weber_quartic(const Fq& F, const ThetaNull& T, unsigned sign_mask = 0);

} // namespace ssp

#endif
