#ifndef SSP3_INVARIANTS_HPP
#define SSP3_INVARIANTS_HPP

#include <string>
#include <vector>

#include "ssp3/curves.hpp"

namespace ssp {

// Genus-2 invariants of the sextic binary form, coefficient-degrees 2,4,6,8,10.
// The last entry is the discriminant (resultant of the partials).
std::vector<Fe> igusa(const Fq& F, const HyperellipticModel& m);
std::vector<Fe> igusa_from_binary(const Fq& F, const std::vector<Fe>& sextic);
inline const std::vector<int>& igusa_weights() {
    static const std::vector<int> w = {2, 4, 6, 8, 10};
    return w;
}

// Genus-3 hyperelliptic invariants of the octic binary form, degrees 2..10.
std::vector<Fe> shioda(const Fq& F, const HyperellipticModel& m);
std::vector<Fe> shioda_from_binary(const Fq& F, const std::vector<Fe>& octic);
inline const std::vector<int>& shioda_weights() {
    static const std::vector<int> w = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    return w;
}

// Ternary-quartic invariants, degrees 3,6,9,9,12,12,15,15,18,18,21,21,27.
// The last entry is the discriminant; zero iff the quartic is singular.
std::vector<Fe> dixmier_ohno(const Fq& F, const QuarticModel& q);
inline const std::vector<int>& dixmier_ohno_weights() {
    static const std::vector<int> w = {3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27};
    return w;
}

Fe quartic_discriminant(const Fq& F, const QuarticModel& q);

// Scale-free key of a weighted invariant tuple: equal for values related by
// v_i -> c^{w_i} v_i, distinct otherwise. Deterministic printable string.
std::string fingerprint(const Fq& F, const std::vector<Fe>& values, const std::vector<int>& weights);

// Octic/sextic homogenization of the defining polynomial, lowest s-degree last:
// coefficient k is that of s^(n-k) t^k.
std::vector<Fe> homogenized_rhs(const Fq& F, const HyperellipticModel& m);

} // namespace ssp

#endif
