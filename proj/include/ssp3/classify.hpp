#ifndef SSP3_CLASSIFY_HPP
#define SSP3_CLASSIFY_HPP

#include <string>

#include "ssp3/theta.hpp"

namespace ssp {

enum class Kind {
    PlaneQuartic,     // g=3, n_van = 0
    Hyperelliptic3,   // g=3, n_van = 1
    E_x_Jac2,         // g=3, n_van = 6
    E_x_E_x_E,        // g=3, n_van = 9
    Jacobian2,        // g=2, n_van = 0
    E_x_E,            // g=2, n_van = 1
};

const char* kind_name(Kind k);

struct VarietyType {
    int g;
    int n_van;
    Kind kind;
};

// Exact zero count of vanishing even theta constants plus the type table;
// throws SingularOrCorrupt for counts outside the allowed set.
VarietyType vanishing_count(const Fq& F, const ThetaNull& T);

} // namespace ssp

#endif
