#include "ssp3/classify.hpp"

#include "ssp3/errors.hpp"

namespace ssp {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::PlaneQuartic: return "PlaneQuartic";
        case Kind::Hyperelliptic3: return "Hyperelliptic3";
        case Kind::E_x_Jac2: return "E_x_Jac2";
        case Kind::E_x_E_x_E: return "E_x_E_x_E";
        case Kind::Jacobian2: return "Jacobian2";
        case Kind::E_x_E: return "E_x_E";
    }
    return "?";
}

VarietyType vanishing_count(const Fq& F, const ThetaNull& T) {
    int n = 0;
    for (unsigned i = 0; i < T.v.size(); ++i)
        if (theta_idx::is_even(i, T.g) && F.is_zero(T.v[i])) ++n;
    if (T.g == 3) {
        switch (n) {
            case 0: return {3, 0, Kind::PlaneQuartic};
            case 1: return {3, 1, Kind::Hyperelliptic3};
            case 6: return {3, 6, Kind::E_x_Jac2};
            case 9: return {3, 9, Kind::E_x_E_x_E};
        }
    } else if (T.g == 2) {
        switch (n) {
            case 0: return {2, 0, Kind::Jacobian2};
            case 1: return {2, 1, Kind::E_x_E};
        }
    }
    throw SingularOrCorrupt("vanishing count " + std::to_string(n) +
                            " not allowed for g=" + std::to_string(T.g));
}

} // namespace ssp
