#ifndef SSP3_VERIFY_HPP
#define SSP3_VERIFY_HPP

#include <vector>

#include "ssp3/curves.hpp"

namespace ssp {

struct CartierManinMatrix {
    int g = 0;
    std::vector<Fe> entries;   // row-major g x g
};

bool cm_is_zero(const Fq& F, const CartierManinMatrix& M);

// Entry (i,j) = coefficient of x^{ip-j} in f^{(p-1)/2}, 1 <= i,j <= g.
// f is the coefficient list (lowest degree first) of a squarefree polynomial of
// degree 2g+1 or 2g+2; throws NotSmooth otherwise.
CartierManinMatrix cartier_manin_hyperelliptic(const Fq& F, const std::vector<Fe>& f);

// 3x3 Hasse-Witt matrix of a smooth plane quartic: rows/columns indexed by the
// monomial basis x^2yz, xy^2z, xyz^2 of H^1; entry (v,w) is the coefficient of
// x^{p v1 - w1} y^{p v2 - w2} z^{p v3 - w3} in F^{p-1}.
CartierManinMatrix hasse_witt_quartic(const Fq& F, const QuarticModel& Q);

} // namespace ssp

#endif
