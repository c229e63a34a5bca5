#include "ssp3/verify.hpp"

#include <stdexcept>

#include "ssp3/errors.hpp"
#include "ssp3/poly.hpp"

namespace ssp {

std::vector<Fe> hyperelliptic_rhs(const Fq& F, const HyperellipticModel& m) {
    Poly f = {F.zero(), F.one()};                       // x
    f = poly::mul(F, f, {F.from_int(-1), F.one()});     // x - 1
    for (const Fe& lam : m.lambdas)
        f = poly::mul(F, f, {F.neg(lam), F.one()});
    return f;
}

bool cm_is_zero(const Fq& F, const CartierManinMatrix& M) {
    for (const Fe& e : M.entries)
        if (!F.is_zero(e)) return false;
    return true;
}

CartierManinMatrix cartier_manin_hyperelliptic(const Fq& F, const std::vector<Fe>& f) {
    Poly fp = f;
    poly::trim(F, fp);
    int d = poly::degree(F, fp);
    if (d < 3 || (d % 2 == 0 && d < 4)) throw NotSmooth("degree too small for a hyperelliptic model");
    int g = (d - 1) / 2;
    if (poly::degree(F, poly::gcd(F, fp, poly::derivative(F, fp))) > 0)
        throw NotSmooth("f is not squarefree");

    uint64_t m = (F.p() - 1) / 2;
    Poly h = {F.one()};
    for (uint64_t k = 0; k < m; ++k) h = poly::mul(F, h, fp);

    CartierManinMatrix M;
    M.g = g;
    M.entries.assign((size_t)g * g, F.zero());
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            uint64_t e = (uint64_t)i * F.p() - (uint64_t)j;
            if (e < h.size()) M.entries[(size_t)(i - 1) * g + (j - 1)] = h[e];
        }
    return M;
}

namespace {

// Sparse homogeneous trivariate polynomial: exponent-keyed coefficient map.
struct TriPoly {
    // key = x-exp * B^2 + y-exp * B + z-exp would overflow for large p; use a flat
    // dense vector indexed by (i,j) with k implied by homogeneity.
    int deg = 0;
    std::vector<Fe> c;   // index i*(deg+1)+j for monomial x^i y^j z^{deg-i-j}

    Fe get(const Fq& F, int i, int j) const {
        if (i < 0 || j < 0 || i + j > deg) return F.zero();
        return c[(size_t)i * (deg + 1) + j];
    }
};

TriPoly tri_mul(const Fq& F, const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    r.deg = a.deg + b.deg;
    r.c.assign((size_t)(r.deg + 1) * (r.deg + 1), F.zero());
    for (int i1 = 0; i1 <= a.deg; ++i1)
        for (int j1 = 0; i1 + j1 <= a.deg; ++j1) {
            Fe x = a.c[(size_t)i1 * (a.deg + 1) + j1];
            if (F.is_zero(x)) continue;
            for (int i2 = 0; i2 <= b.deg; ++i2)
                for (int j2 = 0; i2 + j2 <= b.deg; ++j2) {
                    Fe y = b.c[(size_t)i2 * (b.deg + 1) + j2];
                    if (F.is_zero(y)) continue;
                    size_t idx = (size_t)(i1 + i2) * (r.deg + 1) + (j1 + j2);
                    r.c[idx] = F.add(r.c[idx], F.mul(x, y));
                }
        }
    return r;
}

} // namespace

CartierManinMatrix hasse_witt_quartic(const Fq& F, const QuarticModel& Q) {
    TriPoly f;
    f.deg = 4;
    f.c.assign(25, F.zero());
    for (size_t k = 0; k < 15; ++k) {
        auto [i, j, l] = quartic_monomials[k];
        (void)l;
        f.c[(size_t)i * 5 + j] = Q.coeffs[k];
    }
    TriPoly h;
    h.deg = 0;
    h.c = {F.one()};
    for (uint64_t k = 0; k + 1 < F.p(); ++k) h = tri_mul(F, h, f);

    const int basis[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    CartierManinMatrix M;
    M.g = 3;
    M.entries.assign(9, F.zero());
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int64_t e1 = (int64_t)F.p() * basis[r][0] - basis[c][0];
            int64_t e2 = (int64_t)F.p() * basis[r][1] - basis[c][1];
            M.entries[(size_t)r * 3 + c] = h.get(F, (int)e1, (int)e2);
        }
    return M;
}

} // namespace ssp
