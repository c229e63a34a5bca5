#include "ssp3/reconstruct.hpp"

#include <array>

#include "ssp3/classify.hpp"
#include "ssp3/errors.hpp"
#include "ssp3/symplectic.hpp"

namespace ssp {

namespace {

Fe ratio(const Fq& F, const ThetaNull& T, unsigned n1, unsigned n2, unsigned d1, unsigned d2) {
    Fe den = F.mul(T.v[d1], T.v[d2]);
    if (F.is_zero(den)) throw MalformedNullPoint("vanishing denominator in branch-value ratio");
    return F.mul(F.mul(T.v[n1], T.v[n2]), F.inv(den));
}

void check_branch_values(const Fq& F, const std::vector<Fe>& lam) {
    for (size_t i = 0; i < lam.size(); ++i) {
        if (F.is_zero(lam[i]) || lam[i] == F.one())
            throw NotSmooth("branch value collides with 0 or 1");
        for (size_t j = 0; j < i; ++j)
            if (lam[i] == lam[j]) throw NotSmooth("repeated branch value");
    }
}

// Solve M x = rhs (3x3) by Gaussian elimination with first-nonzero pivoting.
std::array<Fe, 3> solve3(const Fq& F, std::array<std::array<Fe, 3>, 3> M, std::array<Fe, 3> rhs) {
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!F.is_zero(M[r][col])) { piv = r; break; }
        if (piv < 0) throw DegenerateConfiguration("singular linear system");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        Fe d = F.inv(M[col][col]);
        for (int c = col; c < 3; ++c) M[col][c] = F.mul(M[col][c], d);
        rhs[col] = F.mul(rhs[col], d);
        for (int r = 0; r < 3; ++r) {
            if (r == col || F.is_zero(M[r][col])) continue;
            Fe f = M[r][col];
            for (int c = col; c < 3; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[col][c]));
            rhs[r] = F.sub(rhs[r], F.mul(f, rhs[col]));
        }
    }
    return rhs;
}

} // namespace

HyperellipticModel rosenhain_g3(const Fq& F, const ThetaNull& T) {
    VarietyType t = vanishing_count(F, T);
    if (t.g != 3 || t.n_van != 1) throw WrongType("rosenhain_g3 needs a g=3 node with one vanishing even entry");
    ThetaNull N = normalize_vanishing_to_61(F, T);
    HyperellipticModel m;
    m.g = 3;
    m.lambdas = {
        ratio(F, N, 42, 2, 5, 45),
        ratio(F, N, 42, 3, 4, 45),
        ratio(F, N, 27, 42, 45, 28),
        ratio(F, N, 2, 49, 54, 5),
        ratio(F, N, 3, 0, 7, 4),
    };
    check_branch_values(F, m.lambdas);
    return m;
}

HyperellipticModel rosenhain_g2(const Fq& F, const ThetaNull& T) {
    VarietyType t = vanishing_count(F, T);
    if (t.g != 2 || t.n_van != 0) throw WrongType("rosenhain_g2 needs a g=2 Jacobian node");
    // Index convention fixed by calibration against the Cartier-Manin oracle and
    // the per-prime class counts; see tests.
    HyperellipticModel m;
    m.g = 2;
    m.lambdas = {
        ratio(F, T, 0, 2, 1, 3),
        ratio(F, T, 2, 8, 3, 9),
        ratio(F, T, 0, 8, 1, 9),
    };
    check_branch_values(F, m.lambdas);
    return m;
}

QuarticModel weber_quartic(const Fq& F, const ThetaNull& T, unsigned sign_mask) {
    VarietyType t = vanishing_count(F, T);
    if (t.g != 3 || t.n_van != 0) throw WrongType("weber_quartic needs a g=3 node with no vanishing even entry");
    const std::vector<Fe>& v = T.v;
    auto prod2 = [&](unsigned i, unsigned j) { return F.mul(v[i], v[j]); };
    auto prod4 = [&](unsigned i, unsigned j, unsigned k, unsigned l) {
        return F.mul(F.mul(v[i], v[j]), F.mul(v[k], v[l]));
    };
    auto root = [&](Fe x, bool flip) {
        auto r = F.sqrt(x);
        if (!r) throw DegenerateConfiguration("four-theta product is not a square");
        return flip ? F.neg(*r) : *r;
    };

    // Step 1: square roots of the first-column ratios; each sign is a free choice.
    Fe a11 = root(F.mul(prod2(12, 5), F.inv(prod2(40, 33))), sign_mask & 1);
    Fe a21 = root(F.mul(prod2(27, 5), F.inv(prod2(40, 54))), sign_mask & 2);
    Fe a31 = F.neg(root(F.mul(prod2(27, 12), F.inv(prod2(33, 54))), sign_mask & 4));

    // Step 2: four-theta products carried by the chosen roots.
    Fe P1 = F.mul(a11, prod2(40, 33));           // th5 th12 th33 th40
    Fe P2 = F.mul(a21, prod2(40, 54));           // th5 th27 th40 th54
    Fe P3 = F.mul(F.neg(a31), prod2(33, 54));    // th12 th27 th33 th54

    // Step 3: companion products from the squared eight-product identities.
    Fe half = F.inv(F.from_int(2));
    Fe S1 = F.mul(F.mul(F.sub(F.add(prod4(5, 21, 40, 56), prod4(12, 28, 33, 49)), prod4(0, 16, 45, 61)), half), F.inv(P1));
    Fe S2 = F.mul(F.mul(F.sub(F.add(prod4(5, 28, 40, 49), prod4(2, 27, 47, 54)), prod4(12, 21, 33, 56)), half), F.inv(P2));
    Fe S3 = F.mul(F.mul(F.sub(F.sub(prod4(3, 20, 32, 55), prod4(2, 21, 33, 54)), prod4(12, 27, 47, 56)), half), F.inv(P3));

    // Step 4: the remaining products from the three-term relations.
    Fe Q1 = F.sub(P1, S1);   // th7 th14 th35 th42
    Fe Q2 = F.sub(S2, P2);   // th14 th16 th35 th61
    Fe Q3 = F.sub(S3, P3);   // th7 th16 th42 th61

    // Each product squared must equal the product of the four squared entries.
    struct Chk { Fe val; unsigned i, j, k, l; };
    const Chk checks[] = {
        {P1, 5, 12, 33, 40}, {P2, 5, 27, 40, 54}, {P3, 12, 27, 33, 54},
        {S1, 21, 28, 49, 56}, {S2, 2, 28, 47, 49}, {S3, 2, 21, 47, 56},
        {Q1, 7, 14, 35, 42}, {Q2, 14, 16, 35, 61}, {Q3, 7, 16, 42, 61},
    };
    for (const Chk& c : checks)
        if (!(F.sqr(c.val) == prod4(c.i, c.j, c.k, c.l)))
            throw DegenerateConfiguration("four-theta product consistency check failed");

    // Step 5: remaining a_ij as product over squared pair.
    std::array<std::array<Fe, 3>, 3> a;   // a[i][j] = a_{i+1, j+1}
    a[0][0] = a11;
    a[1][0] = a21;
    a[2][0] = a31;
    a[0][1] = F.mul(S1, F.inv(prod2(49, 56)));
    a[1][1] = F.mul(S2, F.inv(prod2(49, 47)));
    a[2][1] = F.mul(S3, F.inv(prod2(56, 47)));
    a[0][2] = F.mul(Q1, F.inv(prod2(35, 42)));
    a[1][2] = F.mul(Q2, F.inv(prod2(35, 61)));
    a[2][2] = F.mul(Q3, F.inv(prod2(42, 61)));
    for (const auto& row : a)
        for (const Fe& x : row)
            if (F.is_zero(x)) throw DegenerateConfiguration("vanishing a_ij coefficient");

    // Step 6: solve for lambda, then k. Row i of the first system is
    // (1/a_{1,i}, 1/a_{2,i}, 1/a_{3,i}).
    Fe m1 = F.from_int(-1);
    std::array<Fe, 3> ones{m1, m1, m1};
    std::array<std::array<Fe, 3>, 3> B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) B[i][j] = F.inv(a[j][i]);
    std::array<Fe, 3> lam = solve3(F, B, ones);
    std::array<std::array<Fe, 3>, 3> A2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A2[i][j] = F.mul(lam[j], a[j][i]);
    std::array<Fe, 3> kk = solve3(F, A2, ones);
    for (int i = 0; i < 3; ++i) {
        Fe s1 = F.zero(), s2 = F.zero();
        for (int j = 0; j < 3; ++j) {
            s1 = F.add(s1, F.mul(B[i][j], lam[j]));
            s2 = F.add(s2, F.mul(A2[i][j], kk[j]));
        }
        if (!(s1 == m1) || !(s2 == m1))
            throw DegenerateConfiguration("back-substitution of the 3x3 systems failed");
    }

    // Step 7: linear forms xi_j = sum_v u[j][v] * (x,y,z)_v. The 12 scalar
    // equations split by variable into three 3x3 solves against C[i][j] = 1/a_ij
    // plus the sum constraint, whose residual must vanish.
    std::array<std::array<Fe, 3>, 3> C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) C[i][j] = F.inv(a[i][j]);
    std::array<std::array<Fe, 3>, 3> u;   // u[j][v]
    for (int vvar = 0; vvar < 3; ++vvar) {
        std::array<Fe, 3> rhs;
        for (int i = 0; i < 3; ++i) rhs[i] = F.neg(F.mul(kk[i], a[i][vvar]));
        std::array<Fe, 3> col = solve3(F, C, rhs);
        Fe s = F.zero();
        for (int j = 0; j < 3; ++j) {
            u[j][vvar] = col[j];
            s = F.add(s, col[j]);
        }
        if (!(s == m1)) throw DegenerateConfiguration("overdetermined linear-form system is inconsistent");
    }

    // Step 8: expand (xi1 x + xi2 y - xi3 z)^2 - 4 xi1 xi2 x y.
    // Dense trivariate polynomials indexed by (ex, ey) with ez implied by degree.
    auto mul_quad = [&](const std::array<Fe, 3>& f, int vf, const std::array<Fe, 3>& g, int vg,
                        Fe acc[5][5], bool subtract, Fe scale) {
        // (sum_v f_v x_v) * x_vf * (sum_w g_w x_w) * x_vg, accumulated into acc.
        for (int vw = 0; vw < 3; ++vw)
            for (int ww = 0; ww < 3; ++ww) {
                int e[3] = {0, 0, 0};
                ++e[vw];
                ++e[ww];
                ++e[vf];
                ++e[vg];
                Fe term = F.mul(scale, F.mul(f[vw], g[ww]));
                if (subtract) term = F.neg(term);
                acc[e[0]][e[1]] = F.add(acc[e[0]][e[1]], term);
            }
    };
    std::array<Fe, 3> xi1{u[0][0], u[0][1], u[0][2]};
    std::array<Fe, 3> xi2{u[1][0], u[1][1], u[1][2]};
    std::array<Fe, 3> xi3{F.neg(u[2][0]), F.neg(u[2][1]), F.neg(u[2][2])};   // enters with minus sign
    Fe acc[5][5];
    for (auto& r : acc)
        for (auto& c : r) c = F.zero();
    // square of A = xi1*x + xi2*y + (-xi3)*z
    const std::array<Fe, 3>* forms[3] = {&xi1, &xi2, &xi3};
    for (int iq = 0; iq < 3; ++iq)
        for (int jq = 0; jq < 3; ++jq) mul_quad(*forms[iq], iq, *forms[jq], jq, acc, false, F.one());
    // minus 4 * (xi1*x) * (xi2*y)
    mul_quad(xi1, 0, xi2, 1, acc, true, F.from_int(4));

    QuarticModel Q;
    for (size_t k = 0; k < quartic_monomials.size(); ++k)
        Q.coeffs[k] = acc[quartic_monomials[k][0]][quartic_monomials[k][1]];
    return Q;
}

} // namespace ssp
