#include "ssp3/invariants.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ssp3/errors.hpp"
#include "ssp3/verify.hpp"

namespace ssp {

namespace {

// ---- binary forms: a[k] is the coefficient of s^(n-k) t^k ----

struct Bin {
    int n = 0;
    std::vector<Fe> a;
};

Bin bin_ds(const Fq& F, const Bin& f) {
    Bin out;
    out.n = f.n - 1;
    out.a.assign(f.n, F.zero());
    for (int k = 0; k < f.n; ++k) out.a[k] = F.mul(f.a[k], F.from_int(f.n - k));
    return out;
}

Bin bin_dt(const Fq& F, const Bin& f) {
    Bin out;
    out.n = f.n - 1;
    out.a.assign(f.n, F.zero());
    for (int k = 0; k < f.n; ++k) out.a[k] = F.mul(f.a[k + 1], F.from_int(k + 1));
    return out;
}

Bin bin_mul(const Fq& F, const Bin& f, const Bin& g) {
    Bin out;
    out.n = f.n + g.n;
    out.a.assign(out.n + 1, F.zero());
    for (int i = 0; i <= f.n; ++i)
        for (int j = 0; j <= g.n; ++j)
            out.a[i + j] = F.add(out.a[i + j], F.mul(f.a[i], g.a[j]));
    return out;
}

uint64_t binom_u(int n, int k) {
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// r-th transvectant; the normalizing factor only involves integers <= max(m,n),
// all below p.
Bin transvectant(const Fq& F, const Bin& f, const Bin& g, int r) {
    if (f.n < r || g.n < r) throw std::invalid_argument("transvectant order too high");
    uint64_t fall = 1;
    for (int i = 0; i < r; ++i) fall *= (uint64_t)(f.n - i) * (g.n - i);
    Fe factor = F.inv(F.from_int((int64_t)(fall % F.p())));
    // iterated partials of f: df[k] = d^r f / ds^(r-k) dt^k
    std::vector<Bin> df(r + 1), dg(r + 1);
    {
        Bin base = f;
        for (int i = 0; i < r; ++i) base = bin_ds(F, base);
        df[0] = base;
        for (int k = 1; k <= r; ++k) {
            Bin b = f;
            for (int i = 0; i < r - k; ++i) b = bin_ds(F, b);
            for (int i = 0; i < k; ++i) b = bin_dt(F, b);
            df[k] = b;
        }
        for (int k = 0; k <= r; ++k) {
            Bin b = g;
            for (int i = 0; i < r - k; ++i) b = bin_ds(F, b);
            for (int i = 0; i < k; ++i) b = bin_dt(F, b);
            dg[k] = b;
        }
    }
    Bin out;
    out.n = f.n + g.n - 2 * r;
    out.a.assign(out.n + 1, F.zero());
    for (int k = 0; k <= r; ++k) {
        Fe c = F.from_int((int64_t)(binom_u(r, k) % F.p()));
        if (k & 1) c = F.neg(c);
        Bin term = bin_mul(F, df[r - k], dg[k]);
        for (int i = 0; i <= out.n; ++i)
            out.a[i] = F.add(out.a[i], F.mul(F.mul(c, factor), term.a[i]));
    }
    return out;
}

Fe scalar_of(const Bin& b) { return b.a[0]; }

// Determinant by Gaussian elimination.
Fe det(const Fq& F, std::vector<std::vector<Fe>> M) {
    size_t n = M.size();
    Fe d = F.one();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && F.is_zero(M[piv][col])) ++piv;
        if (piv == n) return F.zero();
        if (piv != col) {
            std::swap(M[piv], M[col]);
            d = F.neg(d);
        }
        d = F.mul(d, M[col][col]);
        Fe invp = F.inv(M[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (F.is_zero(M[r][col])) continue;
            Fe f = F.mul(M[r][col], invp);
            for (size_t c = col; c < n; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[col][c]));
        }
    }
    return d;
}

// Resultant of two binary forms of degrees m and n (Sylvester determinant).
Fe resultant(const Fq& F, const Bin& f, const Bin& g) {
    int m = f.n, n = g.n;
    std::vector<std::vector<Fe>> M(m + n, std::vector<Fe>(m + n, F.zero()));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = f.a[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = g.a[k];
    return det(F, M);
}

// ---- ternary forms: c[i*(d+1)+j] is the coefficient of x^i y^j z^(d-i-j) ----

struct Tri {
    int d = 0;
    std::vector<Fe> c;
    Fe get(int i, int j) const { return c[(size_t)i * (d + 1) + j]; }
    Fe& ref(int i, int j) { return c[(size_t)i * (d + 1) + j]; }
};

Tri tri_zero(const Fq& F, int d) {
    Tri t;
    t.d = d;
    t.c.assign((size_t)(d + 1) * (d + 1), F.zero());
    return t;
}

Tri tri_mul(const Fq& F, const Tri& A, const Tri& B) {
    Tri out = tri_zero(F, A.d + B.d);
    for (int i = 0; i <= A.d; ++i)
        for (int j = 0; i + j <= A.d; ++j) {
            Fe a = A.get(i, j);
            if (F.is_zero(a)) continue;
            for (int k = 0; k <= B.d; ++k)
                for (int l = 0; k + l <= B.d; ++l) {
                    Fe b = B.get(k, l);
                    if (F.is_zero(b)) continue;
                    out.ref(i + k, j + l) = F.add(out.ref(i + k, j + l), F.mul(a, b));
                }
        }
    return out;
}

// Partial derivative along variable v (0 = x, 1 = y, 2 = z).
Tri tri_diff(const Fq& F, const Tri& A, int v) {
    Tri out = tri_zero(F, A.d - 1);
    for (int i = 0; i <= A.d; ++i)
        for (int j = 0; i + j <= A.d; ++j) {
            Fe a = A.get(i, j);
            if (F.is_zero(a)) continue;
            int k = A.d - i - j;
            if (v == 0 && i > 0) out.ref(i - 1, j) = F.add(out.ref(i - 1, j), F.mul(a, F.from_int(i)));
            if (v == 1 && j > 0) out.ref(i, j - 1) = F.add(out.ref(i, j - 1), F.mul(a, F.from_int(j)));
            if (v == 2 && k > 0) out.ref(i, j) = F.add(out.ref(i, j), F.mul(a, F.from_int(k)));
        }
    return out;
}

// Contraction by a contravariant: substitute u_i -> d/dx_i and apply.
Tri apply_D(const Fq& F, const Tri& sig, const Tri& G) {
    if (G.d < sig.d) throw std::invalid_argument("contraction order exceeds form order");
    Tri out = tri_zero(F, G.d - sig.d);
    for (int a = 0; a <= sig.d; ++a)
        for (int b = 0; a + b <= sig.d; ++b) {
            Fe s = sig.get(a, b);
            if (F.is_zero(s)) continue;
            Tri part = G;
            for (int i = 0; i < a; ++i) part = tri_diff(F, part, 0);
            for (int i = 0; i < b; ++i) part = tri_diff(F, part, 1);
            for (int i = 0; i < sig.d - a - b; ++i) part = tri_diff(F, part, 2);
            for (size_t i = 0; i < out.c.size(); ++i)
                out.c[i] = F.add(out.c[i], F.mul(s, part.c[i]));
        }
    return out;
}

Fe tri_scalar(const Tri& A) { return A.c[0]; }

Tri hessian(const Fq& F, const Tri& A) {
    Tri d2[3][3];
    for (int i = 0; i < 3; ++i) {
        Tri di = tri_diff(F, A, i);
        for (int j = 0; j < 3; ++j) d2[i][j] = tri_diff(F, di, j);
    }
    auto mm = [&](int a, int b, int c, int d) {
        return tri_mul(F, d2[a][b], d2[c][d]);
    };
    auto sub = [&](Tri x, const Tri& y) {
        for (size_t i = 0; i < x.c.size(); ++i) x.c[i] = F.sub(x.c[i], y.c[i]);
        return x;
    };
    Tri h = tri_mul(F, d2[0][0], sub(mm(1, 1, 2, 2), mm(1, 2, 1, 2)));
    h = sub(h, tri_mul(F, d2[0][1], sub(mm(0, 1, 2, 2), mm(1, 2, 0, 2))));
    Tri t3 = tri_mul(F, d2[0][2], sub(mm(0, 1, 1, 2), mm(1, 1, 0, 2)));
    for (size_t i = 0; i < h.c.size(); ++i) h.c[i] = F.add(h.c[i], t3.c[i]);
    return h;
}

// Compose with the linear substitution x_i -> sum_j M[i][j] x_j.
Tri tri_subst(const Fq& F, const Tri& A, const std::array<std::array<Fe, 3>, 3>& M) {
    Tri lin[3];
    for (int i = 0; i < 3; ++i) {
        lin[i] = tri_zero(F, 1);
        lin[i].ref(1, 0) = M[i][0];
        lin[i].ref(0, 1) = M[i][1];
        lin[i].ref(0, 0) = M[i][2];
    }
    std::vector<Tri> px(A.d + 1), py(A.d + 1), pz(A.d + 1);
    px[0] = py[0] = pz[0] = tri_zero(F, 0);
    px[0].c[0] = py[0].c[0] = pz[0].c[0] = F.one();
    for (int i = 1; i <= A.d; ++i) {
        px[i] = tri_mul(F, px[i - 1], lin[0]);
        py[i] = tri_mul(F, py[i - 1], lin[1]);
        pz[i] = tri_mul(F, pz[i - 1], lin[2]);
    }
    Tri out = tri_zero(F, A.d);
    for (int i = 0; i <= A.d; ++i)
        for (int j = 0; i + j <= A.d; ++j) {
            Fe a = A.get(i, j);
            if (F.is_zero(a)) continue;
            Tri term = tri_mul(F, tri_mul(F, px[i], py[j]), pz[A.d - i - j]);
            // term has degree A.d
            for (size_t s = 0; s < out.c.size(); ++s)
                out.c[s] = F.add(out.c[s], F.mul(a, term.c[s]));
        }
    return out;
}

Tri quartic_to_tri(const Fq& F, const QuarticModel& q) {
    Tri t = tri_zero(F, 4);
    for (size_t k = 0; k < quartic_monomials.size(); ++k)
        t.ref(quartic_monomials[k][0], quartic_monomials[k][1]) = q.coeffs[k];
    return t;
}

// Restriction of a quartic to the line u: binary quartic in (s, t) with
// coefficients that are degree-4 forms in u (variables u1, u2, u3).
// Parametrization: (x, y, z) = s(-u2, u1, 0) + t(-u3, 0, u1).
std::array<Tri, 5> restrict_to_line(const Fq& F, const Tri& q) {
    std::array<Tri, 5> A;
    for (auto& t : A) t = tri_zero(F, 4);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            Fe cij = q.get(i, j);
            if (F.is_zero(cij)) continue;
            int k = 4 - i - j;
            for (int r = 0; r <= i; ++r) {
                // contributes to coeff of s^(r+j) t^(i-r+k): monomial u1^(j+k) u2^r u3^(i-r)
                Fe val = F.mul(cij, F.from_int((int64_t)binom_u(i, r)));
                if (i & 1) val = F.neg(val);
                int m = i - r + k;   // t-exponent
                A[m].ref(j + k, r) = F.add(A[m].ref(j + k, r), val);
            }
        }
    return A;
}

// Exact division by u1^k (the first exponent slot).
Tri divide_u1(const Fq& F, const Tri& A, int k) {
    Tri out = tri_zero(F, A.d - k);
    for (int i = 0; i <= A.d; ++i)
        for (int j = 0; i + j <= A.d; ++j) {
            Fe a = A.get(i, j);
            if (F.is_zero(a)) continue;
            if (i < k) throw std::logic_error("contravariant transfer not divisible by u1^k");
            out.ref(i - k, j) = a;
        }
    return out;
}

Tri tri_scale(const Fq& F, Tri A, Fe c) {
    for (auto& x : A.c) x = F.mul(x, c);
    return A;
}

Tri tri_add(const Fq& F, Tri A, const Tri& B) {
    for (size_t i = 0; i < A.c.size(); ++i) A.c[i] = F.add(A.c[i], B.c[i]);
    return A;
}

// Contravariants of the quartic by Clebsch transfer of the binary-quartic
// invariants S and T: sigma has class 4 / degree 2, psi class 6 / degree 3.
void contravariants(const Fq& F, const Tri& q, Tri& sigma, Tri& psi) {
    auto A = restrict_to_line(F, q);
    // S = 12 A0 A4 - 3 A1 A3 + A2^2
    Tri S = tri_scale(F, tri_mul(F, A[0], A[4]), F.from_int(12));
    S = tri_add(F, S, tri_scale(F, tri_mul(F, A[1], A[3]), F.from_int(-3)));
    S = tri_add(F, S, tri_mul(F, A[2], A[2]));
    sigma = divide_u1(F, S, 4);
    // T = 72 A0 A2 A4 - 27 A0 A3^2 - 27 A1^2 A4 + 9 A1 A2 A3 - 2 A2^3
    Tri T = tri_scale(F, tri_mul(F, tri_mul(F, A[0], A[2]), A[4]), F.from_int(72));
    T = tri_add(F, T, tri_scale(F, tri_mul(F, A[0], tri_mul(F, A[3], A[3])), F.from_int(-27)));
    T = tri_add(F, T, tri_scale(F, tri_mul(F, tri_mul(F, A[1], A[1]), A[4]), F.from_int(-27)));
    T = tri_add(F, T, tri_scale(F, tri_mul(F, A[1], tri_mul(F, A[2], A[3])), F.from_int(9)));
    T = tri_add(F, T, tri_scale(F, tri_mul(F, tri_mul(F, A[2], A[2]), A[2]), F.from_int(-2)));
    psi = divide_u1(F, T, 6);
}

// Degree-7 monomial basis for the Macaulay matrix of three ternary cubics.
struct Mono7 {
    int e[3];
};

std::vector<Mono7> degree7_monomials() {
    std::vector<Mono7> out;
    for (int i = 7; i >= 0; --i)
        for (int j = 7 - i; j >= 0; --j) out.push_back({{i, j, 7 - i - j}});
    return out;
}

// Macaulay resultant of the three partial derivatives (= discriminant up to a
// constant). Returns zero iff the quartic is singular.
Fe macaulay_disc(const Fq& F, const Tri& q) {
    Tri g[3] = {tri_diff(F, q, 0), tri_diff(F, q, 1), tri_diff(F, q, 2)};
    auto monos = degree7_monomials();
    auto index_of = [&](int a, int b) {
        for (size_t s = 0; s < monos.size(); ++s)
            if (monos[s].e[0] == a && monos[s].e[1] == b) return s;
        throw std::logic_error("monomial index");
    };
    size_t n = monos.size();   // 36
    std::vector<std::vector<Fe>> M(n, std::vector<Fe>(n, F.zero()));
    std::vector<bool> reduced(n, false);
    for (size_t r = 0; r < n; ++r) {
        const auto& m = monos[r];
        int pick = -1, ge3 = 0;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] >= 3) {
                ++ge3;
                if (pick < 0) pick = i;
            }
        }
        reduced[r] = (ge3 == 1);
        // row = (m / x_pick^3) * g[pick]
        int q3[3] = {m.e[0], m.e[1], m.e[2]};
        q3[pick] -= 3;
        const Tri& gi = g[pick];
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                Fe c = gi.get(i, j);
                if (F.is_zero(c)) continue;
                M[r][index_of(q3[0] + i, q3[1] + j)] = c;
            }
    }
    // minor on the non-reduced monomials
    std::vector<size_t> extra;
    for (size_t r = 0; r < n; ++r)
        if (!reduced[r]) extra.push_back(r);
    std::vector<std::vector<Fe>> Mp(extra.size(), std::vector<Fe>(extra.size(), F.zero()));
    for (size_t r = 0; r < extra.size(); ++r)
        for (size_t c = 0; c < extra.size(); ++c) Mp[r][c] = M[extra[r]][extra[c]];
    Fe dp = det(F, Mp);
    if (!F.is_zero(dp)) return F.mul(det(F, M), F.inv(dp));
    // Degenerate minor: retry after a deterministic random change of variables;
    // the resultant picks up det(A)^36.
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<std::array<Fe, 3>, 3> A;
        for (auto& row : A)
            for (auto& x : row) x = F.make(rng() % F.p(), rng() % F.p());
        // det(A)
        Fe dA = F.zero();
        dA = F.add(dA, F.mul(A[0][0], F.sub(F.mul(A[1][1], A[2][2]), F.mul(A[1][2], A[2][1]))));
        dA = F.sub(dA, F.mul(A[0][1], F.sub(F.mul(A[1][0], A[2][2]), F.mul(A[1][2], A[2][0]))));
        dA = F.add(dA, F.mul(A[0][2], F.sub(F.mul(A[1][0], A[2][1]), F.mul(A[1][1], A[2][0]))));
        if (F.is_zero(dA)) continue;
        Tri qa = tri_subst(F, q, A);
        Tri ga[3] = {tri_diff(F, qa, 0), tri_diff(F, qa, 1), tri_diff(F, qa, 2)};
        std::vector<std::vector<Fe>> M2(n, std::vector<Fe>(n, F.zero()));
        for (size_t r = 0; r < n; ++r) {
            const auto& m = monos[r];
            int pick = -1;
            for (int i = 0; i < 3; ++i)
                if (m.e[i] >= 3) { pick = i; break; }
            int q3[3] = {m.e[0], m.e[1], m.e[2]};
            q3[pick] -= 3;
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; i + j <= 3; ++j) {
                    Fe c = ga[pick].get(i, j);
                    if (F.is_zero(c)) continue;
                    M2[r][index_of(q3[0] + i, q3[1] + j)] = c;
                }
        }
        std::vector<std::vector<Fe>> Mp2(extra.size(), std::vector<Fe>(extra.size(), F.zero()));
        for (size_t r = 0; r < extra.size(); ++r)
            for (size_t c = 0; c < extra.size(); ++c) Mp2[r][c] = M2[extra[r]][extra[c]];
        Fe dp2 = det(F, Mp2);
        if (F.is_zero(dp2)) continue;
        Fe res = F.mul(det(F, M2), F.inv(dp2));
        return F.mul(res, F.inv(F.pow(dA, 36)));
    }
    throw std::logic_error("could not regularize the Macaulay minor");
}

} // namespace

std::vector<Fe> homogenized_rhs(const Fq& F, const HyperellipticModel& m) {
    std::vector<Fe> f = hyperelliptic_rhs(F, m);   // lowest degree first
    int N = 2 * m.g + 2;
    std::vector<Fe> out((size_t)N + 1, F.zero());
    for (int k = 0; k <= N; ++k) {
        int d = N - k;
        if (d < (int)f.size()) out[k] = f[d];
    }
    return out;
}

std::vector<Fe> igusa_from_binary(const Fq& F, const std::vector<Fe>& sextic) {
    Bin f{6, sextic};
    Bin i2 = transvectant(F, f, f, 4);                    // degree 2, order 4
    Fe A = scalar_of(transvectant(F, f, f, 6));
    Fe B = scalar_of(transvectant(F, i2, i2, 4));
    Fe C = scalar_of(transvectant(F, transvectant(F, i2, i2, 2), i2, 4));
    Fe D = F.sub(F.mul(A, C), F.sqr(B));
    Fe disc = resultant(F, bin_ds(F, f), bin_dt(F, f));
    return {A, B, C, D, disc};
}

std::vector<Fe> igusa(const Fq& F, const HyperellipticModel& m) {
    if (m.g != 2) throw std::invalid_argument("igusa needs a genus-2 model");
    return igusa_from_binary(F, homogenized_rhs(F, m));
}

std::vector<Fe> shioda_from_binary(const Fq& F, const std::vector<Fe>& octic) {
    Bin f{8, octic};
    Bin g = transvectant(F, f, f, 4);
    Bin h = transvectant(F, f, g, 4);
    Bin k = transvectant(F, f, h, 4);
    Bin mm = transvectant(F, f, k, 4);
    Bin nn = transvectant(F, f, mm, 4);
    Bin pp = transvectant(F, f, nn, 4);
    Bin qq = transvectant(F, f, pp, 4);
    return {
        scalar_of(transvectant(F, f, f, 8)),
        scalar_of(transvectant(F, f, g, 8)),
        scalar_of(transvectant(F, g, g, 8)),
        scalar_of(transvectant(F, g, h, 8)),
        scalar_of(transvectant(F, g, k, 8)),
        scalar_of(transvectant(F, g, mm, 8)),
        scalar_of(transvectant(F, g, nn, 8)),
        scalar_of(transvectant(F, g, pp, 8)),
        scalar_of(transvectant(F, g, qq, 8)),
    };
}

std::vector<Fe> shioda(const Fq& F, const HyperellipticModel& m) {
    if (m.g != 3) throw std::invalid_argument("shioda needs a genus-3 model");
    return shioda_from_binary(F, homogenized_rhs(F, m));
}

std::vector<Fe> dixmier_ohno(const Fq& F, const QuarticModel& q) {
    Tri f = quartic_to_tri(F, q);
    Tri sigma, psi;
    contravariants(F, f, sigma, psi);
    Tri H = hessian(F, f);
    Tri FH = tri_mul(F, f, H);
    Tri H2 = tri_mul(F, H, H);
    Tri FH2 = tri_mul(F, f, H2);
    Tri H3 = tri_mul(F, H, H2);
    Tri FH3 = tri_mul(F, f, H3);
    auto Ds = [&](const Tri& G) { return apply_D(F, sigma, G); };
    auto Dp = [&](const Tri& G) { return apply_D(F, psi, G); };
    Fe I3 = tri_scalar(Ds(f));
    Fe I6 = tri_scalar(Dp(H));
    Fe I9 = tri_scalar(Ds(Dp(FH)));
    Fe J9 = tri_scalar(Dp(Ds(FH)));
    Fe I12 = tri_scalar(Ds(Ds(Ds(H2))));
    Fe J12 = tri_scalar(Dp(Dp(H2)));
    Fe I15 = tri_scalar(Ds(Ds(Ds(Ds(FH2)))));
    Fe J15 = tri_scalar(Ds(Dp(Dp(FH2))));
    Fe I18 = tri_scalar(Ds(Ds(Ds(Dp(H3)))));
    Fe J18 = tri_scalar(Dp(Ds(Ds(Ds(H3)))));
    Fe I21 = tri_scalar(Ds(Ds(Ds(Ds(Dp(FH3))))));
    Fe J21 = tri_scalar(Dp(Ds(Ds(Ds(Ds(FH3))))));
    Fe I27 = macaulay_disc(F, f);
    return {I3, I6, I9, J9, I12, J12, I15, J15, I18, J18, I21, J21, I27};
}

Fe quartic_discriminant(const Fq& F, const QuarticModel& q) {
    return macaulay_disc(F, quartic_to_tri(F, q));
}

namespace {

// x^e with a possibly negative exponent.
Fe pow_signed(const Fq& F, const Fe& x, long long e) {
    if (e >= 0) return F.pow(x, (uint64_t)e);
    return F.inv(F.pow(x, (uint64_t)(-e)));
}

// g = gcd(a, b) with g = xa + yb.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1, g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

std::string fingerprint(const Fq& F, const std::vector<Fe>& values, const std::vector<int>& weights) {
    if (values.size() != weights.size()) throw std::invalid_argument("fingerprint size mismatch");
    // The tuple is defined up to v_i -> nu^{w_i} v_i with nu in the algebraic
    // closure (any field value of the normalized entries stays in F_{p^2}).
    // Canonical form: with g = gcd of the weights at nonzero entries and
    // u = prod v_i^{a_i} for a Bezout combination sum a_i w_i = g, the tuple
    // v_i * u^{-w_i/g} is a complete invariant: u scales by nu^g, and the
    // leftover mu_g ambiguity acts by g-th roots of unity raised to w_i, which
    // is trivial since g divides every w_i.
    bool any = false;
    long long g = 0;
    Fe u = F.one();
    for (size_t i = 0; i < values.size(); ++i) {
        if (F.is_zero(values[i])) continue;
        any = true;
        long long x, y;
        long long g2 = ext_gcd(g, weights[i], x, y);
        u = F.mul(pow_signed(F, u, x), pow_signed(F, values[i], y));
        g = g2;
    }
    if (!any) return "zero";
    std::ostringstream os;
    Fe ui = F.inv(u);
    for (size_t i = 0; i < values.size(); ++i) {
        Fe t = F.mul(values[i], pow_signed(F, ui, weights[i] / g));
        if (i) os << ':';
        os << t.c0 << '.' << t.c1;
    }
    return os.str();
}

} // namespace ssp
