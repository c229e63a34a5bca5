#include "ssp3/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "ssp3/errors.hpp"

namespace ssp {

SymplecticRep sp_identity(int g) {
    SymplecticRep M;
    M.g = g;
    M.m.assign((size_t)4 * g * g, 0);
    for (int i = 0; i < 2 * g; ++i) M.at(i, i) = 1;
    return M;
}

SymplecticRep sp_mul(const SymplecticRep& A, const SymplecticRep& B) {
    int n = 2 * A.g;
    SymplecticRep C;
    C.g = A.g;
    C.m.assign((size_t)n * n, 0);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            int64_t a = A.at(r, k);
            if (!a) continue;
            for (int c = 0; c < n; ++c) C.at(r, c) += a * B.at(k, c);
        }
    return C;
}

SymplecticRep sp_inverse(const SymplecticRep& M) {
    // E = (0 1; -1 0), M^{-1} = -E tM E = (tdelta -tbeta; -tgamma talpha)
    int g = M.g;
    SymplecticRep R;
    R.g = g;
    R.m.assign((size_t)4 * g * g, 0);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            R.at(r, c) = M.delta(c, r);
            R.at(r, c + g) = -M.beta(c, r);
            R.at(r + g, c) = -M.gamma(c, r);
            R.at(r + g, c + g) = M.alpha(c, r);
        }
    return R;
}

bool sp_is_symplectic(const SymplecticRep& M) {
    int g = M.g;
    // alpha tbeta and gamma tdelta symmetric, alpha tdelta - beta tgamma = 1
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            int64_t ab = 0, ba = 0, gd = 0, dg = 0, id = 0;
            for (int k = 0; k < g; ++k) {
                ab += M.alpha(r, k) * M.beta(c, k);
                ba += M.alpha(c, k) * M.beta(r, k);
                gd += M.gamma(r, k) * M.delta(c, k);
                dg += M.gamma(c, k) * M.delta(r, k);
                id += M.alpha(r, k) * M.delta(c, k) - M.beta(r, k) * M.gamma(c, k);
            }
            if (ab != ba || gd != dg || id != (r == c ? 1 : 0)) return false;
        }
    return true;
}

namespace {

// Canonical key of the Lagrangian subspace M.L0 of F_2^{2g}: reduced row echelon
// form of the g columns of (alpha; gamma) mod 2, packed into one integer.
uint64_t lagrangian_key(const SymplecticRep& M) {
    int g = M.g, n = 2 * g;
    std::vector<uint32_t> rows(g, 0);
    for (int j = 0; j < g; ++j) {
        uint32_t v = 0;
        for (int i = 0; i < n; ++i)
            if (M.at(i, j) & 1) v |= 1u << i;
        rows[j] = v;
    }
    // RREF over F_2
    int rank = 0;
    for (int bit = 0; bit < n && rank < g; ++bit) {
        int piv = -1;
        for (int r = rank; r < g; ++r)
            if (rows[r] >> bit & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < g; ++r)
            if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    if (rank != g) throw std::logic_error("Lagrangian image has wrong rank");
    uint64_t key = 0;
    for (int r = 0; r < g; ++r) key |= (uint64_t)rows[r] << (r * n);
    return key;
}

std::vector<SymplecticRep> build_cosets(int g) {
    size_t expect = 1;
    for (int k = 1; k <= g; ++k) expect *= (1u << k) + 1;

    std::vector<SymplecticRep> gens;
    {
        SymplecticRep J = sp_identity(g);
        for (auto& x : J.m) x = 0;
        for (int i = 0; i < g; ++i) {
            J.at(i, i + g) = 1;
            J.at(i + g, i) = -1;
        }
        gens.push_back(J);
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j) {
                SymplecticRep T = sp_identity(g);
                T.at(i, j + g) = 1;
                T.at(j, i + g) = 1;
                if (i == j) T.at(i, i + g) = 1;
                gens.push_back(T);
            }
    }

    std::map<uint64_t, SymplecticRep> found;
    std::deque<SymplecticRep> queue;
    SymplecticRep I = sp_identity(g);
    found.emplace(lagrangian_key(I), I);
    queue.push_back(I);
    while (!queue.empty() && found.size() < expect) {
        SymplecticRep cur = queue.front();
        queue.pop_front();
        for (const auto& G : gens) {
            SymplecticRep nxt = sp_mul(G, cur);
            uint64_t key = lagrangian_key(nxt);
            if (!found.count(key)) {
                found.emplace(key, nxt);
                queue.push_back(nxt);
            }
        }
    }
    if (found.size() != expect) throw std::logic_error("coset generation incomplete");
    std::vector<SymplecticRep> out;
    out.reserve(expect);
    for (auto& [key, rep] : found) out.push_back(std::move(rep));
    return out;
}

} // namespace

const std::vector<SymplecticRep>& coset_reps(int g) {
    if (g != 2 && g != 3) throw std::invalid_argument("coset_reps needs g in {2,3}");
    static const std::vector<SymplecticRep> t2 = build_cosets(2);
    static const std::vector<SymplecticRep> t3 = build_cosets(3);
    return g == 2 ? t2 : t3;
}

const std::vector<SymplecticRep>& kernel_transforms(int g) {
    if (g != 2 && g != 3) throw std::invalid_argument("kernel_transforms needs g in {2,3}");
    static const std::vector<SymplecticRep> t2 = [] {
        std::vector<SymplecticRep> v;
        for (const auto& M : coset_reps(2)) v.push_back(sp_inverse(M));
        return v;
    }();
    static const std::vector<SymplecticRep> t3 = [] {
        std::vector<SymplecticRep> v;
        for (const auto& M : coset_reps(3)) v.push_back(sp_inverse(M));
        return v;
    }();
    return g == 2 ? t2 : t3;
}

bool same_coset(const SymplecticRep& M, const SymplecticRep& N) {
    // Left cosets M Gamma_0(2): these index the isogeny kernels, which are the
    // images M.L0 of the standard Lagrangian under the columns of (alpha; gamma).
    SymplecticRep Q = sp_mul(sp_inverse(N), M);
    for (int r = 0; r < Q.g; ++r)
        for (int c = 0; c < Q.g; ++c)
            if (Q.gamma(r, c) & 1) return false;
    return true;
}

ThetaNull act(const Fq& F, const SymplecticRep& M, const ThetaNull& T) {
    const int g = T.g;
    if (M.g != g) throw std::invalid_argument("genus mismatch in act");
    std::vector<int64_t> diag_ab(g), diag_gd(g);
    for (int r = 0; r < g; ++r) {
        int64_t s1 = 0, s2 = 0;
        for (int c = 0; c < g; ++c) {
            s1 += M.alpha(r, c) * M.beta(r, c);
            s2 += M.gamma(r, c) * M.delta(r, c);
        }
        diag_ab[r] = s1;
        diag_gd[r] = s2;
    }
    Fe i4 = F.fourth_root_of_unity();
    Fe ipow[4] = {F.one(), i4, F.from_int(-1), F.neg(i4)};

    ThetaNull out;
    out.g = g;
    out.v.assign(T.v.size(), F.zero());
    for (unsigned i = 0; i < T.v.size(); ++i) {
        if (!theta_idx::is_even(i, g)) continue;
        unsigned ab = theta_idx::a_bits(i, g), bb = theta_idx::b_bits(i, g);
        std::vector<int64_t> u(g), w(g);
        int64_t k = 0;
        for (int r = 0; r < g; ++r) {
            int64_t ur = 0, wr = 0;
            for (int c = 0; c < g; ++c) {
                int64_t ac = (ab >> c) & 1, bc = (bb >> c) & 1;
                ur += ac * M.delta(r, c) - bc * M.gamma(r, c);
                wr += bc * M.alpha(r, c) - ac * M.beta(r, c);
            }
            u[r] = ur;
            w[r] = wr;
        }
        for (int r = 0; r < g; ++r) {
            k += u[r] * (w[r] + 2 * diag_ab[r]);
            k -= (int64_t)((ab >> r) & 1) * ((bb >> r) & 1);
        }
        unsigned a2 = 0, b2 = 0;
        for (int r = 0; r < g; ++r) {
            if ((u[r] + diag_gd[r]) & 1) a2 |= 1u << r;
            if ((w[r] + diag_ab[r]) & 1) b2 |= 1u << r;
        }
        unsigned j = theta_idx::encode(a2, b2, g);
        out.v[j] = F.mul(ipow[((k % 4) + 4) % 4], T.v[i]);
    }
    check_null_point(F, out);
    normalize(F, out);
    return out;
}

SymplecticRep p_matrix(unsigned i) {
    if (i >= 64 || !theta_idx::is_even(i, 3))
        throw std::invalid_argument("p_matrix needs an even g=3 index");
    int b[3][3] = {{0}}, c[3][3] = {{0}};
    auto setm = [](int (&m)[3][3], std::initializer_list<int> vals) {
        auto it = vals.begin();
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) m[r][col] = *it++;
    };
    switch (i) {
        case 27: setm(b, {1,1,0, 1,1,0, 0,0,0}); setm(c, {1,-1,0, -1,1,0, 0,0,0}); break;
        case 31: setm(b, {1,1,1, 1,1,1, 1,1,1}); setm(c, {1,-1,0, -1,1,0, 0,0,0}); break;
        case 45: setm(b, {1,0,1, 0,0,0, 1,0,1}); setm(c, {1,0,-1, 0,0,0, -1,0,1}); break;
        case 47: setm(b, {1,1,1, 1,1,1, 1,1,1}); setm(c, {1,0,-1, 0,0,0, -1,0,1}); break;
        case 54: setm(b, {0,0,0, 0,1,1, 0,1,1}); setm(c, {0,0,0, 0,1,-1, 0,-1,1}); break;
        case 55: setm(b, {1,1,1, 1,1,1, 1,1,1}); setm(c, {0,0,0, 0,1,-1, 0,-1,1}); break;
        case 59: setm(b, {1,-1,0, -1,1,0, 0,0,0}); setm(c, {1,1,1, 1,1,1, 1,1,1}); break;
        case 61: setm(b, {1,0,-1, 0,0,0, -1,0,1}); setm(c, {1,1,1, 1,1,1, 1,1,1}); break;
        case 62: setm(b, {0,0,0, 0,1,-1, 0,-1,1}); setm(c, {1,1,1, 1,1,1, 1,1,1}); break;
        default:
            for (int r = 0; r < 3; ++r) {
                b[r][r] = (int)(theta_idx::b_bits(i, 3) >> r) & 1;
                c[r][r] = (int)(theta_idx::a_bits(i, 3) >> r) & 1;
            }
    }
    SymplecticRep M = sp_identity(3);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) {
            M.at(r, col + 3) = b[r][col];
            M.at(r + 3, col) = c[r][col];
        }
    return M;
}

ThetaNull normalize_vanishing_to_61(const Fq& F, const ThetaNull& T) {
    if (T.g != 3) throw WrongType("normalize_vanishing_to_61 needs g=3");
    int count = 0;
    unsigned idx = 0;
    for (unsigned i = 0; i < 64; ++i)
        if (theta_idx::is_even(i, 3) && F.is_zero(T.v[i])) { ++count; idx = i; }
    if (count != 1) throw WrongType("null point does not have exactly one vanishing even entry");
    if (idx == 61) {
        ThetaNull out = T;
        normalize(F, out);
        return out;
    }
    SymplecticRep M = sp_mul(p_matrix(61), sp_inverse(p_matrix(idx)));
    ThetaNull out = act(F, M, T);
    if (!F.is_zero(out.v[61])) throw SingularOrCorrupt("vanishing index failed to move to 61");
    return out;
}

} // namespace ssp
