#include "ssp3/theta.hpp"

#include "ssp3/errors.hpp"

namespace ssp {

namespace theta_idx {
std::vector<unsigned> even_indices(int g) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < (1u << (2 * g)); ++i)
        if (is_even(i, g)) out.push_back(i);
    return out;
}
} // namespace theta_idx

void check_null_point(const Fq& F, const ThetaNull& T) {
    if (T.g < 1 || T.g > 3 || T.v.size() != (size_t)1 << (2 * T.g))
        throw InvalidNullPoint("bad genus or size");
    bool any = false;
    for (unsigned i = 0; i < T.v.size(); ++i) {
        if (theta_idx::is_even(i, T.g)) {
            if (!F.is_zero(T.v[i])) any = true;
        } else if (!F.is_zero(T.v[i])) {
            throw InvalidNullPoint("nonzero entry at odd index");
        }
    }
    if (!any) throw InvalidNullPoint("all even entries vanish");
}

void normalize(const Fq& F, ThetaNull& T) {
    for (const Fe& x : T.v) {
        if (!F.is_zero(x)) {
            Fe s = F.inv(x);
            for (Fe& y : T.v) y = F.mul(y, s);
            return;
        }
    }
    throw InvalidNullPoint("cannot normalize the zero vector");
}

bool proj_equal(const Fq& F, const ThetaNull& A, const ThetaNull& B) {
    if (A.g != B.g || A.v.size() != B.v.size()) return false;
    ThetaNull a = A, b = B;
    normalize(F, a);
    normalize(F, b);
    return a.v == b.v;
}

std::vector<Fe> recover_fundamental(const Fq& F, const ThetaNull& T, unsigned sign_mask) {
    const int g = T.g;
    if (g != 2 && g != 3) throw InvalidNullPoint("recover_fundamental needs g in {2,3}");
    const unsigned n = 1u << g;
    bool all_nonzero = true, any_nonzero = false;
    for (unsigned j = 0; j < n; ++j) {
        if (F.is_zero(T.v[j])) all_nonzero = false; else any_nonzero = true;
    }
    if (!any_nonzero) throw InvalidNullPoint("all fundamental squares vanish");

    std::vector<Fe> th(n);
    auto root = [&](const Fe& x) {
        auto r = F.sqrt(x);
        if (!r) throw InvalidNullPoint("fundamental square is not a square in F_{p^2}");
        return *r;
    };
    if (g == 3 && all_nonzero) {
        // theta_0..theta_6 by canonical roots, theta_7 pinned by the product relation
        // 2 prod_j theta_j = v0 v1 v2 v3 + v4 v5 v6 v7 - v32 v33 v34 v35.
        for (unsigned j = 0; j < 7; ++j) {
            th[j] = root(T.v[j]);
            if (sign_mask >> j & 1) th[j] = F.neg(th[j]);
        }
        Fe t1 = F.mul(F.mul(T.v[0], T.v[1]), F.mul(T.v[2], T.v[3]));
        Fe t2 = F.mul(F.mul(T.v[4], T.v[5]), F.mul(T.v[6], T.v[7]));
        Fe t3 = F.mul(F.mul(T.v[32], T.v[33]), F.mul(T.v[34], T.v[35]));
        Fe rhs = F.sub(F.add(t1, t2), t3);
        Fe denom = F.from_int(2);
        for (unsigned j = 0; j < 7; ++j) denom = F.mul(denom, th[j]);
        th[7] = F.div(rhs, denom);
    } else {
        // Some fundamental square vanishes (or g=2): every sign choice is
        // equivalent, take canonical roots throughout.
        for (unsigned j = 0; j < n; ++j) {
            th[j] = root(T.v[j]);
            if (sign_mask >> j & 1) th[j] = F.neg(th[j]);
        }
    }
    return th;
}

ThetaNull isogeny_step(const Fq& F, const ThetaNull& T, unsigned sign_mask) {
    const int g = T.g;
    std::vector<Fe> th = recover_fundamental(F, T, sign_mask);
    const unsigned n = 1u << g;
    ThetaNull out;
    out.g = g;
    out.v.assign((size_t)1 << (2 * g), F.zero());
    for (unsigned i = 0; i < out.v.size(); ++i) {
        if (!theta_idx::is_even(i, g)) continue;
        unsigned a = theta_idx::a_bits(i, g), b = theta_idx::b_bits(i, g);
        Fe s = F.zero();
        for (unsigned j = 0; j < n; ++j) {
            Fe term = F.mul(th[j], th[b ^ j]);
            if (__builtin_popcount(a & j) & 1) s = F.sub(s, term);
            else s = F.add(s, term);
        }
        out.v[i] = s;
    }
    check_null_point(F, out);
    normalize(F, out);
    return out;
}

} // namespace ssp
