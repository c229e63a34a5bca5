#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ssp3/curves.hpp"
#include "ssp3/invariants.hpp"

using namespace ssp;

static Fe rnd(const Fq& F, std::mt19937_64& rng) { return F.make(rng() % F.p(), rng() % F.p()); }

// f(s,t) -> f(a s + b t, c s + d t) on coefficient lists (s-degree high first).
static std::vector<Fe> bin_subst(const Fq& F, const std::vector<Fe>& f, Fe a, Fe b, Fe c, Fe d) {
    int n = (int)f.size() - 1;
    std::vector<Fe> out(f.size(), F.zero());
    for (int m = 0; m <= n; ++m) {
        if (F.is_zero(f[m])) continue;
        // (a s + b t)^(n-m) * (c s + d t)^m
        std::vector<Fe> poly{F.one()};
        for (int i = 0; i < n - m; ++i) {
            std::vector<Fe> nxt(poly.size() + 1, F.zero());
            for (size_t k = 0; k < poly.size(); ++k) {
                nxt[k] = F.add(nxt[k], F.mul(poly[k], a));
                nxt[k + 1] = F.add(nxt[k + 1], F.mul(poly[k], b));
            }
            poly = nxt;
        }
        for (int i = 0; i < m; ++i) {
            std::vector<Fe> nxt(poly.size() + 1, F.zero());
            for (size_t k = 0; k < poly.size(); ++k) {
                nxt[k] = F.add(nxt[k], F.mul(poly[k], c));
                nxt[k + 1] = F.add(nxt[k + 1], F.mul(poly[k], d));
            }
            poly = nxt;
        }
        for (size_t k = 0; k < poly.size(); ++k)
            out[k] = F.add(out[k], F.mul(f[m], poly[k]));
    }
    return out;
}

// Compose quartic with an invertible 3x3 substitution, in the model's monomial order.
static QuarticModel quartic_subst(const Fq& F, const QuarticModel& q, const std::array<std::array<Fe, 3>, 3>& M) {
    // expand via repeated linear-form products over a dense (ex, ey) grid
    auto mul_lin = [&](const std::vector<std::vector<Fe>>& pcur, int var) {
        std::vector<std::vector<Fe>> nxt(pcur.size() + 1, std::vector<Fe>(pcur.size() + 1, F.zero()));
        for (size_t i = 0; i < pcur.size(); ++i)
            for (size_t j = 0; j + i < pcur.size(); ++j) {
                Fe v = pcur[i][j];
                if (F.is_zero(v)) continue;
                nxt[i + 1][j] = F.add(nxt[i + 1][j], F.mul(v, M[var][0]));
                nxt[i][j + 1] = F.add(nxt[i][j + 1], F.mul(v, M[var][1]));
                nxt[i][j] = F.add(nxt[i][j], F.mul(v, M[var][2]));
            }
        return nxt;
    };
    std::vector<std::vector<Fe>> acc(5, std::vector<Fe>(5, F.zero()));
    for (size_t k = 0; k < quartic_monomials.size(); ++k) {
        if (F.is_zero(q.coeffs[k])) continue;
        std::vector<std::vector<Fe>> term(1, std::vector<Fe>(1, q.coeffs[k]));
        for (int i = 0; i < quartic_monomials[k][0]; ++i) term = mul_lin(term, 0);
        for (int i = 0; i < quartic_monomials[k][1]; ++i) term = mul_lin(term, 1);
        for (int i = 0; i < quartic_monomials[k][2]; ++i) term = mul_lin(term, 2);
        for (size_t i = 0; i < term.size(); ++i)
            for (size_t j = 0; j + i < term.size(); ++j)
                acc[i][j] = F.add(acc[i][j], term[i][j]);
    }
    QuarticModel out;
    for (size_t k = 0; k < quartic_monomials.size(); ++k)
        out.coeffs[k] = acc[quartic_monomials[k][0]][quartic_monomials[k][1]];
    return out;
}

static Fe det3(const Fq& F, const std::array<std::array<Fe, 3>, 3>& A) {
    Fe d = F.mul(A[0][0], F.sub(F.mul(A[1][1], A[2][2]), F.mul(A[1][2], A[2][1])));
    d = F.sub(d, F.mul(A[0][1], F.sub(F.mul(A[1][0], A[2][2]), F.mul(A[1][2], A[2][0]))));
    return F.add(d, F.mul(A[0][2], F.sub(F.mul(A[1][0], A[2][1]), F.mul(A[1][1], A[2][0]))));
}

TEST_CASE("igusa fingerprint is a GL2 and scaling invariant") {
    for (uint64_t p : {11, 17}) {
        Fq F(p);
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Fe> f(7);
            for (auto& x : f) x = rnd(F, rng);
            Fe a = rnd(F, rng), b = rnd(F, rng), c = rnd(F, rng), d = rnd(F, rng);
            if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c)))) continue;
            auto v1 = igusa_from_binary(F, f);
            auto v2 = igusa_from_binary(F, bin_subst(F, f, a, b, c, d));
            CHECK(fingerprint(F, v1, igusa_weights()) == fingerprint(F, v2, igusa_weights()));
            Fe s = rnd(F, rng);
            if (F.is_zero(s)) continue;
            std::vector<Fe> fs = f;
            for (auto& x : fs) x = F.mul(x, s);
            auto v3 = igusa_from_binary(F, fs);
            CHECK(fingerprint(F, v1, igusa_weights()) == fingerprint(F, v3, igusa_weights()));
        }
    }
}

TEST_CASE("shioda fingerprint is a GL2 and scaling invariant") {
    for (uint64_t p : {11, 19}) {
        Fq F(p);
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Fe> f(9);
            for (auto& x : f) x = rnd(F, rng);
            Fe a = rnd(F, rng), b = rnd(F, rng), c = rnd(F, rng), d = rnd(F, rng);
            if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c)))) continue;
            auto v1 = shioda_from_binary(F, f);
            auto v2 = shioda_from_binary(F, bin_subst(F, f, a, b, c, d));
            CHECK(fingerprint(F, v1, shioda_weights()) == fingerprint(F, v2, shioda_weights()));
        }
    }
}

TEST_CASE("dixmier-ohno fingerprint is a GL3 and scaling invariant") {
    for (uint64_t p : {11, 13}) {
        Fq F(p);
        std::mt19937_64 rng(3);
        int done = 0;
        while (done < 40) {
            QuarticModel q;
            for (auto& x : q.coeffs) x = rnd(F, rng);
            std::array<std::array<Fe, 3>, 3> A;
            for (auto& row : A)
                for (auto& x : row) x = rnd(F, rng);
            if (F.is_zero(det3(F, A))) continue;
            auto v1 = dixmier_ohno(F, q);
            auto v2 = dixmier_ohno(F, quartic_subst(F, q, A));
            CHECK(fingerprint(F, v1, dixmier_ohno_weights()) == fingerprint(F, v2, dixmier_ohno_weights()));
            QuarticModel qs = q;
            Fe s = rnd(F, rng);
            if (!F.is_zero(s)) {
                for (auto& x : qs.coeffs) x = F.mul(x, s);
                auto v3 = dixmier_ohno(F, qs);
                CHECK(fingerprint(F, v1, dixmier_ohno_weights()) == fingerprint(F, v3, dixmier_ohno_weights()));
            }
            ++done;
        }
    }
}

TEST_CASE("each invariant is generically nonzero at the working primes") {
    for (uint64_t p : {11, 13, 17, 19, 23}) {
        Fq F(p);
        std::mt19937_64 rng(4);
        std::vector<bool> seen_do(13, false), seen_sh(9, false), seen_ig(5, false);
        for (int trial = 0; trial < 60; ++trial) {
            QuarticModel q;
            for (auto& x : q.coeffs) x = rnd(F, rng);
            auto v = dixmier_ohno(F, q);
            for (size_t i = 0; i < v.size(); ++i)
                if (!F.is_zero(v[i])) seen_do[i] = true;
            std::vector<Fe> oc(9), sx(7);
            for (auto& x : oc) x = rnd(F, rng);
            for (auto& x : sx) x = rnd(F, rng);
            auto vs = shioda_from_binary(F, oc);
            auto vi = igusa_from_binary(F, sx);
            for (size_t i = 0; i < vs.size(); ++i)
                if (!F.is_zero(vs[i])) seen_sh[i] = true;
            for (size_t i = 0; i < vi.size(); ++i)
                if (!F.is_zero(vi[i])) seen_ig[i] = true;
        }
        for (bool b : seen_do) CHECK(b);
        for (bool b : seen_sh) CHECK(b);
        for (bool b : seen_ig) CHECK(b);
    }
}

TEST_CASE("discriminant detects singular quartics") {
    Fq F(11);
    QuarticModel fermat;
    for (auto& x : fermat.coeffs) x = F.zero();
    fermat.coeffs[0] = F.one();
    fermat.coeffs[10] = F.one();
    fermat.coeffs[14] = F.one();
    CHECK(!F.is_zero(quartic_discriminant(F, fermat)));
    QuarticModel sing = fermat;
    sing.coeffs[14] = F.zero();   // x^4 + y^4: singular at (0,0,1)
    CHECK(F.is_zero(quartic_discriminant(F, sing)));
}

TEST_CASE("distinct known families have distinct fingerprints") {
    Fq F(23);   // 23 = 3 mod 4 and 23 = 7 mod 8: both x^7-x and x^8-1 exist
    std::vector<Fe> a = {F.zero(), F.from_int(-1), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.one(), F.zero()};
    // octic coefficient lists, s-degree high first: x^7 - x -> s^7 t - s t^7
    std::vector<Fe> f1(9, F.zero()), f2(9, F.zero());
    f1[1] = F.one();
    f1[7] = F.from_int(-1);
    f2[0] = F.one();
    f2[8] = F.from_int(-1);   // x^8 - 1
    CHECK(fingerprint(F, shioda_from_binary(F, f1), shioda_weights()) !=
          fingerprint(F, shioda_from_binary(F, f2), shioda_weights()));
}
