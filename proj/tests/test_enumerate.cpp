#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <random>

#include "ssp3/enumerate.hpp"
#include "ssp3/invariants.hpp"
#include "ssp3/reconstruct.hpp"
#include "ssp3/symplectic.hpp"
#include "ssp3/verify.hpp"

using namespace ssp;

TEST_CASE("genus-2 class counts at small primes") {
    CHECK(enumerate_dim2(Fq(11)).classes.size() == 2);
    CHECK(enumerate_dim2(Fq(13)).classes.size() == 3);
}

TEST_CASE("genus-3 enumeration matches the known counts at p=11 and p=13") {
    {
        Fq F(11);
        Dim3Result r = enumerate_dim3(F);
        CHECK(r.quartics.size() == 10);
        CHECK(r.hyper.size() == 1);
        CHECK(r.lambda1 == 2);
        CHECK(r.lambda2 == 2);
        CHECK(r.edges == 135 * r.nodes);
    }
    {
        Fq F(13);
        Dim3Result r = enumerate_dim3(F);
        CHECK(r.quartics.size() == 18);
        CHECK(r.hyper.size() == 1);
        CHECK(r.lambda1 == 1);
        CHECK(r.lambda2 == 3);
        CHECK(r.edges == 135 * r.nodes);
    }
}

TEST_CASE("closure: reprocessing recorded nodes yields no unseen classes") {
    Fq F(11);
    Dim3Result r = enumerate_dim3(F);
    std::mt19937_64 rng(5);
    const auto& reps = kernel_transforms(3);
    auto known = [&](const std::string& fp) {
        for (const auto& c : r.quartics)
            if (c.fp == fp) return true;
        for (const auto& c : r.hyper)
            if (c.fp == fp) return true;
        return false;
    };
    for (int trial = 0; trial < 5; ++trial) {
        const ThetaNull& T = (rng() & 1) ? r.quartics[rng() % r.quartics.size()].node
                                         : r.hyper[rng() % r.hyper.size()].node;
        for (const auto& M : reps) {
            ThetaNull S = isogeny_step(F, act(F, M, T));
            VarietyType vt = vanishing_count(F, S);
            if (vt.n_van == 0) {
                QuarticModel q = weber_quartic(F, S);
                CHECK(known(fingerprint(F, dixmier_ohno(F, q), dixmier_ohno_weights())));
            } else if (vt.n_van == 1) {
                HyperellipticModel m = rosenhain_g3(F, S);
                CHECK(known(fingerprint(F, shioda(F, m), shioda_weights())));
            }
        }
    }
}

TEST_CASE("thread count does not change results") {
    Fq F(11);
    EnumOptions o1, o4;
    o1.threads = 1;
    o4.threads = 4;
    Dim3Result r1 = enumerate_dim3(F, o1);
    Dim3Result r4 = enumerate_dim3(F, o4);
    REQUIRE(r1.quartics.size() == r4.quartics.size());
    REQUIRE(r1.hyper.size() == r4.hyper.size());
    for (size_t i = 0; i < r1.quartics.size(); ++i) {
        CHECK(r1.quartics[i].fp == r4.quartics[i].fp);
        CHECK(r1.quartics[i].model.coeffs == r4.quartics[i].model.coeffs);
    }
    for (size_t i = 0; i < r1.hyper.size(); ++i) CHECK(r1.hyper[i].fp == r4.hyper[i].fp);
}

TEST_CASE("checkpoint resume reproduces the full run") {
    Fq F(11);
    std::string path = "/tmp/ssp3_ckpt_test.json";
    std::remove(path.c_str());
    EnumOptions partial;
    partial.checkpoint_path = path;
    partial.checkpoint_every = 1;
    partial.stop_at_count = 4;
    enumerate_dim3(F, partial);
    EnumOptions resume;
    resume.checkpoint_path = path;
    Dim3Result r2 = enumerate_dim3(F, resume);
    Dim3Result full = enumerate_dim3(F);
    CHECK(r2.quartics.size() == full.quartics.size());
    CHECK(r2.hyper.size() == full.hyper.size());
    for (size_t i = 0; i < full.quartics.size(); ++i) CHECK(r2.quartics[i].fp == full.quartics[i].fp);
    std::remove(path.c_str());
}

TEST_CASE("find_hyperelliptic known families and random-walk branch") {
    {
        Fq F(11);   // 11 = 3 mod 4 -> x^7 - x
        HyperellipticModel m = find_hyperelliptic(F, 0);
        std::vector<Fe> f(9, F.zero());
        f[1] = F.one();
        f[7] = F.from_int(-1);   // octic form of x^7 - x
        CHECK(fingerprint(F, shioda(F, m), shioda_weights()) ==
              fingerprint(F, shioda_from_binary(F, f), shioda_weights()));
    }
    {
        Fq F(13);   // 13 = 6 mod 7 -> x^7 - 1
        HyperellipticModel m = find_hyperelliptic(F, 0);
        std::vector<Fe> f(9, F.zero());
        f[1] = F.one();
        f[8] = F.from_int(-1);
        CHECK(fingerprint(F, shioda(F, m), shioda_weights()) ==
              fingerprint(F, shioda_from_binary(F, f), shioda_weights()));
    }
    {
        Fq F(17);   // no shortcut family: random walk
        HyperellipticModel m = find_hyperelliptic(F, 1234);
        auto M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, m));
        CHECK(cm_is_zero(F, M));
        // replayable
        HyperellipticModel m2 = find_hyperelliptic(F, 1234);
        CHECK(m.lambdas == m2.lambdas);
    }
}
