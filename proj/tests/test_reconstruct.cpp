#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ssp3/classify.hpp"
#include "ssp3/errors.hpp"
#include "ssp3/reconstruct.hpp"
#include "ssp3/seeds.hpp"
#include "ssp3/symplectic.hpp"
#include "ssp3/verify.hpp"

using namespace ssp;

// Walk outward from a product seed and collect nodes with the requested
// vanishing count.
static std::vector<ThetaNull> collect_nodes(const Fq& F, int g, int want_nvan, size_t limit) {
    auto seeds = supersingular_lambdas(F);
    ThetaNull start;
    if (g == 2) {
        start = product_theta(F, seeds[0].theta, seeds.back().theta);
    } else {
        ThetaNull pair = product_theta(F, seeds[0].theta, seeds.back().theta);
        start = product_theta(F, seeds[0].theta, pair);
    }
    // Seeded random walk; rare node types need many steps.
    std::mt19937_64 rng(42);
    const auto& reps = kernel_transforms(g);
    std::vector<ThetaNull> out;
    ThetaNull cur = start;
    for (int step = 0; step < 5000 && out.size() < limit; ++step) {
        cur = isogeny_step(F, act(F, reps[rng() % reps.size()], cur));
        if (vanishing_count(F, cur).n_van == want_nvan) out.push_back(cur);
    }
    return out;
}

TEST_CASE("rosenhain_g3 outputs superspecial curves per the Cartier-Manin oracle") {
    for (uint64_t p : {11, 13}) {
        Fq F(p);
        auto nodes = collect_nodes(F, 3, 1, 6);
        REQUIRE(!nodes.empty());
        for (const ThetaNull& T : nodes) {
            HyperellipticModel m = rosenhain_g3(F, T);
            CHECK(m.lambdas.size() == 5);
            auto M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, m));
            CHECK(cm_is_zero(F, M));
        }
    }
}

TEST_CASE("rosenhain_g3 is invariant under scaling of the squared entries") {
    Fq F(11);
    auto nodes = collect_nodes(F, 3, 1, 2);
    REQUIRE(!nodes.empty());
    Fe c = F.from_int(7);
    for (const ThetaNull& T : nodes) {
        ThetaNull S = T;
        for (auto& x : S.v) x = F.mul(x, c);
        auto m1 = rosenhain_g3(F, T);
        auto m2 = rosenhain_g3(F, S);
        CHECK(m1.lambdas == m2.lambdas);
    }
}

TEST_CASE("rosenhain_g3 rejects wrong node types") {
    Fq F(11);
    auto seeds = supersingular_lambdas(F);
    ThetaNull pair = product_theta(F, seeds[0].theta, seeds[0].theta);
    ThetaNull triple = product_theta(F, seeds[0].theta, pair);   // 9 vanishing
    CHECK_THROWS_AS(rosenhain_g3(F, triple), WrongType);
}

TEST_CASE("weber_quartic outputs have zero Hasse-Witt matrix") {
    for (uint64_t p : {11, 13}) {
        Fq F(p);
        auto nodes = collect_nodes(F, 3, 0, 4);
        REQUIRE(!nodes.empty());
        for (const ThetaNull& T : nodes) {
            QuarticModel Q = weber_quartic(F, T);
            CHECK(cm_is_zero(F, hasse_witt_quartic(F, Q)));
        }
    }
}

TEST_CASE("weber_quartic sign choices all give superspecial quartics") {
    Fq F(11);
    auto nodes = collect_nodes(F, 3, 0, 1);
    REQUIRE(!nodes.empty());
    for (unsigned mask = 0; mask < 8; ++mask) {
        QuarticModel Q = weber_quartic(F, nodes[0], mask);
        CHECK(cm_is_zero(F, hasse_witt_quartic(F, Q)));
    }
}

TEST_CASE("rosenhain_g2 outputs superspecial genus-2 curves") {
    for (uint64_t p : {11, 13}) {
        Fq F(p);
        auto nodes = collect_nodes(F, 2, 0, 6);
        REQUIRE(!nodes.empty());
        for (const ThetaNull& T : nodes) {
            HyperellipticModel m = rosenhain_g2(F, T);
            CHECK(m.lambdas.size() == 3);
            auto M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, m));
            CHECK(cm_is_zero(F, M));
        }
    }
}
