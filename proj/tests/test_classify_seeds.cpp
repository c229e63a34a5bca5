#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssp3/classify.hpp"
#include "ssp3/errors.hpp"
#include "ssp3/seeds.hpp"
#include "ssp3/verify.hpp"

using namespace ssp;

TEST_CASE("supersingular j-class counts for small primes") {
    CHECK(supersingular_lambdas(Fq(11)).size() == 2);
    CHECK(supersingular_lambdas(Fq(13)).size() == 1);
    CHECK(supersingular_lambdas(Fq(17)).size() == 2);
    CHECK(supersingular_lambdas(Fq(19)).size() == 2);
}

TEST_CASE("seed lambdas are supersingular per the Cartier-Manin oracle") {
    for (uint64_t p : {11, 13, 17, 19}) {
        Fq F(p);
        for (const auto& s : supersingular_lambdas(F)) {
            CHECK(!F.is_zero(s.lambda));
            CHECK(!(s.lambda == F.one()));
            HyperellipticModel E{1, {s.lambda}};
            auto M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, E));
            CHECK(M.g == 1);
            CHECK(cm_is_zero(F, M));
        }
    }
}

TEST_CASE("exhaustive agreement with the Hasse criterion at p=11") {
    Fq F(11);
    auto roots = hasse_polynomial_roots(F);
    for (uint64_t c0 = 0; c0 < 11; ++c0)
        for (uint64_t c1 = 0; c1 < 11; ++c1) {
            Fe lam{c0, c1};
            if (F.is_zero(lam) || lam == F.one()) continue;
            bool is_root = false;
            for (const Fe& r : roots)
                if (r == lam) is_root = true;
            HyperellipticModel E{1, {lam}};
            auto M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, E));
            CHECK(cm_is_zero(F, M) == is_root);
        }
}

TEST_CASE("elliptic theta layout") {
    Fq F(11);
    for (const auto& s : supersingular_lambdas(F)) {
        const ThetaNull& T = s.theta;
        CHECK(T.g == 1);
        CHECK(F.is_zero(T.v[3]));            // odd index
        CHECK(F.sqr(T.v[0]) == s.lambda);
        CHECK(F.sqr(T.v[1]) == F.sub(s.lambda, F.one()));
        CHECK(T.v[2] == F.one());
    }
}

TEST_CASE("product classification: E x E and E^3") {
    Fq F(11);
    auto seeds = supersingular_lambdas(F);
    ThetaNull pair = product_theta(F, seeds[0].theta, seeds[1].theta);
    VarietyType t2 = vanishing_count(F, pair);
    CHECK(t2.n_van == 1);
    CHECK(t2.kind == Kind::E_x_E);
    ThetaNull triple = product_theta(F, seeds[1].theta, pair);
    VarietyType t3 = vanishing_count(F, triple);
    CHECK(t3.n_van == 9);
    CHECK(t3.kind == Kind::E_x_E_x_E);
}

TEST_CASE("legendre orbit representative properties") {
    Fq F(17);
    for (const auto& s : supersingular_lambdas(F)) {
        CHECK(F.is_square(s.lambda));
        CHECK(F.is_square(F.sub(s.lambda, F.one())));
        CHECK(legendre_j(F, s.lambda) == s.j);
    }
}

TEST_CASE("disallowed vanishing count raises") {
    Fq F(11);
    ThetaNull T;
    T.g = 2;
    T.v.assign(16, F.zero());
    T.v[0] = F.one();   // 9 vanishing even entries for g=2: not allowed
    CHECK_THROWS_AS(vanishing_count(F, T), SingularOrCorrupt);
}
