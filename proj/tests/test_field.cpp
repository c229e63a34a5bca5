#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ssp3/field.hpp"

using namespace ssp;

TEST_CASE("context construction picks the smallest nonresidue") {
    Fq f11(11);
    CHECK(f11.nonresidue() == 2);   // 2^5 = 32 = 10 = -1 (mod 11)
    Fq f13(13);
    CHECK(f13.nonresidue() == 2);
    Fq f17(17);
    CHECK(f17.nonresidue() == 3);
    CHECK_THROWS(Fq(9));
    CHECK_THROWS(Fq(7));
}

TEST_CASE("basic arithmetic at p=11") {
    Fq f(11);
    Fe a = f.make(3, 2), b = f.make(8, 9);
    CHECK(f.add(a, b) == f.zero());
    CHECK(f.mul(f.one(), a) == a);
    Fe t = f.make(0, 1);
    CHECK(f.mul(t, t) == f.from_int(2));    // t^2 = nonresidue = 2
    CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.sub(a, a) == f.zero());
    CHECK_THROWS(f.inv(f.zero()));
}

TEST_CASE("square roots at p=11") {
    Fq f(11);
    CHECK(*f.sqrt(f.from_int(4)) == f.from_int(2));   // canonical pick of {2, 9}
    CHECK(*f.sqrt(f.from_int(3)) == f.from_int(5));   // 5^2 = 25 = 3
    // -1 is a nonresidue mod 11, so sqrt(-1) lives outside F_p
    Fe r = *f.sqrt(f.from_int(-1));
    CHECK(r.c1 != 0);
    CHECK(f.mul(r, r) == f.from_int(-1));
}

TEST_CASE("fourth root of unity") {
    Fq f13(13);
    CHECK(f13.fourth_root_of_unity() == f13.from_int(5));  // 5^2 = -1 mod 13
    Fq f11(11);
    Fe i = f11.fourth_root_of_unity();
    CHECK(i.c1 != 0);
    CHECK(f11.mul(i, i) == f11.from_int(-1));
    CHECK(f11.pow(i, 4) == f11.one());
}

TEST_CASE("sqrt(x^2) is x or -x for random elements") {
    Fq f(101);
    std::mt19937_64 rng(12345);
    for (int k = 0; k < 1000; ++k) {
        Fe x = f.make(rng() % 101, rng() % 101);
        Fe r = *f.sqrt(f.sqr(x));
        bool ok = (r == x) || (r == f.neg(x));
        CHECK(ok);
    }
}

TEST_CASE("exactly (p^2-1)/2 nonzero squares at p=11") {
    Fq f(11);
    int squares = 0;
    for (uint64_t c0 = 0; c0 < 11; ++c0)
        for (uint64_t c1 = 0; c1 < 11; ++c1) {
            Fe x{c0, c1};
            if (f.is_zero(x)) continue;
            if (f.is_square(x)) {
                ++squares;
                Fe r = *f.sqrt(x);
                CHECK(f.sqr(r) == x);
            } else {
                CHECK(!f.sqrt(x).has_value());
            }
        }
    CHECK(squares == (11 * 11 - 1) / 2);
}

TEST_CASE("Frobenius is an automorphism fixing exactly F_p") {
    Fq f(19);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        Fe x = f.make(rng() % 19, rng() % 19);
        Fe y = f.make(rng() % 19, rng() % 19);
        CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
        CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        CHECK(f.frobenius(x) == f.pow(x, 19));
        CHECK((f.frobenius(x) == x) == f.in_base_field(x));
    }
}
