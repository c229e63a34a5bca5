#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssp3/errors.hpp"
#include "ssp3/verify.hpp"

using namespace ssp;

// f = x^7 - x
static std::vector<Fe> x7_minus_x(const Fq& F) {
    std::vector<Fe> f(8, F.zero());
    f[7] = F.one();
    f[1] = F.from_int(-1);
    return f;
}

// f = x^7 - 1
static std::vector<Fe> x7_minus_1(const Fq& F) {
    std::vector<Fe> f(8, F.zero());
    f[7] = F.one();
    f[0] = F.from_int(-1);
    return f;
}

TEST_CASE("known hyperelliptic families") {
    Fq F11(11), F13(13);
    CHECK(cm_is_zero(F11, cartier_manin_hyperelliptic(F11, x7_minus_x(F11))));   // 11 = 3 mod 4
    CHECK(cm_is_zero(F13, cartier_manin_hyperelliptic(F13, x7_minus_1(F13))));   // 13 = 6 mod 7
    CHECK(!cm_is_zero(F11, cartier_manin_hyperelliptic(F11, x7_minus_1(F11))));  // negative control
    CHECK(!cm_is_zero(F13, cartier_manin_hyperelliptic(F13, x7_minus_x(F13))));  // 13 = 1 mod 4
    // y^2 = x^8 - 1 superspecial iff p = 7 mod 8; p=23 qualifies
    Fq F23(23);
    std::vector<Fe> f(9, F23.zero());
    f[8] = F23.one();
    f[0] = F23.from_int(-1);
    CHECK(cm_is_zero(F23, cartier_manin_hyperelliptic(F23, f)));
}

TEST_CASE("matrix shape and singular input") {
    Fq F(11);
    auto M = cartier_manin_hyperelliptic(F, x7_minus_x(F));
    CHECK(M.g == 3);
    CHECK(M.entries.size() == 9);
    // x^2(x-1)... not squarefree
    std::vector<Fe> bad(8, F.zero());
    bad[7] = F.one();
    bad[2] = F.from_int(-1);   // x^7 - x^2 = x^2(x^5 - 1)
    CHECK_THROWS_AS(cartier_manin_hyperelliptic(F, bad), NotSmooth);
}

static QuarticModel fermat(const Fq& F) {
    QuarticModel Q;
    for (auto& c : Q.coeffs) c = F.zero();
    Q.coeffs[0] = F.one();    // x^4
    Q.coeffs[10] = F.one();   // y^4
    Q.coeffs[14] = F.one();   // z^4
    return Q;
}

TEST_CASE("Fermat quartic Hasse-Witt matrix") {
    Fq F11(11);
    CHECK(cm_is_zero(F11, hasse_witt_quartic(F11, fermat(F11))));   // 11 = 3 mod 4
    Fq F13(13);
    CHECK(!cm_is_zero(F13, hasse_witt_quartic(F13, fermat(F13))));  // 13 = 1 mod 4
}
