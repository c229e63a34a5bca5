#include "ssp3/seeds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "ssp3/errors.hpp"
#include "ssp3/poly.hpp"

namespace ssp {

namespace poly {

void trim(const Fq& F, Poly& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

int degree(const Fq& F, const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (!F.is_zero(a[i])) return i;
    return -1;
}

Poly add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        Fe x = i < a.size() ? a[i] : F.zero();
        Fe y = i < b.size() ? b[i] : F.zero();
        r[i] = F.add(x, y);
    }
    trim(F, r);
    return r;
}

Poly sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        Fe x = i < a.size() ? a[i] : F.zero();
        Fe y = i < b.size() ? b[i] : F.zero();
        r[i] = F.sub(x, y);
    }
    trim(F, r);
    return r;
}

Poly mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

Poly scale(const Fq& F, const Poly& a, const Fe& c) {
    Poly r = a;
    for (Fe& x : r) x = F.mul(x, c);
    trim(F, r);
    return r;
}

Fe eval(const Fq& F, const Poly& a, const Fe& x) {
    Fe r = F.zero();
    for (int i = (int)a.size() - 1; i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly derivative(const Fq& F, const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(a[i], F.from_int((int64_t)i)));
    trim(F, r);
    return r;
}

std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b) {
    int db = degree(F, b);
    if (db < 0) throw std::domain_error("division by zero polynomial");
    Poly r = a;
    trim(F, r);
    int da = degree(F, r);
    if (da < db) return {{}, r};
    Poly q(da - db + 1, F.zero());
    Fe lead_inv = F.inv(b[db]);
    for (int i = da; i >= db; --i) {
        if (F.is_zero(r[i])) continue;
        Fe c = F.mul(r[i], lead_inv);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    trim(F, r);
    trim(F, q);
    return {q, r};
}

Poly mod(const Fq& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly gcd(const Fq& F, Poly a, Poly b) {
    trim(F, a);
    trim(F, b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = degree(F, a);
    if (d >= 0) a = scale(F, a, F.inv(a[d]));
    return a;
}

Poly powmod(const Fq& F, Poly base, unsigned __int128 e, const Poly& modulus) {
    Poly r = {F.one()};
    base = mod(F, base, modulus);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, base), modulus);
        base = mod(F, mul(F, base, base), modulus);
        e >>= 1;
    }
    return r;
}

namespace {
void split_roots(const Fq& F, const Poly& g, std::mt19937_64& rng, std::vector<Fe>& out) {
    int d = poly::degree(F, g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(F.div(g[0], g[1])));
        return;
    }
    unsigned __int128 half = ((unsigned __int128)F.p() * F.p() - 1) / 2;
    for (;;) {
        Poly lin = {F.make(rng() % F.p(), rng() % F.p()), F.one()};
        Poly h = powmod(F, lin, half, g);
        if (!h.empty()) h[0] = F.sub(h[0], F.one());
        Poly g1 = gcd(F, g, h);
        int d1 = degree(F, g1);
        if (d1 > 0 && d1 < d) {
            split_roots(F, g1, rng, out);
            split_roots(F, divmod(F, g, g1).first, rng, out);
            return;
        }
    }
}
} // namespace

std::vector<Fe> roots(const Fq& F, const Poly& a) {
    Poly x = {F.zero(), F.one()};
    unsigned __int128 q = (unsigned __int128)F.p() * F.p();
    Poly xq = powmod(F, x, q, a);
    Poly g = gcd(F, a, sub(F, xq, x));
    std::vector<Fe> out;
    std::mt19937_64 rng(0xc0ffee);   // fixed seed: root order is then canonicalized below
    split_roots(F, g, rng, out);
    std::sort(out.begin(), out.end(), [&](const Fe& u, const Fe& v) { return F.less(u, v); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace poly

std::vector<Fe> hasse_polynomial_roots(const Fq& F) {
    uint64_t m = (F.p() - 1) / 2;
    Poly H(m + 1, F.zero());
    uint64_t binom = 1;
    for (uint64_t i = 0; i <= m; ++i) {
        H[i] = {F.pmul(binom, binom), 0};
        if (i < m)
            binom = F.pmul(F.pmul(binom, (m - i) % F.p()), F.pinv((i + 1) % F.p()));
    }
    return poly::roots(F, H);
}

Fe legendre_j(const Fq& F, const Fe& lam) {
    Fe num = F.add(F.sub(F.sqr(lam), lam), F.one());
    num = F.mul(F.from_int(256), F.mul(num, F.mul(num, num)));
    Fe den = F.mul(F.sqr(lam), F.sqr(F.sub(lam, F.one())));
    return F.div(num, den);
}

std::vector<Fe> legendre_orbit(const Fq& F, const Fe& lam) {
    Fe one = F.one();
    std::vector<Fe> orb = {
        lam,
        F.inv(lam),
        F.sub(one, lam),
        F.inv(F.sub(one, lam)),
        F.div(lam, F.sub(lam, one)),
        F.div(F.sub(lam, one), lam),
    };
    std::sort(orb.begin(), orb.end(), [&](const Fe& u, const Fe& v) { return F.less(u, v); });
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    return orb;
}

std::vector<EllipticSeed> supersingular_lambdas(const Fq& F) {
    std::vector<Fe> all = hasse_polynomial_roots(F);
    std::map<std::pair<uint64_t, uint64_t>, Fe> by_j;   // j -> chosen representative
    for (const Fe& lam : all) {
        Fe j = legendre_j(F, lam);
        auto key = std::make_pair(j.c1, j.c0);
        if (by_j.count(key)) continue;
        Fe rep{};
        bool found = false;
        for (const Fe& cand : legendre_orbit(F, lam)) {
            if (F.is_square(cand) && F.is_square(F.sub(cand, F.one()))) {
                rep = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw SingularOrCorrupt("no orbit representative with sqrt(lambda), sqrt(lambda-1) in F_{p^2}");
        by_j.emplace(key, rep);
    }
    std::vector<EllipticSeed> out;
    for (auto& [key, lam] : by_j) {
        EllipticSeed s;
        s.lambda = lam;
        s.j = Fe{key.second, key.first};
        s.theta = elliptic_theta(F, lam);
        out.push_back(std::move(s));
    }
    return out;
}

ThetaNull elliptic_theta(const Fq& F, const Fe& lambda) {
    auto r0 = F.sqrt(lambda);
    auto r1 = F.sqrt(F.sub(lambda, F.one()));
    if (!r0 || !r1) throw SingularOrCorrupt("elliptic seed needs square lambda and lambda-1");
    ThetaNull T;
    T.g = 1;
    T.v = {*r0, *r1, F.one(), F.zero()};
    check_null_point(F, T);
    return T;
}

ThetaNull product_theta(const Fq& F, const ThetaNull& A, const ThetaNull& B) {
    int g = A.g + B.g;
    if (g < 2 || g > 3) throw std::invalid_argument("product_theta needs g1+g2 in {2,3}");
    ThetaNull out;
    out.g = g;
    out.v.assign((size_t)1 << (2 * g), F.zero());
    for (unsigned i1 = 0; i1 < A.v.size(); ++i1) {
        unsigned a1 = theta_idx::a_bits(i1, A.g), b1 = theta_idx::b_bits(i1, A.g);
        for (unsigned i2 = 0; i2 < B.v.size(); ++i2) {
            unsigned a2 = theta_idx::a_bits(i2, B.g), b2 = theta_idx::b_bits(i2, B.g);
            unsigned a = a1 | (a2 << A.g), b = b1 | (b2 << A.g);
            out.v[theta_idx::encode(a, b, g)] = F.mul(A.v[i1], B.v[i2]);
        }
    }
    check_null_point(F, out);
    normalize(F, out);
    return out;
}

} // namespace ssp
