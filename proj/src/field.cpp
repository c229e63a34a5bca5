#include "ssp3/field.hpp"

#include <stdexcept>

namespace ssp {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t Fq::padd(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

uint64_t Fq::psub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

uint64_t Fq::pmul(uint64_t a, uint64_t b) const {
    return (uint64_t)((unsigned __int128)a * b % p_);
}

uint64_t Fq::ppow(uint64_t a, unsigned __int128 e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = pmul(r, a);
        a = pmul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Fq::pinv(uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return ppow(a, p_ - 2);
}

Fq::Fq(uint64_t p) : p_(p) {
    if (p <= 7 || !is_prime_u64(p)) throw std::invalid_argument("p must be a prime > 7");
    // Smallest positive quadratic nonresidue mod p.
    nr_ = 0;
    for (uint64_t n = 2; n < p; ++n) {
        if (ppow(n, (p - 1) / 2) == p - 1) { nr_ = n; break; }
    }
    // p^2 - 1 = 2^s * m, m odd.
    unsigned __int128 q1 = (unsigned __int128)p * p - 1;
    ts_s_ = 0;
    ts_m_ = q1;
    while ((ts_m_ & 1) == 0) { ts_m_ >>= 1; ++ts_s_; }
    // Quadratic nonresidue of F_{p^2}: first element in (c1, c0)-lex order.
    ts_z_ = zero();
    for (uint64_t c1 = 0; c1 < p && is_zero(ts_z_); ++c1) {
        for (uint64_t c0 = (c1 == 0 ? 1u : 0u); c0 < p; ++c0) {
            Fe cand{c0, c1};
            if (!is_square(cand)) { ts_z_ = cand; break; }
        }
    }
    auto r = sqrt(from_int(-1));
    if (!r) throw std::logic_error("-1 must be a square in F_{p^2}");
    i4_ = *r;
}

Fe Fq::from_int(int64_t v) const {
    int64_t m = v % (int64_t)p_;
    if (m < 0) m += (int64_t)p_;
    return {(uint64_t)m, 0};
}

Fe Fq::add(const Fe& a, const Fe& b) const { return {padd(a.c0, b.c0), padd(a.c1, b.c1)}; }
Fe Fq::sub(const Fe& a, const Fe& b) const { return {psub(a.c0, b.c0), psub(a.c1, b.c1)}; }
Fe Fq::neg(const Fe& a) const { return {a.c0 ? p_ - a.c0 : 0, a.c1 ? p_ - a.c1 : 0}; }

Fe Fq::mul(const Fe& a, const Fe& b) const {
    // (a0 + a1 t)(b0 + b1 t) = a0 b0 + nr a1 b1 + (a0 b1 + a1 b0) t
    uint64_t c0 = padd(pmul(a.c0, b.c0), pmul(nr_, pmul(a.c1, b.c1)));
    uint64_t c1 = padd(pmul(a.c0, b.c1), pmul(a.c1, b.c0));
    return {c0, c1};
}

Fe Fq::inv(const Fe& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in F_{p^2}");
    // norm = a0^2 - nr a1^2 in F_p
    uint64_t n = psub(pmul(a.c0, a.c0), pmul(nr_, pmul(a.c1, a.c1)));
    uint64_t ninv = pinv(n);
    return {pmul(a.c0, ninv), a.c1 ? pmul(p_ - a.c1, ninv) : 0};
}

Fe Fq::pow(const Fe& a, unsigned __int128 e) const {
    Fe r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fe Fq::frobenius(const Fe& a) const {
    // t^p = nr^((p-1)/2) t = -t
    return {a.c0, a.c1 ? p_ - a.c1 : 0};
}

bool Fq::is_square(const Fe& a) const {
    if (is_zero(a)) return true;
    unsigned __int128 e = ((unsigned __int128)p_ * p_ - 1) / 2;
    return pow(a, e) == one();
}

std::optional<Fe> Fq::sqrt(const Fe& a) const {
    if (is_zero(a)) return zero();
    if (!is_square(a)) return std::nullopt;
    // Tonelli-Shanks in the cyclic group of order p^2 - 1.
    Fe c = pow(ts_z_, ts_m_);
    Fe x = pow(a, (ts_m_ + 1) / 2);
    Fe u = pow(a, ts_m_);
    unsigned m = ts_s_;
    while (!(u == one())) {
        unsigned i = 0;
        Fe v = u;
        while (!(v == one())) { v = mul(v, v); ++i; }
        Fe b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        u = mul(u, c);
        x = mul(x, b);
    }
    Fe nx = neg(x);
    Fe r = less(x, nx) ? x : nx;
    return r;
}

std::string Fq::to_string(const Fe& a) const {
    return std::to_string(a.c0) + "+" + std::to_string(a.c1) + "*t";
}

} // namespace ssp
