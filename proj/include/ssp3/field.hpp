#ifndef SSP3_FIELD_HPP
#define SSP3_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ssp3/errors.hpp"

namespace ssp {

// Element of F_{p^2} = F_p(t), t^2 = nonresidue, in reduced form (0 <= c0,c1 < p).
struct Fe {
    uint64_t c0 = 0;
    uint64_t c1 = 0;
    bool operator==(const Fe&) const = default;
};

// Arithmetic context for F_p and F_{p^2}, p an odd prime > 7.
// All operations are pure; a constructed Fq can be shared freely across threads.
class Fq {
public:
    explicit Fq(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t nonresidue() const { return nr_; }

    Fe zero() const { return {0, 0}; }
    Fe one() const { return {1, 0}; }
    Fe from_int(int64_t v) const;        // image of an integer in F_p
    Fe make(uint64_t c0, uint64_t c1) const { return {c0 % p_, c1 % p_}; }

    bool is_zero(const Fe& a) const { return a.c0 == 0 && a.c1 == 0; }
    bool in_base_field(const Fe& a) const { return a.c1 == 0; }

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe sqr(const Fe& a) const { return mul(a, a); }
    Fe inv(const Fe& a) const;           // throws on zero
    Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }
    Fe pow(const Fe& a, unsigned __int128 e) const;
    Fe frobenius(const Fe& a) const;     // x -> x^p

    bool is_square(const Fe& a) const;   // true for 0
    // Canonical square root: of the two roots r and -r, the one whose (c1, c0)
    // pair is lexicographically smaller as integers. nullopt if not a square.
    std::optional<Fe> sqrt(const Fe& a) const;
    Fe fourth_root_of_unity() const { return i4_; }

    // Total order on field elements: lexicographic on (c1, c0).
    bool less(const Fe& a, const Fe& b) const {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c0 < b.c0;
    }

    std::string to_string(const Fe& a) const;   // "c0+c1*t"

    // F_p helpers (residues in [0, p)).
    uint64_t padd(uint64_t a, uint64_t b) const;
    uint64_t psub(uint64_t a, uint64_t b) const;
    uint64_t pmul(uint64_t a, uint64_t b) const;
    uint64_t ppow(uint64_t a, unsigned __int128 e) const;
    uint64_t pinv(uint64_t a) const;

private:
    uint64_t p_;
    uint64_t nr_;
    Fe i4_;            // fixed fourth root of unity, i^2 = -1
    Fe ts_z_;          // quadratic nonresidue of F_{p^2} for Tonelli-Shanks
    unsigned ts_s_ = 0;            // p^2 - 1 = 2^s * m with m odd
    unsigned __int128 ts_m_ = 0;
};

bool is_prime_u64(uint64_t n);

} // namespace ssp

#endif
