#ifndef SSP3_THETA_HPP
#define SSP3_THETA_HPP

#include <vector>

#include "ssp3/field.hpp"

namespace ssp {

// Index bookkeeping for theta characteristics. An index i in [0, 4^g) packs the
// characteristic bits as i = b_1 + 2 b_2 + ... + 2^{g-1} b_g + 2^g a_1 + ... (b low, a high).
namespace theta_idx {
inline unsigned b_bits(unsigned i, int g) { return i & ((1u << g) - 1); }
inline unsigned a_bits(unsigned i, int g) { return (i >> g) & ((1u << g) - 1); }
inline unsigned encode(unsigned a, unsigned b, int g) { return (a << g) | b; }
inline bool is_even(unsigned i, int g) {
    return (__builtin_popcount(a_bits(i, g) & b_bits(i, g)) & 1) == 0;
}
// Even indices in increasing order (36 for g=3, 10 for g=2, 3 for g=1).
std::vector<unsigned> even_indices(int g);
} // namespace theta_idx

// Projective vector of 4^g squared theta constants.
struct ThetaNull {
    int g = 0;
    std::vector<Fe> v;   // size 4^g, zero at odd indices
};

// Validates sizes, odd-index vanishing and "not all even entries zero";
// throws InvalidNullPoint on violation.
void check_null_point(const Fq& F, const ThetaNull& T);

// Rescale so the first nonzero entry equals 1.
void normalize(const Fq& F, ThetaNull& T);

bool proj_equal(const Fq& F, const ThetaNull& A, const ThetaNull& B);

// Square roots theta_0..theta_{2^g-1} of the fundamental squared constants
// (Algorithm lines recovering the level-2 data). g in {2,3}. sign_mask flips
// the free root choices; all choices give isomorphic codomains.
std::vector<Fe> recover_fundamental(const Fq& F, const ThetaNull& T, unsigned sign_mask = 0);

// Squared theta null-point of the codomain of the (2,..,2)-isogeny with the
// standard kernel, via the duplication formula; output is normalized.
ThetaNull isogeny_step(const Fq& F, const ThetaNull& T, unsigned sign_mask = 0);

} // namespace ssp

#endif
