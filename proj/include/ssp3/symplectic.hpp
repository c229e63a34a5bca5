#ifndef SSP3_SYMPLECTIC_HPP
#define SSP3_SYMPLECTIC_HPP

#include <cstdint>
#include <vector>

#include "ssp3/theta.hpp"

namespace ssp {

// Integer symplectic 2g x 2g matrix, row-major. Blocks: M = (alpha beta; gamma delta).
struct SymplecticRep {
    int g = 0;
    std::vector<int64_t> m;   // size (2g)^2

    int64_t at(int r, int c) const { return m[(size_t)r * 2 * g + c]; }
    int64_t& at(int r, int c) { return m[(size_t)r * 2 * g + c]; }
    int64_t alpha(int r, int c) const { return at(r, c); }
    int64_t beta(int r, int c) const { return at(r, c + g); }
    int64_t gamma(int r, int c) const { return at(r + g, c); }
    int64_t delta(int r, int c) const { return at(r + g, c + g); }
};

SymplecticRep sp_identity(int g);
SymplecticRep sp_mul(const SymplecticRep& A, const SymplecticRep& B);
// Exact inverse via M^{-1} = -E tM E.
SymplecticRep sp_inverse(const SymplecticRep& M);
bool sp_is_symplectic(const SymplecticRep& M);

// One representative per coset of Gamma_0(2) in Sp_2g(Z): 15 for g=2, 135 for g=3.
// Deterministic: sorted by the canonical (reduced-echelon) key of the Lagrangian
// subspace of F_2^{2g} the coset corresponds to.
const std::vector<SymplecticRep>& coset_reps(int g);

// True iff M and N lie in the same left coset of Gamma_0(2), i.e. the lower-left
// block of N^{-1} M is even; equivalently they select the same isogeny kernel.
bool same_coset(const SymplecticRep& M, const SymplecticRep& N);

// Inverses of coset_reps, in matching order. Acting with kernel_transforms[i]
// moves the kernel coset_reps[i]*L0 into standard position, so following it
// with the duplication step computes exactly that isogeny; the inverses form a
// complete right-coset system and therefore hit all 15/135 kernels, which the
// left-coset representatives themselves do not.
const std::vector<SymplecticRep>& kernel_transforms(int g);

// Transformation-formula action on a squared theta null-point; output normalized.
ThetaNull act(const Fq& F, const SymplecticRep& M, const ThetaNull& T);

// The P_i matrices (g=3) carrying a vanishing even index 0 to index i.
SymplecticRep p_matrix(unsigned i);

// For a g=3 null-point with exactly one vanishing even entry, move it to index 61.
ThetaNull normalize_vanishing_to_61(const Fq& F, const ThetaNull& T);

} // namespace ssp

#endif
