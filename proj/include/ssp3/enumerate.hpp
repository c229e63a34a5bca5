#ifndef SSP3_ENUMERATE_HPP
#define SSP3_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssp3/classify.hpp"
#include "ssp3/curves.hpp"
#include "ssp3/theta.hpp"

namespace ssp {

struct EnumOptions {
    int threads = 1;
    uint64_t stop_at_count = 0;       // stop once #L1 + #L2 reaches this (0 = run to closure)
    std::string checkpoint_path;      // empty = no checkpointing
    uint64_t checkpoint_every = 50;   // nodes between checkpoints
    unsigned sign_mask = 0;           // square-root sign convention for every isogeny step
};

struct QuarticClass {
    std::string fp;
    QuarticModel model;
    ThetaNull node;
};

struct HyperClass {
    std::string fp;
    HyperellipticModel model;
    ThetaNull node;
};

struct Dim2Result {
    std::vector<HyperClass> classes;   // genus-2 Jacobians, sorted by fingerprint
    uint64_t nodes = 0, edges = 0;
};

struct Dim3Result {
    std::vector<QuarticClass> quartics;   // #L1, sorted by fingerprint
    std::vector<HyperClass> hyper;        // #L2, sorted by fingerprint
    uint64_t lambda1 = 0;                 // supersingular elliptic classes
    uint64_t lambda2 = 0;                 // superspecial genus-2 classes
    uint64_t nodes = 0, edges = 0;
    double seconds = 0;
};

// BFS over the 15-regular genus-2 graph from all elliptic product seeds;
// Jacobian classes deduplicated by the genus-2 invariant fingerprint.
Dim2Result enumerate_dim2(const Fq& F, const EnumOptions& opt = {});

// The main 135-regular genus-3 walk, seeded with all product types; quartic
// classes keyed by ternary-quartic fingerprints, hyperelliptic classes by
// octic fingerprints.
Dim3Result enumerate_dim3(const Fq& F, const EnumOptions& opt = {});

// One superspecial genus-3 hyperelliptic curve: known families when the prime
// residue allows, otherwise a replayable random walk. Throws GaveUp past step_cap.
HyperellipticModel find_hyperelliptic(const Fq& F, uint64_t rng_seed, uint64_t step_cap = 1000000);

} // namespace ssp

#endif
