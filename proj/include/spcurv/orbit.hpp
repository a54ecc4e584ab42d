#pragma once

#include <cstdint>

#include "spcurv/lie_algebra.hpp"
#include "spcurv/rng.hpp"

namespace spcurv {

// Point of the fundamental domain: the pair of angles naming the SO(3)
// section matrix. Both angles live in [0, pi/2].
struct FundamentalPoint {
    double theta{0.0};
    double alpha{0.0};
};

// Norms of the three segments of the last column of a group element:
// first n-1 entries, second-to-last entry, last entry. A complete invariant
// of the isometry-group action; the squares sum to 1.
struct OrbitInvariants {
    double r0{0.0}, rn{0.0}, rn1{0.0};
};

// The section matrix diag(I_{n-2}, A(theta, alpha)) in Sp(n+1), where
// A(theta, alpha) is the SO(3) matrix
//   [  cos t         0        sin t      ]
//   [ -cos a sin t   sin a    cos a cos t]
//   [ -sin a sin t  -cos a    sin a cos t].
// Throws if either angle is outside [0, pi/2].
GroupElem f_matrix(const SpaceConfig& cfg, const FundamentalPoint& pt);

OrbitInvariants v_segments(const SpaceConfig& cfg, const GroupElem& g);

struct ReducedPoint {
    FundamentalPoint point;
    // Set when cos(theta) = 0 leaves alpha unconstrained; alpha is then 0
    // by convention.
    bool boundary_degenerate{false};
};

// Reduce a pair (g1, g2) to its representative in the fundamental domain:
// theta = arcsin(r0), alpha = atan2(r_{n+1}, r_n) for the invariants of
// g2^{-1} g1.
ReducedPoint reduce_to_f(const SpaceConfig& cfg, const GroupElem& g1,
                         const GroupElem& g2);

// expm of a seeded random anti-Hermitian matrix. Identical seeds give
// identical elements.
GroupElem random_group_element(std::uint64_t seed, int side);

// Random algebra elements, optionally restricted to a subspace pattern.
AlgVec random_alg_vec(Rng& rng, int side);
AlgVec random_alg_vec_in(Rng& rng, const SpaceConfig& cfg, Part part);

// Seeded random elements of the subgroups used by the isometry action.
GroupElem random_k_element(const SpaceConfig& cfg, std::uint64_t seed);
GroupElem random_n_element(const SpaceConfig& cfg, std::uint64_t seed);

}  // namespace spcurv
