#pragma once

#include <cstdint>

#include "framedual/dual.hpp"
#include "framedual/frame.hpp"
#include "framedual/random.hpp"

namespace framedual {

/// Random frame with i.i.d. Gaussian entries scaled by 1/sqrt(N), so the
/// frame operator concentrates near the identity and condition numbers stay
/// moderate at benchmark scale.
Frame random_frame(Rng& rng, int dim, int count);

/// Random frame whose surviving columns are confined to a random hyperplane,
/// so the erasure set provably breaks the minimal redundancy condition while
/// the full family still spans.
Frame random_frame_deficient(Rng& rng, int dim, int count, const ErasureSet& e);

/// Random dual of x: Gaussian perturbation with entries scaled by 1/sqrt(N)
/// pushed through the dual parametrization. y must be the canonical dual.
Frame random_dual(Rng& rng, const Frame& x, const Frame& y);

/// Dual crafted so that <z_i, x_i> = 1 at the given index. When i is the
/// first erased index the iterative construction stops at step 1, while the
/// other constructions generically remain solvable for erasure sets of
/// size >= 2 (later indices may be repaired by earlier iteration steps).
Frame dual_with_unit_pairing(Rng& rng, const Frame& x, const Frame& y, int index_one_based);

/// Uniform k-subset of {1, ..., frame_count}.
ErasureSet random_erasure_set(Rng& rng, int frame_count, int k);

struct RandomTriple {
    Frame x;
    Frame z;
    ErasureSet e;
};

/// Mixed population of (frame, dual, erasure) triples covering the whole
/// statement lattice: plain random duals, canonical duals, duals from
/// erasure-supported and orthogonal perturbation classes, duals with a unit
/// pairing that defeats the iteration, frames whose survivors are confined
/// to a hyperplane, and erasure sets too large for the survivors to span.
RandomTriple random_statement_triple(Rng& rng, int max_dim = 24);

} // namespace framedual
