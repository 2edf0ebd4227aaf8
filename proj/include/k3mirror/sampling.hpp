#pragma once

// Seeded random generators for exact test data: rational tube points,
// anti-symplectic maps, fibre censuses and rational points of S² × S¹.

#include <cstdint>
#include <random>

#include "k3mirror/census.hpp"
#include "k3mirror/involution.hpp"
#include "k3mirror/period.hpp"

namespace k3mirror {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin(double p_true = 0.5);
    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(long bound);
    /// Same, but nonzero.
    Rational nonzero_rational(long bound);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// M = first hyperbolic plane of the K3 lattice, T = M⊥, and the m = 1 split
/// of T along the second hyperbolic plane.
struct StandardSetup {
    IntegerLattice lattice;
    Sublattice polarization;
    MirrorSplit split;
};

StandardSetup standard_setup();

/// ±1 diagonal involution: +1 on the first `invariant` coordinates.
LatticeInvolution block_involution(IntegerLattice const& lattice, std::size_t invariant);

/// B + iω with B, ω ∈ s ⊗ Q, ω² > 0. Coefficients in the basis of s have
/// numerators and denominators bounded by `bound`; each coefficient is zero
/// with probability `sparsity`.
TubePoint random_tube_point(Sampler& rng, Sublattice const& s, long bound, double sparsity = 0.5);

/// Replaces B by its component orthogonal to ω, so that B·ω = 0.
TubePoint make_primed(TubePoint p);

struct AntiSymplecticSample {
    SymplecticSpace source;
    SymplecticSpace target;
    RatMatrix map;
};

/// Source is the standard form, target a random integral change of basis of
/// it, and the map a random anti-symplectic isomorphism between them.
AntiSymplecticSample random_anti_symplectic(Sampler& rng, std::size_t dim);

/// A valid census: N, N' >= 1 with N + N' <= 14, random k and II count.
FiberCensus random_census(Sampler& rng, long max_n = 8);

/// Rational point of S² × S¹ by stereographic parameters of height <= bound.
BasePoint random_base_point(Sampler& rng, long bound);

} // namespace k3mirror
