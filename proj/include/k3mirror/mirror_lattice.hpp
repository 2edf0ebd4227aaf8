#pragma once

// m-admissible isotropic vectors in a transcendental lattice T and the
// mirror lattice M̌ = (ZE)⊥_T / ZE, realised inside T through the embedding
// α ↦ α − (α·E′/m)·E.

#include <cstdint>

#include "k3mirror/lattice.hpp"

namespace k3mirror {

/// A validated m-admissible pair (E, E′) in T. Construct via check_admissible.
struct AdmissiblePair {
    Sublattice transcendental;
    LatticeVector e;
    LatticeVector e_prime;
    long m = 1;
};

struct MirrorSplit {
    AdmissiblePair pair;
    /// span{E, E′} ≅ U(m).
    Sublattice hyperbolic;
    /// i(M̌) ⊂ T, Hermite normal form basis.
    Sublattice mirror;
    /// σ = E′ − E.
    LatticeVector section_class;
};

/// Primitive isotropic vectors of T whose coefficients in the basis of T lie in
/// [−height, height], one representative per ± pair (first nonzero
/// coefficient positive), returned in ambient coordinates. Throws
/// SearchTooLarge when (2·height+1)^rank exceeds max_candidates.
std::vector<LatticeVector> find_isotropic(Sublattice const& t, long height, std::uint64_t max_candidates = 50'000'000);

/// Validates isotropy, E·E′ = m, membership, primitivity and
/// div_T(E) = div_T(E′) = m. Each failure raises its own ErrorKind.
AdmissiblePair check_admissible(Sublattice const& t, LatticeVector const& e, LatticeVector const& e_prime, long m);

/// The embedding α ↦ α − (α·E′/m)E on (ZE)⊥_T. Throws NotInLattice if α ∉ T or
/// α·E ≠ 0.
LatticeVector mirror_embedding(AdmissiblePair const& pair, LatticeVector const& alpha);

/// Builds M̌ and verifies T = P ⊕ M̌ with index 1, both through integer
/// coordinates and through |det P|·|det M̌| = |det T|. Throws SplittingIndex
/// when either check fails.
MirrorSplit construct_mirror(AdmissiblePair const& pair);

} // namespace k3mirror
