#pragma once

// Exact membership tests for the tube domain T_M, the period domain D_M,
// the discriminant Δ and the primed slices T′_M, D′_M. Only rational points
// are representable.

#include <optional>

#include "k3mirror/mirror_lattice.hpp"

namespace k3mirror {

/// B + iω ∈ M ⊗ C, vectors in ambient coordinates.
struct TubePoint {
    Sublattice lattice;
    RationalVector b;
    RationalVector omega;
};

/// Ω = re + i·im ∈ T ⊗ C, vectors in ambient coordinates.
struct PeriodVector {
    Sublattice lattice;
    RationalVector re;
    RationalVector im;
};

struct DeltaResult {
    bool in_delta = false;
    std::optional<LatticeVector> witness;
};

/// Ω·Ω and Ω·Ω̄ over the ambient form.
ComplexRational self_pairing(PeriodVector const& p);
Rational hermitian_norm(PeriodVector const& p);

bool in_tube(TubePoint const& p);
bool in_period_domain(PeriodVector const& p);

/// Searches for α ∈ T, α ≠ 0, with α·Ω = 0 through the integer kernel of the
/// two rational conditions α·ReΩ = α·ImΩ = 0. Throws NotAPeriod for Ω = 0.
DeltaResult in_delta(PeriodVector const& p);

/// B·ω = 0.
bool in_primed(TubePoint const& p);
/// ImΩ ∈ M̌ ⊗ Q.
bool in_primed(PeriodVector const& p, MirrorSplit const& split);

} // namespace k3mirror
