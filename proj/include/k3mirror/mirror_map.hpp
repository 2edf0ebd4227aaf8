#pragma once

// The K3 mirror map φ : T_M̌ → D_M for a splitting T = P ⊕ M̌, its inverse,
// and the elliptic-curve mirror map B + iω ↦ s_x + (B + iω)s_y.

#include "k3mirror/period.hpp"

namespace k3mirror {

/// Ω = s_x·sx_coeff + τ·s_y with sx_coeff = 1 and Im τ > 0.
struct EllipticPeriod {
    Rational sx_coeff{1};
    ComplexRational tau;
};

/// φ(B̌ + iω̌) = B̌ + E′/m + ((ω̌² − B̌²)/2)E + i(ω̌ − (ω̌·B̌)E).
///
/// The point must lie over M̌ (vectors in M̌ ⊗ Q) and in the tube; otherwise
/// NotInLattice / NotInTube. The result lives over T and satisfies Ω·E = 1.
PeriodVector phi(MirrorSplit const& split, TubePoint const& p);

/// Rescales Ω by a complex rational so that Ω·E = 1, then projects real and
/// imaginary parts onto M̌ along P. Throws NormalizationImpossible when
/// Ω·E = 0 and NotAPeriod when Ω ∉ D_M.
TubePoint phi_inverse(MirrorSplit const& split, PeriodVector const& omega);

/// Ω / (Ω·E). Throws NormalizationImpossible when Ω·E = 0.
PeriodVector normalize_period(MirrorSplit const& split, PeriodVector const& omega);

/// Throws OutOfRange unless omega > 0.
EllipticPeriod elliptic_phi(Rational const& b, Rational const& omega);

} // namespace k3mirror
