#pragma once

// Integer involutions of a lattice, their (anti-)invariant sublattices, the
// reflection r_P and the mirror involution r_P ∘ ρ; the symplectic transpose
// identity Ψ_W⁻¹ ∘ (φ⁻¹)ᵗ ∘ Ψ_V = −φ; duality of real singular fibres.

#include "k3mirror/mirror_lattice.hpp"

namespace k3mirror {

/// Acts on column coordinate vectors: v ↦ matrix · v.
class LatticeInvolution {
public:
    /// Throws NotInvolution unless matrix² = Id and matrixᵀ·gram·matrix = gram.
    LatticeInvolution(IntegerLattice lattice, IntMatrix matrix);

    IntegerLattice const& lattice() const { return lattice_; }
    IntMatrix const& matrix() const { return matrix_; }

private:
    IntegerLattice lattice_;
    IntMatrix matrix_;
};

struct InvariantSplit {
    Sublattice plus;
    Sublattice minus;
};

InvariantSplit invariant_sublattices(LatticeInvolution const& rho);

/// Id on P, −Id on P⊥, as an integer matrix. Throws NonIntegralReflection if
/// the extension to the ambient lattice is not integral.
IntMatrix reflection_matrix(Sublattice const& p);

/// r_P ∘ ρ. Requires m = 1 and minus(ρ) = T of the split.
LatticeInvolution mirror_involution(LatticeInvolution const& rho, MirrorSplit const& split);

class SymplecticSpace {
public:
    /// Throws NotSymplectic unless form is even-dimensional, skew and invertible.
    explicit SymplecticSpace(RatMatrix form);

    /// Block sum of [[0,1],[−1,0]].
    static SymplecticSpace standard(std::size_t dim);

    std::size_t dim() const { return form_.rows(); }
    RatMatrix const& form() const { return form_; }

private:
    RatMatrix form_;
};

/// Ψ_W⁻¹·(φ⁻¹)ᵀ·Ψ_V + φ, where Ψ(v) = ω(v, ·). The zero matrix certifies the
/// identity. Throws NotAntiSymplectic unless φᵀ·ω_W·φ = −ω_V.
RatMatrix transpose_defect(SymplecticSpace const& v, SymplecticSpace const& w, RatMatrix const& phi);

enum class RealFiberType { FigureEight, CirclePoint, SingularCircle, SmoothOneCircle, SmoothTwoCircles };

std::string_view to_string(RealFiberType t);
std::optional<RealFiberType> parse_real_fiber_type(std::string_view name);

/// figure eight ↔ circle plus point; singular circle fixed. Throws
/// SmoothFiberType for the smooth types.
RealFiberType real_fiber_dual(RealFiberType t);

} // namespace k3mirror
