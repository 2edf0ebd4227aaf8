#pragma once

// Cohomology classes of the hyperkähler rotation (complex structures I, J, K)
// and phase rotation of the holomorphic 2-form. I, J, K are labels only.

#include <array>

#include "k3mirror/lattice.hpp"

namespace k3mirror {

/// A holomorphic 2-form as a pair of real classes.
struct FormPair {
    RationalVector re;
    RationalVector im;

    friend bool operator==(FormPair const&, FormPair const&) = default;
};

struct RotationRow {
    char label;
    FormPair holomorphic;
    RationalVector kahler;
};

/// Rows I = (ReΩ + iImΩ, ω), J = (ω + iReΩ, ImΩ), K = (ImΩ + iω, ReΩ).
struct RotationTable {
    std::array<RotationRow, 3> rows;

    RotationRow const& row(char label) const;
};

/// c + is with c² + s² = 1 exactly.
class UnitPhase {
public:
    /// Throws NotUnitPhase unless c² + s² = 1.
    UnitPhase(Rational c, Rational s);

    /// (1 − t², 2t) / (1 + t²).
    static UnitPhase from_slope(Rational const& t);

    Rational const& c() const { return c_; }
    Rational const& s() const { return s_; }

    friend UnitPhase operator*(UnitPhase const& a, UnitPhase const& b);

private:
    Rational c_;
    Rational s_;
};

/// Requires (ReΩ)² = (ImΩ)² = ω² > 0 and mutual orthogonality of ReΩ, ImΩ, ω;
/// throws NormalizationFailure naming the first equality that fails.
RotationTable rotation_table(FormPair const& omega, RationalVector const& kahler, IntegerLattice const& lattice);

/// Ω ↦ e^{iθ}Ω.
FormPair phase_rotate(FormPair const& omega, UnitPhase const& theta);

} // namespace k3mirror
