#pragma once

// E₂ pages of the Leray spectral sequences for the K3 fibration S → S², the
// circle fibration A → S¹ and the Borcea–Voisin fibration Y → S³, recorded as
// dimensions with symbolic summand labels; Betti cross-checks; the filtration
// on H³; and the filtration-based Borcea–Voisin mirror period.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3mirror/mirror_map.hpp"

namespace k3mirror {

struct Summand {
    std::string label;
    long rank = 0;
    friend bool operator==(Summand const&, Summand const&) = default;
};

struct TableEntry {
    std::vector<Summand> summands;

    long dim() const;
    std::string label() const;
    friend bool operator==(TableEntry const&, TableEntry const&) = default;
};

/// E₂^{p,q}: p is the base degree, q the fibre degree. Missing entries are 0.
struct SpectralTable {
    std::map<std::pair<int, int>, TableEntry> entries;

    long dim(int p, int q) const;
    TableEntry const* at(int p, int q) const;
    int max_p() const;
    int max_q() const;
    friend bool operator==(SpectralTable const&, SpectralTable const&) = default;
};

/// d_i = dim F_i on Hⁿ, with F_i/F_{i−1} ≅ E₂^{n−i,i}.
struct Filtration {
    int degree = 0;
    std::vector<long> dims;

    std::vector<long> quotients() const;
};

/// Throws OutOfRange unless 1 ≤ r ≤ 20.
SpectralTable k3_table(int rank_m);
SpectralTable elliptic_table();
/// Throws OutOfRange unless 1 ≤ r ≤ 19.
SpectralTable bv_table(int rank_m);

/// (1, 0, r+1, 2(22−r), r+1, 0, 1). Throws OutOfRange unless 1 ≤ r ≤ 19.
std::vector<long> y_betti(int rank_m);
std::vector<long> k3_betti();
std::vector<long> torus_betti();

/// Σ_{p+q=n} dim E₂^{p,q} for n = 0..max_p+max_q.
std::vector<long> antidiagonal_sums(SpectralTable const& t);

/// True iff every antidiagonal sum equals the Betti number of that degree.
bool check_degeneration(SpectralTable const& t, std::vector<long> const& betti);

/// q ↦ max_q − q; for the circle fibration this is the effect of dualizing.
SpectralTable swap_rows(SpectralTable const& t);

Filtration filtration(SpectralTable const& t, int degree);

enum class EllipticClass { Sx, Sy };
std::string_view to_string(EllipticClass c);

/// Element of (P ⊕ M) ⊗ H¹(A) ⊗ C in the basis {E, E′, M[0], …} × {s_x, s_y}.
struct TensorPeriod {
    /// "E", "E'", then "M[i]" for the basis of M.
    std::vector<std::string> labels;
    /// Ambient class of each label.
    std::vector<LatticeVector> classes;
    /// Nonzero coefficients only.
    std::map<std::pair<std::string, EllipticClass>, ComplexRational> components;

    ComplexRational coefficient(std::string const& label, EllipticClass c) const;
};

/// φ̌(B₁ + iω₁) ⊗ φ_A(B₂ + iω₂) with φ̌ the m = 1 mirror map onto P ⊕ M:
/// (B₁ + E′ + ((ω₁² − B₁²)/2)E + i(ω₁ − (ω₁·B₁)E)) ⊗ (s_x + (B₂ + iω₂)s_y).
/// Requires m = 1, M ⟂ T, p1 over M in the tube and ω₂ > 0.
TensorPeriod bv_mirror_period(MirrorSplit const& split, Sublattice const& m, TubePoint const& p1, Rational const& b2,
                              Rational const& omega2);

/// Drops the F₁ = span{E⊗s_x, E⊗s_y} components.
TensorPeriod quotient_by_f1(TensorPeriod const& t);

struct BVInput {
    TubePoint kahler;
    Rational b2;
    Rational omega2;
};

/// Reads (B₁, ω₁) from the M ⊗ s_x block and τ = B₂ + iω₂ from E′⊗s_y / E′⊗s_x,
/// ignoring F₁. Throws NormalizationFailure if E′⊗s_x vanishes.
BVInput recover_bv_input(TensorPeriod const& t, Sublattice const& m);

/// The K3 factor Σ coefficient(l, s_x)·class(l) over `carrier`.
PeriodVector k3_factor(TensorPeriod const& t, Sublattice const& carrier);

/// Factor conditions: the tensor is s_x-part ⊗ (s_x + τ s_y) with Im τ > 0, and
/// the s_x-part lies in the period domain of `carrier`.
bool satisfies_factor_conditions(TensorPeriod const& t, Sublattice const& carrier);

} // namespace k3mirror
