#pragma once

// Singular-fibre census of the special Lagrangian fibration S → S², its
// Euler-characteristic accounting for the Borcea–Voisin threefold over S³,
// and the invariant-polynomial model of the base (S² × S¹)/Z₂.

#include <optional>
#include <vector>

#include "k3mirror/bv.hpp"
#include "k3mirror/involution.hpp"

namespace k3mirror {

enum class Kodaira { I1, II };

std::string_view to_string(Kodaira k);
std::optional<Kodaira> parse_kodaira(std::string_view name);

struct FiberRecord {
    Kodaira kodaira = Kodaira::I1;
    /// Lies over the fixed circle of the induced involution on S².
    bool fixed = false;
    /// Real locus; present iff fixed.
    std::optional<RealFiberType> real;

    friend bool operator==(FiberRecord const&, FiberRecord const&) = default;
};

struct FiberCensus {
    std::vector<FiberRecord> records;
    BVData bv;

    friend bool operator==(FiberCensus const&, FiberCensus const&) = default;
};

struct CensusReport {
    long i1 = 0;
    long ii = 0;
    long fixed_circle_point = 0;
    long fixed_figure_eight = 0;
    long non_fixed = 0;
    /// Extra fixed fibres of each I₁ type beyond 2(N−1) resp. 2(N′−1).
    long k = 0;
};

/// Checks every census invariant; throws CensusInvariant listing each
/// violation by name.
CensusReport validate_census(FiberCensus const& c);

/// −6 for a fixed figure eight, +6 for a fixed circle plus point, 0 otherwise.
int fiber_contribution(FiberRecord const& r);

/// Sum of contributions; throws EulerMismatch unless it equals 12(N − N′).
long total_euler(FiberCensus const& c);

/// Swaps figure eights and circles plus points on fixed I₁ fibres and replaces
/// (N, N′) by (N′, N). Throws NoMirrorFamily when N′ = 0.
FiberCensus dualize_census(FiberCensus const& c);

/// (x, y, z) ∈ S² and (u, v) ∈ S¹ with exact rational coordinates.
class BasePoint {
public:
    /// Throws NotOnBase unless x²+y²+z² = 1 and u²+v² = 1.
    BasePoint(Rational x, Rational y, Rational z, Rational u, Rational v);

    Rational const& x() const { return x_; }
    Rational const& y() const { return y_; }
    Rational const& z() const { return z_; }
    Rational const& u() const { return u_; }
    Rational const& v() const { return v_; }

    /// (x, y, −z, u, −v).
    BasePoint involution_image() const;

private:
    Rational x_, y_, z_, u_, v_;
};

struct BaseImage {
    Rational X, Y, Z, U, V, W;
    friend bool operator==(BaseImage const&, BaseImage const&) = default;
};

/// (x, y, z², u, v², zv).
BaseImage base_embed(BasePoint const& p);

/// X²+Y²+Z = 1, U²+V = 1, W² = ZV, Z ≥ 0, V ≥ 0.
bool on_base_model(BaseImage const& b);

} // namespace k3mirror
