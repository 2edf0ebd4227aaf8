#pragma once

// Hodge numbers and Euler characteristic of Borcea–Voisin threefolds from the
// fixed-curve data (N, N′) of a non-symplectic K3 involution.

namespace k3mirror {

/// Fixed locus of the K3 involution. Only Generic carries (N, N′): N fixed
/// curves, one of genus N′ and the rest rational.
enum class FixedLocusCase { Generic, Empty, TwoElliptic };

struct BVData {
    long n = 1;
    long n_prime = 0;
    FixedLocusCase fixed_case = FixedLocusCase::Generic;

    /// Throws OutOfRange unless N ≥ 1 and N′ ≥ 0.
    static BVData generic(long n, long n_prime);
    static BVData self_mirror(FixedLocusCase c);

    bool is_self_mirror_case() const { return fixed_case != FixedLocusCase::Generic; }
    friend bool operator==(BVData const&, BVData const&) = default;
};

struct HodgePair {
    long h11 = 0;
    long h21 = 0;
    friend bool operator==(HodgePair const&, HodgePair const&) = default;
};

/// (11 + 5N − N′, 11 + 5N′ − N). Throws NonPositiveHodge if either is ≤ 0,
/// SelfMirrorCase for the empty / two-elliptic cases.
HodgePair hodge_numbers(BVData const& d);

/// 12(N − N′).
long euler_characteristic(BVData const& d);

/// (N′, N). Throws NoMirrorFamily when N′ = 0. The self-mirror cases map to
/// themselves.
BVData mirror_swap(BVData const& d);

} // namespace k3mirror
