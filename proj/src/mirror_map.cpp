#include "k3mirror/mirror_map.hpp"

namespace k3mirror {

PeriodVector phi(MirrorSplit const& split, TubePoint const& p)
{
    auto const& l = split.mirror.ambient();
    if (p.lattice.ambient() != l)
        throw Error(ErrorKind::DimensionMismatch, "tube point and split live in different lattices");
    if (!in_tube(p))
        throw Error(ErrorKind::NotInTube, "ω̌.ω̌ must be positive");
    if (!in_rational_span(split.mirror, p.b) || !in_rational_span(split.mirror, p.omega))
        throw Error(ErrorKind::NotInLattice, "B̌ and ω̌ must lie in M̌ ⊗ Q");

    RationalVector const e = to_rational(split.pair.e);
    RationalVector const e_prime = to_rational(split.pair.e_prime);
    Rational const w2 = pairing(l, p.omega, p.omega);
    Rational const b2 = pairing(l, p.b, p.b);
    Rational const wb = pairing(l, p.omega, p.b);

    RationalVector re = p.b + (Rational(1) / Rational(split.pair.m)) * e_prime;
    re = re + Rational((w2 - b2) / 2) * e;
    RationalVector im = p.omega - wb * e;
    return {split.pair.transcendental, std::move(re), std::move(im)};
}

PeriodVector normalize_period(MirrorSplit const& split, PeriodVector const& omega)
{
    auto const& l = split.mirror.ambient();
    RationalVector const e = to_rational(split.pair.e);
    ComplexRational const scale(pairing(l, omega.re, e), pairing(l, omega.im, e));
    if (scale.is_zero())
        throw Error(ErrorKind::NormalizationImpossible, "Ω.E = 0, so Ω cannot be normalized to Ω.E = 1");
    // Ω / λ = Ω·λ̄ / |λ|².
    Rational const n = scale.norm();
    Rational const a = scale.re / n;
    Rational const b = -scale.im / n;
    RationalVector re = a * omega.re - b * omega.im;
    RationalVector im = b * omega.re + a * omega.im;
    return {omega.lattice, std::move(re), std::move(im)};
}

TubePoint phi_inverse(MirrorSplit const& split, PeriodVector const& omega)
{
    if (omega.lattice.ambient() != split.mirror.ambient())
        throw Error(ErrorKind::DimensionMismatch, "period and split live in different lattices");
    if (omega.re.size() != split.mirror.ambient().rank() || omega.im.size() != split.mirror.ambient().rank())
        throw Error(ErrorKind::DimensionMismatch, "period vectors have the wrong length");
    PeriodVector const normalized = normalize_period(split, omega);
    if (!in_period_domain(normalized))
        throw Error(ErrorKind::NotAPeriod, "Ω is not in the period domain");

    RationalVector b = normalized.re - orthogonal_projection(split.hyperbolic, normalized.re);
    RationalVector w = normalized.im - orthogonal_projection(split.hyperbolic, normalized.im);
    return {split.mirror, std::move(b), std::move(w)};
}

EllipticPeriod elliptic_phi(Rational const& b, Rational const& omega)
{
    if (omega <= 0)
        throw Error(ErrorKind::OutOfRange, "elliptic Kähler parameter ω must be positive");
    return {Rational(1), ComplexRational(b, omega)};
}

} // namespace k3mirror
