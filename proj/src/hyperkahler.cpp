#include "k3mirror/hyperkahler.hpp"

namespace k3mirror {

RotationRow const& RotationTable::row(char label) const
{
    for (auto const& r : rows)
        if (r.label == label)
            return r;
    throw Error(ErrorKind::InvalidArgument, std::string("no row labelled ") + label);
}

UnitPhase::UnitPhase(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s))
{
    if (c_ * c_ + s_ * s_ != 1)
        throw Error(ErrorKind::NotUnitPhase, "phase (" + to_string(c_) + ", " + to_string(s_) + ") is not on the unit circle");
}

UnitPhase UnitPhase::from_slope(Rational const& t)
{
    Rational const d = 1 + t * t;
    return UnitPhase((1 - t * t) / d, (2 * t) / d);
}

UnitPhase operator*(UnitPhase const& a, UnitPhase const& b)
{
    return UnitPhase(a.c_ * b.c_ - a.s_ * b.s_, a.c_ * b.s_ + a.s_ * b.c_);
}

RotationTable rotation_table(FormPair const& omega, RationalVector const& kahler, IntegerLattice const& lattice)
{
    Rational const rr = pairing(lattice, omega.re, omega.re);
    Rational const ii = pairing(lattice, omega.im, omega.im);
    Rational const ww = pairing(lattice, kahler, kahler);
    auto fail = [](char const* which) {
        throw Error(ErrorKind::NormalizationFailure, std::string("normalization fails: ") + which);
    };
    if (rr != ii)
        fail("(ReΩ)²=(ImΩ)²");
    if (rr != ww)
        fail("(ReΩ)²=ω²");
    if (ww <= 0)
        fail("ω²>0");
    if (pairing(lattice, omega.re, omega.im) != 0)
        fail("ReΩ.ImΩ=0");
    if (pairing(lattice, omega.re, kahler) != 0)
        fail("ReΩ.ω=0");
    if (pairing(lattice, omega.im, kahler) != 0)
        fail("ImΩ.ω=0");

    return {{RotationRow{'I', {omega.re, omega.im}, kahler},
             RotationRow{'J', {kahler, omega.re}, omega.im},
             RotationRow{'K', {omega.im, kahler}, omega.re}}};
}

FormPair phase_rotate(FormPair const& omega, UnitPhase const& theta)
{
    return {theta.c() * omega.re - theta.s() * omega.im, theta.s() * omega.re + theta.c() * omega.im};
}

} // namespace k3mirror
