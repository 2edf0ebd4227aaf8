#include "k3mirror/period.hpp"

namespace k3mirror {

namespace {

void check_sizes(Sublattice const& s, RationalVector const& a, RationalVector const& b)
{
    std::size_t const n = s.ambient().rank();
    if (a.size() != n || b.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "vectors must have ambient length " + std::to_string(n));
}

} // namespace

ComplexRational self_pairing(PeriodVector const& p)
{
    check_sizes(p.lattice, p.re, p.im);
    auto const& l = p.lattice.ambient();
    return {pairing(l, p.re, p.re) - pairing(l, p.im, p.im), 2 * pairing(l, p.re, p.im)};
}

Rational hermitian_norm(PeriodVector const& p)
{
    check_sizes(p.lattice, p.re, p.im);
    auto const& l = p.lattice.ambient();
    return pairing(l, p.re, p.re) + pairing(l, p.im, p.im);
}

bool in_tube(TubePoint const& p)
{
    check_sizes(p.lattice, p.b, p.omega);
    return pairing(p.lattice.ambient(), p.omega, p.omega) > 0;
}

bool in_period_domain(PeriodVector const& p)
{
    return self_pairing(p).is_zero() && hermitian_norm(p) > 0;
}

DeltaResult in_delta(PeriodVector const& p)
{
    check_sizes(p.lattice, p.re, p.im);
    if (is_zero(p.re) && is_zero(p.im))
        throw Error(ErrorKind::NotAPeriod, "Ω = 0 is not a period");
    Sublattice const& t = p.lattice;
    auto const& l = t.ambient();

    // Row k: coefficients of the linear form c ↦ (c·basis)·v_k, cleared of denominators.
    IntMatrix conditions(2, t.rank());
    RationalVector const* parts[2] = {&p.re, &p.im};
    for (std::size_t k = 0; k < 2; ++k) {
        RationalVector row(t.rank());
        Integer den = 1;
        for (std::size_t j = 0; j < t.rank(); ++j) {
            row[j] = pairing(l, to_rational(t.generator(j)), *parts[k]);
            den = lcm(den, row[j].get_den());
        }
        for (std::size_t j = 0; j < t.rank(); ++j) {
            Rational scaled = row[j] * den;
            conditions(k, j) = scaled.get_num();
        }
    }
    IntMatrix const kernel = integer_kernel(conditions);
    if (kernel.rows() == 0)
        return {false, std::nullopt};
    return {true, combine(t, kernel.row(0))};
}

bool in_primed(TubePoint const& p)
{
    check_sizes(p.lattice, p.b, p.omega);
    return pairing(p.lattice.ambient(), p.b, p.omega) == 0;
}

bool in_primed(PeriodVector const& p, MirrorSplit const& split)
{
    check_sizes(p.lattice, p.re, p.im);
    if (p.lattice.ambient() != split.mirror.ambient())
        throw Error(ErrorKind::DimensionMismatch, "period and split live in different lattices");
    return in_rational_span(split.mirror, p.im);
}

} // namespace k3mirror
