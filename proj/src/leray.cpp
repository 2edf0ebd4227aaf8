#include "k3mirror/leray.hpp"

#include <algorithm>

namespace k3mirror {

long TableEntry::dim() const
{
    long d = 0;
    for (auto const& s : summands)
        d += s.rank;
    return d;
}

std::string TableEntry::label() const
{
    std::string out;
    for (auto const& s : summands) {
        if (!out.empty())
            out += " ⊕ ";
        out += s.label;
    }
    return out;
}

long SpectralTable::dim(int p, int q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second.dim();
}

TableEntry const* SpectralTable::at(int p, int q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? nullptr : &it->second;
}

int SpectralTable::max_p() const
{
    int m = 0;
    for (auto const& [pq, e] : entries)
        m = std::max(m, pq.first);
    return m;
}

int SpectralTable::max_q() const
{
    int m = 0;
    for (auto const& [pq, e] : entries)
        m = std::max(m, pq.second);
    return m;
}

std::vector<long> Filtration::quotients() const
{
    std::vector<long> q;
    long prev = 0;
    for (long d : dims) {
        q.push_back(d - prev);
        prev = d;
    }
    return q;
}

namespace {

TableEntry single(std::string label, long rank)
{
    return TableEntry{{Summand{std::move(label), rank}}};
}

} // namespace

SpectralTable k3_table(int rank_m)
{
    if (rank_m < 1 || rank_m > 20)
        throw Error(ErrorKind::OutOfRange, "rank of M must be in 1..20");
    SpectralTable t;
    t.entries[{0, 0}] = single("Q", 1);
    t.entries[{2, 0}] = single("QE", 1);
    t.entries[{0, 2}] = single("Qσ≅QE′", 1);
    t.entries[{1, 1}] = single("H¹(S²,R¹f_*Q)", 20);
    t.entries[{2, 2}] = single("Q", 1);
    return t;
}

SpectralTable elliptic_table()
{
    SpectralTable t;
    t.entries[{0, 0}] = single("Q", 1);
    t.entries[{1, 0}] = single("Qs_y", 1);
    t.entries[{0, 1}] = single("Qs_x", 1);
    t.entries[{1, 1}] = single("Q", 1);
    return t;
}

SpectralTable bv_table(int rank_m)
{
    if (rank_m < 1 || rank_m > 19)
        throw Error(ErrorKind::OutOfRange, "rank of M must be in 1..19");
    long const r = rank_m;
    SpectralTable t;
    t.entries[{0, 0}] = single("Q", 1);
    t.entries[{3, 0}] = single("QE⊗s_y", 1);
    t.entries[{0, 3}] = single("QE′⊗s_x", 1);
    t.entries[{3, 3}] = single("Q", 1);
    t.entries[{1, 1}] = TableEntry{{{"M_Q", r}, {"Q", 1}}};
    t.entries[{2, 2}] = TableEntry{{{"M_Q", r}, {"Q", 1}}};
    t.entries[{1, 2}] = TableEntry{{{"QE′⊗s_y", 1}, {"M̌_Q⊗s_x", 20 - r}}};
    t.entries[{2, 1}] = TableEntry{{{"M̌_Q⊗s_y", 20 - r}, {"QE⊗s_x", 1}}};
    return t;
}

std::vector<long> y_betti(int rank_m)
{
    if (rank_m < 1 || rank_m > 19)
        throw Error(ErrorKind::OutOfRange, "rank of M must be in 1..19");
    long const r = rank_m;
    return {1, 0, r + 1, 2 * (22 - r), r + 1, 0, 1};
}

std::vector<long> k3_betti()
{
    return {1, 0, 22, 0, 1};
}

std::vector<long> torus_betti()
{
    return {1, 2, 1};
}

std::vector<long> antidiagonal_sums(SpectralTable const& t)
{
    std::vector<long> sums(static_cast<std::size_t>(t.max_p() + t.max_q() + 1), 0);
    for (auto const& [pq, e] : t.entries)
        sums[static_cast<std::size_t>(pq.first + pq.second)] += e.dim();
    return sums;
}

bool check_degeneration(SpectralTable const& t, std::vector<long> const& betti)
{
    return antidiagonal_sums(t) == betti;
}

SpectralTable swap_rows(SpectralTable const& t)
{
    int const top = t.max_q();
    SpectralTable out;
    for (auto const& [pq, e] : t.entries)
        out.entries[{pq.first, top - pq.second}] = e;
    return out;
}

Filtration filtration(SpectralTable const& t, int degree)
{
    if (degree < 0)
        throw Error(ErrorKind::OutOfRange, "degree must be non-negative");
    Filtration f{degree, {}};
    long acc = 0;
    for (int i = 0; i <= degree; ++i) {
        acc += t.dim(degree - i, i);
        f.dims.push_back(acc);
    }
    return f;
}

std::string_view to_string(EllipticClass c)
{
    return c == EllipticClass::Sx ? "s_x" : "s_y";
}

ComplexRational TensorPeriod::coefficient(std::string const& label, EllipticClass c) const
{
    auto it = components.find({label, c});
    return it == components.end() ? ComplexRational() : it->second;
}

TensorPeriod bv_mirror_period(MirrorSplit const& split, Sublattice const& m, TubePoint const& p1, Rational const& b2,
                              Rational const& omega2)
{
    if (split.pair.m != 1)
        throw Error(ErrorKind::IncompatibleSplit, "the Borcea-Voisin mirror period needs an m = 1 split");
    auto const& l = split.pair.transcendental.ambient();
    if (m.ambient() != l || p1.lattice.ambient() != l)
        throw Error(ErrorKind::DimensionMismatch, "M, the tube point and the split live in different lattices");
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < split.pair.transcendental.rank(); ++j)
            if (pairing(l, m.generator(i), split.pair.transcendental.generator(j)) != 0)
                throw Error(ErrorKind::IncompatibleSplit, "M is not orthogonal to T");
    if (!in_tube(p1))
        throw Error(ErrorKind::NotInTube, "ω₁.ω₁ must be positive");
    auto const b_coords = rational_coordinates(m, p1.b);
    auto const w_coords = rational_coordinates(m, p1.omega);
    if (!b_coords || !w_coords)
        throw Error(ErrorKind::NotInLattice, "B₁ and ω₁ must lie in M ⊗ Q");
    EllipticPeriod const tau = elliptic_phi(b2, omega2);

    Rational const w2 = pairing(l, p1.omega, p1.omega);
    Rational const bb = pairing(l, p1.b, p1.b);
    Rational const wb = pairing(l, p1.omega, p1.b);

    TensorPeriod t;
    std::vector<ComplexRational> k3;
    t.labels = {"E", "E'"};
    t.classes = {split.pair.e, split.pair.e_prime};
    k3.emplace_back((w2 - bb) / 2, -wb);
    k3.emplace_back(1);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        t.labels.push_back("M[" + std::to_string(i) + "]");
        t.classes.push_back(m.generator(i));
        k3.emplace_back((*b_coords)[i], (*w_coords)[i]);
    }
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        ComplexRational const sx = k3[i] * ComplexRational(tau.sx_coeff);
        ComplexRational const sy = k3[i] * tau.tau;
        if (!sx.is_zero())
            t.components[{t.labels[i], EllipticClass::Sx}] = sx;
        if (!sy.is_zero())
            t.components[{t.labels[i], EllipticClass::Sy}] = sy;
    }
    return t;
}

TensorPeriod quotient_by_f1(TensorPeriod const& t)
{
    TensorPeriod q = t;
    q.components.erase({"E", EllipticClass::Sx});
    q.components.erase({"E", EllipticClass::Sy});
    return q;
}

BVInput recover_bv_input(TensorPeriod const& t, Sublattice const& m)
{
    TensorPeriod const q = quotient_by_f1(t);
    ComplexRational const lead = q.coefficient("E'", EllipticClass::Sx);
    if (lead.is_zero())
        throw Error(ErrorKind::NormalizationFailure, "E'⊗s_x coefficient vanishes");
    ComplexRational const tau = q.coefficient("E'", EllipticClass::Sy) / lead;

    RationalVector b_coords(m.rank()), w_coords(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        ComplexRational const z = q.coefficient("M[" + std::to_string(i) + "]", EllipticClass::Sx) / lead;
        b_coords[i] = z.re;
        w_coords[i] = z.im;
    }
    return {TubePoint{m, combine(m, b_coords), combine(m, w_coords)}, tau.re, tau.im};
}

PeriodVector k3_factor(TensorPeriod const& t, Sublattice const& carrier)
{
    std::size_t const n = carrier.ambient().rank();
    RationalVector re(n, Rational(0)), im(n, Rational(0));
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        ComplexRational const z = t.coefficient(t.labels[i], EllipticClass::Sx);
        RationalVector const cls = to_rational(t.classes[i]);
        re = re + z.re * cls;
        im = im + z.im * cls;
    }
    return {carrier, std::move(re), std::move(im)};
}

bool satisfies_factor_conditions(TensorPeriod const& t, Sublattice const& carrier)
{
    ComplexRational const lead = t.coefficient("E'", EllipticClass::Sx);
    if (lead.is_zero())
        return false;
    ComplexRational const tau = t.coefficient("E'", EllipticClass::Sy) / lead;
    if (tau.im <= 0)
        return false;
    for (auto const& label : t.labels)
        if (t.coefficient(label, EllipticClass::Sy) != tau * t.coefficient(label, EllipticClass::Sx))
            return false;
    PeriodVector const omega = k3_factor(t, carrier);
    for (auto const* v : {&omega.re, &omega.im})
        if (!in_rational_span(carrier, *v))
            return false;
    return in_period_domain(omega);
}

} // namespace k3mirror
