#include "k3mirror/sampling.hpp"

#include <algorithm>

#include "k3mirror/catalog.hpp"

namespace k3mirror {

long Sampler::uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool Sampler::coin(double p_true)
{
    return std::bernoulli_distribution(p_true)(rng_);
}

Rational Sampler::rational(long bound)
{
    Rational q(uniform(-bound, bound), uniform(1, bound));
    q.canonicalize();
    return q;
}

Rational Sampler::nonzero_rational(long bound)
{
    for (;;) {
        Rational q = rational(bound);
        if (q != 0)
            return q;
    }
}

StandardSetup standard_setup()
{
    IntegerLattice const l = k3_lattice();
    std::size_t const n = l.rank();
    IntMatrix mb(2, n);
    mb(0, 0) = 1;
    mb(1, 1) = 1;
    Sublattice const m(l, mb);
    Sublattice const t = orthogonal_complement(m);
    MirrorSplit split = construct_mirror(check_admissible(t, unit_vector(n, 2), unit_vector(n, 3), 1));
    return {l, m, std::move(split)};
}

LatticeInvolution block_involution(IntegerLattice const& lattice, std::size_t invariant)
{
    std::size_t const n = lattice.rank();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        a(i, i) = i < invariant ? 1 : -1;
    return LatticeInvolution(lattice, a);
}

TubePoint random_tube_point(Sampler& rng, Sublattice const& s, long bound, double sparsity)
{
    std::size_t const r = s.rank();
    IntMatrix const gram = s.induced_gram();
    std::vector<double> g(r * r);
    for (std::size_t i = 0; i < r * r; ++i)
        g[i] = gram(i / r, i % r).get_d();

    std::vector<long> num(r), den(r);
    auto draw = [&] {
        for (std::size_t i = 0; i < r; ++i) {
            bool const zero = rng.coin(sparsity);
            num[i] = zero ? 0 : rng.uniform(-bound, bound);
            den[i] = zero ? 1 : rng.uniform(1, bound);
        }
    };
    auto exact = [&] {
        RationalVector c(r);
        for (std::size_t i = 0; i < r; ++i) {
            c[i] = Rational(num[i], den[i]);
            c[i].canonicalize();
        }
        return combine(s, c);
    };
    auto const& l = s.ambient();
    for (;;) {
        // Most draws have ω² < 0; screen them in floating point before the exact test.
        draw();
        double approx = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                approx += g[i * r + j] * static_cast<double>(num[i]) / static_cast<double>(den[i]) *
                          static_cast<double>(num[j]) / static_cast<double>(den[j]);
        if (approx < -1e-6)
            continue;
        RationalVector omega = exact();
        if (pairing(l, omega, omega) <= 0)
            continue;
        draw();
        return {s, exact(), std::move(omega)};
    }
}

TubePoint make_primed(TubePoint p)
{
    auto const& l = p.lattice.ambient();
    Rational const t = pairing(l, p.b, p.omega) / pairing(l, p.omega, p.omega);
    p.b = p.b - t * p.omega;
    return p;
}

namespace {

// I + c·v·vᵀ·J preserves the form J.
RatMatrix transvection(RatMatrix const& form, RationalVector const& v, Rational const& c)
{
    std::size_t const n = v.size();
    RatMatrix vv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            vv(i, j) = v[i] * v[j];
    return RatMatrix::identity(n) + c * (vv * form);
}

} // namespace

AntiSymplecticSample random_anti_symplectic(Sampler& rng, std::size_t dim)
{
    SymplecticSpace const v = SymplecticSpace::standard(dim);
    RatMatrix const& std_form = v.form();

    RatMatrix s = RatMatrix::identity(dim);
    int const steps = static_cast<int>(rng.uniform(1, 4));
    for (int k = 0; k < steps; ++k) {
        RationalVector w(dim);
        for (auto& x : w)
            x = rng.rational(3);
        s = transvection(std_form, w, rng.nonzero_rational(3)) * s;
    }

    // Unit upper-triangular change of basis for the target.
    RatMatrix q = RatMatrix::identity(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            q(i, j) = rng.uniform(-3, 3);
    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    RatMatrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        p(i, perm[i]) = 1;
    q = p * q;

    RatMatrix seed(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        seed(i, i) = i % 2 == 0 ? 1 : -1;

    SymplecticSpace w(q.transpose() * std_form * q);
    return {v, std::move(w), inverse(q) * s * seed};
}

FiberCensus random_census(Sampler& rng, long max_n)
{
    long n = 0, np = 0;
    do {
        n = rng.uniform(1, max_n);
        np = rng.uniform(1, max_n);
    } while (n + np > 14);
    long const base = 2 * (n - 1) + 2 * (np - 1);
    long const k = rng.uniform(0, (24 - base) / 2);
    long const fixed_i1 = base + 2 * k;
    // I1 + 2 II = 24 with at least fixed_i1 I1 fibres.
    long const ii = rng.uniform(0, (24 - fixed_i1) / 2);
    long const i1 = 24 - 2 * ii;
    long const spare_i1 = i1 - fixed_i1;

    FiberCensus c;
    c.bv = BVData::generic(n, np);
    for (long i = 0; i < 2 * (n - 1) + k; ++i)
        c.records.push_back({Kodaira::I1, true, RealFiberType::CirclePoint});
    for (long i = 0; i < 2 * (np - 1) + k; ++i)
        c.records.push_back({Kodaira::I1, true, RealFiberType::FigureEight});
    std::vector<FiberRecord> rest;
    for (long i = 0; i < spare_i1; ++i)
        rest.push_back({Kodaira::I1, false, std::nullopt});
    for (long i = 0; i < ii; ++i)
        rest.push_back({Kodaira::II, false, std::nullopt});
    // Fix some II fibres, keeping the non-fixed count even.
    std::size_t const non_fixed = rest.size();
    std::size_t to_fix = 0;
    if (ii > 0) {
        to_fix = static_cast<std::size_t>(rng.uniform(0, ii));
        if ((non_fixed - to_fix) % 2 != 0)
            to_fix = to_fix > 0 ? to_fix - 1 : to_fix + 1;
    }
    if ((non_fixed - to_fix) % 2 != 0)
        throw Error(ErrorKind::CensusInvariant, "sampler produced an odd non-fixed count");
    for (std::size_t i = 0; i < to_fix; ++i) {
        rest[rest.size() - 1 - i].fixed = true;
        rest[rest.size() - 1 - i].real = RealFiberType::SingularCircle;
    }
    c.records.insert(c.records.end(), rest.begin(), rest.end());
    std::shuffle(c.records.begin(), c.records.end(), rng.engine());
    return c;
}

BasePoint random_base_point(Sampler& rng, long bound)
{
    Rational const s = rng.rational(bound), t = rng.rational(bound), r = rng.rational(bound);
    Rational const d = s * s + t * t + 1;
    Rational const e = 1 + r * r;
    return BasePoint(2 * s / d, 2 * t / d, (s * s + t * t - 1) / d, (1 - r * r) / e, 2 * r / e);
}

} // namespace k3mirror
