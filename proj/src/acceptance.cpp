#include "k3mirror/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "k3mirror/bv.hpp"
#include "k3mirror/catalog.hpp"
#include "k3mirror/leray.hpp"
#include "k3mirror/mirror_map.hpp"
#include "k3mirror/sampling.hpp"

namespace k3mirror {

namespace {

// Thrown to report the first failing check of a criterion.
struct CheckFailed {
    std::string what;
};

void require(bool ok, std::string const& what)
{
    if (!ok)
        throw CheckFailed{what};
}

std::string k3_certificate(Sampler&)
{
    DetSignature const ds = det_and_signature(k3_lattice());
    require(k3_lattice().is_even(), "not even");
    require(abs(ds.det) == 1, "det = " + ds.det.get_str());
    require(ds.signature == Signature{3, 19, 0}, "signature is not (3,19)");
    return "even, det " + ds.det.get_str() + ", signature (3,19)";
}

std::string mirror_splitting(Sampler&)
{
    StandardSetup const s = standard_setup();
    auto const& split = s.split;
    require(split.mirror.rank() == 18, "rank M̌ = " + std::to_string(split.mirror.rank()));
    Integer const det_t = determinant(split.pair.transcendental.induced_gram());
    Integer const det_m = determinant(split.mirror.induced_gram());
    require(abs(det_t) == abs(det_m), "|det T| != |det M̌|");
    require(index_in(split.pair.transcendental, span_union(split.hyperbolic, split.mirror)) == 1,
            "P ⊕ M̌ has index > 1 in T");

    // The mirror of the mirror: T' = M̌⊥ in L, split along the same plane.
    Sublattice const t2 = orthogonal_complement(split.mirror);
    MirrorSplit const back = construct_mirror(check_admissible(t2, split.pair.e, split.pair.e_prime, 1));
    require(back.mirror.induced_gram() == s.polarization.induced_gram(), "double-mirror Gram differs from M");
    require(same_span(back.mirror, s.polarization), "double mirror is not M");
    return "rank 18, |det| " + Integer(abs(det_m)).get_str() + ", index 1, double mirror = M";
}

std::string mirror_map_identities(Sampler& rng)
{
    StandardSetup const s = standard_setup();
    auto const& l = s.lattice;
    int const points = 120;
    for (int i = 0; i < points; ++i) {
        TubePoint const p = random_tube_point(rng, s.split.mirror, 10);
        PeriodVector const omega = phi(s.split, p);
        require(self_pairing(omega).is_zero(), "Ω·Ω != 0");
        require(hermitian_norm(omega) == 2 * pairing(l, p.omega, p.omega), "Ω·Ω̄ != 2ω̌·ω̌");
        TubePoint const q = phi_inverse(s.split, omega);
        require(q.b == p.b && q.omega == p.omega, "φ⁻¹∘φ != id");
    }
    return std::to_string(points) + " tube points";
}

std::string primed_correspondence(Sampler& rng)
{
    StandardSetup const s = standard_setup();
    auto const& l = s.lattice;
    std::vector<TubePoint> pts;
    std::size_t const n = l.rank();
    // Boundary cases: B = 0, B on the line of ω, B primed up to a small defect.
    TubePoint const base = random_tube_point(rng, s.split.mirror, 10);
    pts.push_back({base.lattice, RationalVector(n, Rational(0)), base.omega});
    pts.push_back({base.lattice, Rational(1, 2) * base.omega, base.omega});
    TubePoint const primed = make_primed(base);
    pts.push_back(primed);
    pts.push_back({primed.lattice, primed.b + Rational(1, 997) * primed.omega, primed.omega});
    while (pts.size() < 100) {
        TubePoint p = random_tube_point(rng, s.split.mirror, 10);
        pts.push_back(rng.coin() ? make_primed(std::move(p)) : std::move(p));
    }
    int primed_count = 0;
    for (auto const& p : pts) {
        bool const lhs = in_primed(p);
        bool const rhs = in_primed(phi(s.split, p), s.split);
        require(lhs == rhs, "B̌·ω̌ = 0 and Im φ ∈ M̌ ⊗ Q disagree");
        primed_count += lhs;
    }
    require(primed_count > 0 && primed_count < static_cast<int>(pts.size()), "only one side exercised");
    return std::to_string(pts.size()) + " points, " + std::to_string(primed_count) + " primed";
}

std::string mirror_involution_check(Sampler&)
{
    StandardSetup const s = standard_setup();
    std::size_t const n = s.lattice.rank();
    LatticeInvolution const rho = block_involution(s.lattice, 2);
    LatticeInvolution const dual = mirror_involution(rho, s.split);
    IntMatrix const& a = dual.matrix();
    require(a * a == IntMatrix::identity(n), "ι̌² != id");
    require(a.transpose() * s.lattice.gram() * a == s.lattice.gram(), "ι̌ does not preserve the form");
    InvariantSplit const eig = invariant_sublattices(dual);
    require(same_span(eig.plus, s.split.mirror), "invariant lattice != M̌");
    require(same_span(eig.minus, span_union(s.split.hyperbolic, s.polarization)), "anti-invariant lattice != P ⊕ M");
    return "ι̌² = id, isometry, invariant M̌ (rank 18), anti-invariant P ⊕ M";
}

std::string transpose_lemma(Sampler& rng)
{
    int const per_dim = 200;
    for (std::size_t dim : {2u, 4u, 6u})
        for (int i = 0; i < per_dim; ++i) {
            AntiSymplecticSample const x = random_anti_symplectic(rng, dim);
            require(transpose_defect(x.source, x.target, x.map).is_zero(),
                    "nonzero defect in dimension " + std::to_string(dim));
        }
    return std::to_string(per_dim) + " maps in each of dims 2, 4, 6";
}

std::string bv_duality(Sampler&)
{
    for (long n = 1; n <= 11; ++n)
        for (long np = 1; np <= 11; ++np) {
            BVData const d = BVData::generic(n, np);
            BVData const m = mirror_swap(d);
            HodgePair const h = hodge_numbers(d), hm = hodge_numbers(m);
            std::string const at = " at (" + std::to_string(n) + "," + std::to_string(np) + ")";
            require(h.h11 == hm.h21 && h.h21 == hm.h11, "Hodge numbers do not swap" + at);
            long const e = euler_characteristic(d);
            require(e == 12 * (n - np), "euler != 12(N-N')" + at);
            require(e == 2 * (h.h11 - h.h21), "euler != 2(h11-h21)" + at);
            require(e == -euler_characteristic(m), "euler(swap) != -euler" + at);
            require(mirror_swap(m) == d, "swap is not an involution" + at);
        }
    return "121 pairs";
}

std::string census_accounting(Sampler& rng)
{
    int const count = 1000;
    for (int i = 0; i < count; ++i) {
        FiberCensus const c = random_census(rng);
        long const total = total_euler(c);
        require(total == 12 * (c.bv.n - c.bv.n_prime), "total != 12(N-N')");
        FiberCensus const d = dualize_census(c);
        require(total_euler(d) == -total, "dual total is not the negative");
        require(dualize_census(d) == c, "dualize is not an involution");
    }
    return std::to_string(count) + " censuses";
}

std::string leray_degeneration(Sampler&)
{
    for (int r = 1; r <= 19; ++r) {
        require(antidiagonal_sums(bv_table(r)) == y_betti(r), "bv_table(" + std::to_string(r) + ") sums != Betti");
        require(check_degeneration(bv_table(r), y_betti(r)), "check_degeneration failed");
        require(antidiagonal_sums(k3_table(r)) == std::vector<long>{1, 0, 22, 0, 1},
                "k3_table(" + std::to_string(r) + ") sums != (1,0,22,0,1)");
    }
    SpectralTable const e = elliptic_table();
    require(antidiagonal_sums(e) == torus_betti(), "elliptic sums != (1,2,1)");
    require(antidiagonal_sums(swap_rows(e)) == antidiagonal_sums(e), "row swap changes sums");
    return "r = 1..19";
}

std::string bv_mirror_period_check(Sampler& rng)
{
    StandardSetup const s = standard_setup();
    int const count = 50;
    for (int i = 0; i < count; ++i) {
        TubePoint const p1 = random_tube_point(rng, s.polarization, 10, 0.0);
        Rational const b2 = rng.rational(10);
        Rational omega2 = rng.nonzero_rational(10);
        if (omega2 < 0)
            omega2 = -omega2;
        TensorPeriod const t = bv_mirror_period(s.split, s.polarization, p1, b2, omega2);
        require(t.coefficient("E'", EllipticClass::Sx) == ComplexRational(1), "E'⊗s_x coefficient != 1");
        require(satisfies_factor_conditions(t, Sublattice::whole(s.lattice)), "period violates the factor conditions");
        BVInput const back = recover_bv_input(t, s.polarization);
        require(back.kahler.b == p1.b && back.kahler.omega == p1.omega, "K3 Kähler data not recovered");
        require(back.b2 == b2 && back.omega2 == omega2, "elliptic Kähler data not recovered");
    }
    return std::to_string(count) + " inputs";
}

std::string base_model(Sampler& rng)
{
    int const count = 1000;
    for (int i = 0; i < count; ++i) {
        BasePoint const p = random_base_point(rng, 12);
        BaseImage const b = base_embed(p);
        require(b.X * b.X + b.Y * b.Y + b.Z == 1, "X²+Y²+Z != 1");
        require(b.U * b.U + b.V == 1, "U²+V != 1");
        require(b.W * b.W == b.Z * b.V, "W² != ZV");
        require(on_base_model(b), "image not on the model");
        require(base_embed(p.involution_image()) == b, "image not involution-invariant");
    }
    return std::to_string(count) + " points";
}

struct Criterion {
    char const* name;
    std::function<std::string(Sampler&)> body;
};

std::vector<Criterion> const& criteria()
{
    static std::vector<Criterion> const list = {
        {"K3 lattice certificate", k3_certificate},
        {"mirror lattice splitting", mirror_splitting},
        {"mirror map identities", mirror_map_identities},
        {"primed slice correspondence", primed_correspondence},
        {"mirror involution", mirror_involution_check},
        {"anti-symplectic transpose identity", transpose_lemma},
        {"Borcea-Voisin duality", bv_duality},
        {"census accounting", census_accounting},
        {"Leray degeneration", leray_degeneration},
        {"BV mirror period", bv_mirror_period_check},
        {"base model of S2 x S1", base_model},
    };
    return list;
}

} // namespace

int criterion_count()
{
    return static_cast<int>(criteria().size());
}

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    if (id < 1 || id > criterion_count())
        throw Error(ErrorKind::OutOfRange, "criterion id must be in 1.." + std::to_string(criterion_count()));
    Criterion const& c = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult r{id, c.name, false, {}, 0};
    Sampler rng(seed + static_cast<std::uint64_t>(id));
    auto const start = std::chrono::steady_clock::now();
    try {
        r.detail = c.body(rng);
        r.passed = true;
    } catch (CheckFailed const& f) {
        r.detail = f.what;
    } catch (Error const& e) {
        r.detail = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds >= kCriterionTimeLimit) {
        r.passed = false;
        std::ostringstream os;
        os << "exceeded " << kCriterionTimeLimit << " s";
        r.detail = os.str();
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count(); ++id)
        out.push_back(run_criterion(id, seed));
    return out;
}

} // namespace k3mirror
