#include "helpers.hpp"

#include "k3mirror/mirror_map.hpp"
#include "k3mirror/sampling.hpp"

using namespace testing;

namespace {

MirrorSplit uu_split()
{
    return construct_mirror(check_admissible(whole(u_plus_u()), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 1));
}

} // namespace

TEST_CASE("mirror map on U + U")
{
    MirrorSplit const s = uu_split();
    PeriodVector const a = phi(s, {s.mirror, rv({"0", "0", "0", "0"}), rv({"0", "0", "1", "1"})});
    CHECK(a.re == rv({"1", "1", "0", "0"}));
    CHECK(a.im == rv({"0", "0", "1", "1"}));

    TubePoint const p{s.mirror, rv({"0", "0", "1", "0"}), rv({"0", "0", "1", "1"})};
    PeriodVector const b = phi(s, p);
    CHECK(b.re == rv({"1", "1", "1", "0"}));
    CHECK(b.im == rv({"-1", "0", "1", "1"}));
    CHECK(self_pairing(b).is_zero());

    TubePoint const back = phi_inverse(s, b);
    CHECK(back.b == p.b);
    CHECK(back.omega == p.omega);
}

TEST_CASE("mirror map with m = 2 has a rational E' term")
{
    IntegerLattice const l = direct_sum(hyperbolic_plane(2), hyperbolic_plane(1));
    MirrorSplit const s = construct_mirror(check_admissible(whole(l), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 2));
    PeriodVector const p = phi(s, {s.mirror, rv({"0", "0", "0", "0"}), rv({"0", "0", "1", "1"})});
    CHECK(p.re == rv({"1", "1/2", "0", "0"}));
    CHECK(p.im == rv({"0", "0", "1", "1"}));
    CHECK(self_pairing(p).is_zero());
    CHECK(hermitian_norm(p) == 4);
    TubePoint const q = phi_inverse(s, p);
    CHECK(q.omega == rv({"0", "0", "1", "1"}));
    CHECK(is_zero(q.b));
}

TEST_CASE("mirror map errors")
{
    MirrorSplit const s = uu_split();
    CHECK(error_kind([&] { phi(s, {s.mirror, rv({"0", "0", "0", "0"}), rv({"0", "0", "1", "0"})}); }) ==
          ErrorKind::NotInTube);
    CHECK(error_kind([&] { phi(s, {s.mirror, rv({"1", "0", "0", "0"}), rv({"0", "0", "1", "1"})}); }) ==
          ErrorKind::NotInLattice);
    // Ω supported on M̌ has Ω·E = 0.
    CHECK(error_kind([&] {
              phi_inverse(s, {s.pair.transcendental, rv({"0", "0", "1", "0"}), rv({"0", "0", "0", "1"})});
          }) == ErrorKind::NormalizationImpossible);
    CHECK(error_kind([&] {
              phi_inverse(s, {s.pair.transcendental, rv({"0", "1", "0", "0"}), rv({"0", "0", "0", "0"})});
          }) == ErrorKind::NotAPeriod);
}

TEST_CASE("inverse after a complex rescale")
{
    StandardSetup const st = standard_setup();
    Sampler rng(41);
    for (int t = 0; t < 30; ++t) {
        TubePoint const p = random_tube_point(rng, st.split.mirror, 6);
        PeriodVector const omega = phi(st.split, p);
        ComplexRational const lambda(rng.rational(5), rng.nonzero_rational(5));
        PeriodVector scaled{omega.lattice, {}, {}};
        for (std::size_t i = 0; i < omega.re.size(); ++i) {
            ComplexRational const z = ComplexRational(omega.re[i], omega.im[i]) * lambda;
            scaled.re.push_back(z.re);
            scaled.im.push_back(z.im);
        }
        TubePoint const q = phi_inverse(st.split, scaled);
        CHECK(q.b == p.b);
        CHECK(q.omega == p.omega);
        // φ∘φ⁻¹ is the identity after normalizing Ω·E = 1.
        PeriodVector const again = phi(st.split, q);
        PeriodVector const norm = normalize_period(st.split, scaled);
        CHECK(again.re == norm.re);
        CHECK(again.im == norm.im);
    }
}

TEST_CASE("elliptic mirror map")
{
    EllipticPeriod const a = elliptic_phi(0, 1);
    CHECK(a.sx_coeff == 1);
    CHECK(a.tau == ComplexRational(0, 1));
    CHECK(elliptic_phi(parse_rational("1/2"), 3).tau == ComplexRational(parse_rational("1/2"), 3));
    CHECK(error_kind([] { elliptic_phi(0, 0); }) == ErrorKind::OutOfRange);
    CHECK(error_kind([] { elliptic_phi(0, -1); }) == ErrorKind::OutOfRange);
}
