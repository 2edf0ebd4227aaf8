#include "helpers.hpp"

#include "k3mirror/leray.hpp"
#include "k3mirror/mirror_map.hpp"
#include "k3mirror/sampling.hpp"

using namespace testing;

TEST_CASE("K3 table")
{
    for (int r = 1; r <= 20; ++r) {
        SpectralTable const t = k3_table(r);
        CHECK(t.dim(1, 1) == 20);
        CHECK(t.at(2, 0)->label() == "QE");
        CHECK(t.at(0, 2)->label().find("E′") != std::string::npos);
        CHECK(t.dim(0, 0) == 1);
        CHECK(t.dim(2, 2) == 1);
        CHECK(t.dim(1, 0) == 0);
        CHECK(antidiagonal_sums(t) == std::vector<long>{1, 0, 22, 0, 1});
        CHECK(check_degeneration(t, k3_betti()));
    }
    CHECK(error_kind([] { k3_table(0); }) == ErrorKind::OutOfRange);
    CHECK(error_kind([] { k3_table(21); }) == ErrorKind::OutOfRange);

    // F0 = QE, F1/F0 = the middle term, F2/F1 = QE'.
    CHECK(filtration(k3_table(2), 2).quotients() == std::vector<long>{1, 20, 1});
}

TEST_CASE("elliptic table")
{
    SpectralTable const e = elliptic_table();
    CHECK(antidiagonal_sums(e) == std::vector<long>{1, 2, 1});
    CHECK(e.at(0, 1)->label() == "Qs_x");
    CHECK(e.at(1, 0)->label() == "Qs_y");
    SpectralTable const s = swap_rows(e);
    CHECK(s.at(0, 0)->label() == "Qs_x");
    CHECK(s.at(0, 1)->label() == "Q");
    CHECK(antidiagonal_sums(s) == antidiagonal_sums(e));
    CHECK(swap_rows(s) == e);
}

TEST_CASE("Borcea-Voisin table")
{
    SpectralTable const t = bv_table(2);
    CHECK(t.dim(1, 1) == 3);
    CHECK(t.dim(1, 2) == 19);
    CHECK(t.dim(2, 1) == 19);
    CHECK(t.dim(2, 2) == 3);
    CHECK(t.at(2, 1)->label() == "M̌_Q⊗s_y ⊕ QE⊗s_x");
    CHECK(t.at(1, 2)->label() == "QE′⊗s_y ⊕ M̌_Q⊗s_x");
    for (int r = 1; r <= 19; ++r) {
        SpectralTable const b = bv_table(r);
        CHECK(antidiagonal_sums(b)[3] == 44 - 2 * r);
        CHECK(antidiagonal_sums(b) == y_betti(r));
        CHECK(check_degeneration(b, y_betti(r)));
        CHECK(filtration(b, 3).quotients() == std::vector<long>{1, 21 - r, 21 - r, 1});
        for (auto const& [pq, e] : b.entries) {
            long sum = 0;
            for (auto const& s : e.summands)
                sum += s.rank;
            CHECK(sum == e.dim());
        }
    }
    CHECK(y_betti(2) == std::vector<long>{1, 0, 3, 40, 3, 0, 1});
    CHECK(error_kind([] { bv_table(20); }) == ErrorKind::OutOfRange);

    std::vector<long> off = y_betti(4);
    off[2] += 1;
    CHECK_FALSE(check_degeneration(bv_table(4), off));
}

TEST_CASE("Borcea-Voisin mirror period example")
{
    StandardSetup const s = standard_setup();
    std::size_t const n = s.lattice.rank();
    RationalVector omega(n, Rational(0));
    omega[0] = omega[1] = 1;
    TubePoint const p{s.polarization, RationalVector(n, Rational(0)), omega};
    TensorPeriod const t = bv_mirror_period(s.split, s.polarization, p, 0, 1);
    ComplexRational const i(0, 1);
    CHECK(t.coefficient("E'", EllipticClass::Sx) == ComplexRational(1));
    CHECK(t.coefficient("E", EllipticClass::Sx) == ComplexRational(1));
    CHECK(t.coefficient("M[0]", EllipticClass::Sx) == i);
    CHECK(t.coefficient("M[1]", EllipticClass::Sx) == i);
    CHECK(t.coefficient("E'", EllipticClass::Sy) == i);
    CHECK(t.coefficient("E", EllipticClass::Sy) == i);
    CHECK(t.coefficient("M[0]", EllipticClass::Sy) == ComplexRational(-1));
    CHECK(t.components.size() == 8);

    BVInput const back = recover_bv_input(t, s.polarization);
    CHECK(back.kahler.omega == omega);
    CHECK(is_zero(back.kahler.b));
    CHECK(back.b2 == 0);
    CHECK(back.omega2 == 1);

    TensorPeriod const q = quotient_by_f1(t);
    CHECK(q.coefficient("E", EllipticClass::Sx).is_zero());
    CHECK(q.coefficient("E", EllipticClass::Sy).is_zero());
}

TEST_CASE("K3 factor agrees with the dual mirror map")
{
    // The s_x block is φ̌ applied to B₁ + iω₁ for the split of M⊥⊥ = P ⊕ M.
    StandardSetup const s = standard_setup();
    Sublattice const t2 = orthogonal_complement(s.split.mirror);
    MirrorSplit const dual = construct_mirror(check_admissible(t2, s.split.pair.e, s.split.pair.e_prime, 1));
    Sampler rng(81);
    for (int k = 0; k < 20; ++k) {
        TubePoint const p = random_tube_point(rng, s.polarization, 8, 0.0);
        TensorPeriod const t = bv_mirror_period(s.split, s.polarization, p, rng.rational(5), 1);
        PeriodVector const f = k3_factor(t, t2);
        PeriodVector const g = phi(dual, {dual.mirror, p.b, p.omega});
        CHECK(f.re == g.re);
        CHECK(f.im == g.im);
        CHECK(satisfies_factor_conditions(t, t2));
    }
}

TEST_CASE("mirror period preconditions")
{
    StandardSetup const s = standard_setup();
    std::size_t const n = s.lattice.rank();
    RationalVector omega(n, Rational(0));
    omega[0] = omega[1] = 1;
    TubePoint const p{s.polarization, RationalVector(n, Rational(0)), omega};
    CHECK(error_kind([&] { bv_mirror_period(s.split, s.polarization, p, 0, 0); }) == ErrorKind::OutOfRange);
    TubePoint const flat{s.polarization, RationalVector(n, Rational(0)), RationalVector(n, Rational(0))};
    CHECK(error_kind([&] { bv_mirror_period(s.split, s.polarization, flat, 0, 1); }) == ErrorKind::NotInTube);
    RationalVector outside(n, Rational(0));
    outside[4] = outside[5] = 1;
    CHECK(error_kind([&] {
              bv_mirror_period(s.split, s.polarization, {s.polarization, RationalVector(n, Rational(0)), outside}, 0, 1);
          }) == ErrorKind::NotInLattice);
}
