#include "helpers.hpp"
#include "oracles.hpp"

#include <algorithm>

#include "k3mirror/mirror_lattice.hpp"
#include "k3mirror/sampling.hpp"

using namespace testing;

namespace {

bool contains_up_to_sign(std::vector<LatticeVector> const& vs, LatticeVector const& v)
{
    LatticeVector const neg = Integer(-1) * v;
    return std::any_of(vs.begin(), vs.end(), [&](auto const& w) { return w == v || w == neg; });
}

} // namespace

TEST_CASE("isotropic search")
{
    auto const uu = find_isotropic(whole(u_plus_u()), 1);
    CHECK(contains_up_to_sign(uu, iv({1, 0, 0, 0})));
    CHECK(contains_up_to_sign(uu, iv({0, 1, 0, 0})));
    for (auto const& v : uu) {
        CHECK(pairing(u_plus_u(), v, v) == 0);
        CHECK(content(v) == 1);
        CHECK_FALSE(contains_up_to_sign(std::vector<LatticeVector>{}, v));
    }
    // No vector appears together with its negative.
    for (auto const& v : uu)
        CHECK(std::count(uu.begin(), uu.end(), Integer(-1) * v) == 0);

    CHECK(find_isotropic(whole(e8_minus()), 1).empty());

    IntegerLattice const diag(im({{2, 0}, {0, -2}}));
    auto const d = find_isotropic(whole(diag), 1);
    CHECK(d.size() == 2);
    CHECK(contains_up_to_sign(d, iv({1, 1})));
    CHECK(contains_up_to_sign(d, iv({1, -1})));

    CHECK(error_kind([] { find_isotropic(whole(k3_lattice()), 3); }) == ErrorKind::SearchTooLarge);
    CHECK(error_kind([] { find_isotropic(whole(hyperbolic_plane(1)), 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("isotropic search matches brute force on a sublattice")
{
    // T = span{e1 + e2, f1, e3} inside U³; enumerate directly.
    IntegerLattice const l = direct_sum(u_plus_u(), hyperbolic_plane(1));
    Sublattice const t(l, im({{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}));
    auto const found = find_isotropic(t, 2);
    std::size_t expected = 0;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                long const first = a != 0 ? a : b != 0 ? b : c;
                if (first <= 0 || std::gcd(std::gcd(a, b), c) != 1)
                    continue;
                // Gram of t in its basis: (a b c)·[[0,1,0],[1,0,0],[0,0,0]]·(a b c)ᵀ.
                if (2 * a * b == 0) {
                    ++expected;
                    CHECK(contains_up_to_sign(found, iv({a, b, a, 0, c, 0})));
                }
            }
    CHECK(found.size() == expected);
}

TEST_CASE("admissibility")
{
    Sublattice const uu = whole(u_plus_u());
    AdmissiblePair const p = check_admissible(uu, iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 1);
    CHECK(p.m == 1);

    Sublattice const u2u = whole(direct_sum(hyperbolic_plane(2), hyperbolic_plane(1)));
    CHECK(check_admissible(u2u, iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 2).m == 2);

    CHECK(error_kind([&] { check_admissible(uu, iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 2); }) == ErrorKind::WrongPairing);
    CHECK(error_kind([&] { check_admissible(uu, iv({1, 1, 0, 0}), iv({0, 1, 0, 0}), 1); }) == ErrorKind::NotIsotropic);
    CHECK(error_kind([&] { check_admissible(uu, iv({2, 0, 0, 0}), iv({0, 1, 0, 0}), 2); }) == ErrorKind::NotPrimitive);
    // E = e1 + 2 e2 pairs to 2 with f1 + ... but divisibility in U ⊕ U is 1 < 2.
    CHECK(error_kind([&] { check_admissible(uu, iv({1, 0, 0, 0}), iv({0, 2, 1, 0}), 2); }) ==
          ErrorKind::DivisibilityFailure);
    Sublattice const first(u_plus_u(), im({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(error_kind([&] { check_admissible(first, iv({0, 0, 1, 0}), iv({0, 1, 0, 0}), 1); }) ==
          ErrorKind::NotInLattice);
}

TEST_CASE("mirror lattice on U + U")
{
    Sublattice const uu = whole(u_plus_u());
    MirrorSplit const s = construct_mirror(check_admissible(uu, iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 1));
    CHECK(same_span(s.mirror, Sublattice(u_plus_u(), im({{0, 0, 1, 0}, {0, 0, 0, 1}}))));
    CHECK(s.hyperbolic.induced_gram() == im({{0, 1}, {1, 0}}));
    CHECK(s.section_class == iv({-1, 1, 0, 0}));
    for (std::size_t i = 0; i < s.mirror.rank(); ++i)
        CHECK(mirror_embedding(s.pair, s.mirror.generator(i)) == s.mirror.generator(i));
}

TEST_CASE("mirror lattice with m = 2")
{
    IntegerLattice const l = direct_sum(hyperbolic_plane(2), hyperbolic_plane(1));
    MirrorSplit const s = construct_mirror(check_admissible(whole(l), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), 2));
    CHECK(s.mirror.rank() == 2);
    CHECK(abs(determinant(s.pair.transcendental.induced_gram())) ==
          4 * abs(determinant(s.mirror.induced_gram())));
}

TEST_CASE("mirror lattice inside the K3 lattice")
{
    StandardSetup const s = standard_setup();
    CHECK(s.split.pair.transcendental.rank() == 20);
    CHECK(s.split.mirror.rank() == 18);
    CHECK(signature(s.split.mirror.induced()) == Signature{1, 17, 0});
    CHECK(abs(determinant(s.split.mirror.induced_gram())) == 1);
    CHECK(s.split.mirror.induced().is_even());
    // P and M̌ are orthogonal.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 18; ++j)
            CHECK(pairing(s.lattice, s.split.hyperbolic.generator(i), s.split.mirror.generator(j)) == 0);

    Sublattice const back_t = orthogonal_complement(s.split.mirror);
    MirrorSplit const back = construct_mirror(check_admissible(back_t, s.split.pair.e, s.split.pair.e_prime, 1));
    CHECK(back.mirror.induced_gram() == s.polarization.induced_gram());
}

TEST_CASE("the embedding α ↦ α − (α·E'/m)E is isometric on E⊥")
{
    StandardSetup const s = standard_setup();
    Sublattice const& t = s.split.pair.transcendental;
    IntMatrix const e_row = IntMatrix::from_rows({mat_vec(t.basis(), form_of(s.lattice, s.split.pair.e))});
    IntMatrix const kernel = integer_kernel(e_row);
    IntMatrix perp_basis;
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        perp_basis.append_row(combine(t, kernel.row(i)));
    Sublattice const perp(s.lattice, perp_basis);
    Sampler rng(21);
    for (int t = 0; t < 100; ++t) {
        LatticeVector a(perp.rank()), b(perp.rank());
        for (std::size_t i = 0; i < perp.rank(); ++i) {
            a[i] = rng.uniform(-3, 3);
            b[i] = rng.uniform(-3, 3);
        }
        LatticeVector const x = combine(perp, a), y = combine(perp, b);
        LatticeVector const ix = mirror_embedding(s.split.pair, x), iy = mirror_embedding(s.split.pair, y);
        CHECK(pairing(s.lattice, ix, iy) == pairing(s.lattice, x, y));
        CHECK(contains(s.split.mirror, ix));
    }
}
