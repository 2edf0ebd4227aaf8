#include "helpers.hpp"

#include "k3mirror/json_io.hpp"
#include "k3mirror/sampling.hpp"

using namespace testing;
namespace jio = k3mirror::json_io;
using jio::json;

TEST_CASE("json: rationals and integers")
{
    CHECK(jio::to_json(Rational(3, 6)) == "1/2");
    CHECK(jio::to_json(Rational(-4, 2)) == "-2");
    CHECK(jio::rational_from(json("6/4")) == Rational(3, 2));
    CHECK(jio::rational_from(json(5)) == 5);
    CHECK(jio::to_json(Integer(7)) == 7);
    Integer const big("123456789012345678901234567890");
    CHECK(jio::to_json(big) == "123456789012345678901234567890");
    CHECK(jio::integer_from(jio::to_json(big)) == big);
    CHECK(error_kind([] { jio::rational_from(json("1/0")); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { jio::rational_from(json("x")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("json: vectors and lattices")
{
    CHECK(jio::parse_lattice_vector("1,0,-2") == iv({1, 0, -2}));
    CHECK(jio::parse_lattice_vector("[1,0,-2]") == iv({1, 0, -2}));
    CHECK(jio::parse_rational_vector("1/2,-3") == rv({"1/2", "-3"}));
    CHECK(jio::lattice_from(json("K3")) == k3_lattice());
    CHECK(jio::lattice_from(json("U:3")) == hyperbolic_plane(3));
    IntegerLattice const e8 = e8_minus();
    CHECK(jio::lattice_from(jio::to_json(e8)) == e8);
    CHECK(error_kind([] { jio::lattice_from(json("nope")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("json: sublattice, census and split round trips")
{
    StandardSetup const s = standard_setup();
    Sublattice const back = jio::sublattice_from(jio::to_json(s.split.mirror));
    CHECK(back.basis() == s.split.mirror.basis());
    CHECK(back.ambient() == s.lattice);

    MirrorSplit const again = jio::split_from(jio::to_json(s.split));
    CHECK(again.mirror.basis() == s.split.mirror.basis());
    CHECK(again.section_class == s.split.section_class);

    Sampler rng(55);
    for (int t = 0; t < 50; ++t) {
        FiberCensus const c = random_census(rng);
        CHECK(jio::census_from(jio::to_json(c)) == c);
    }

    TubePoint const p = random_tube_point(rng, s.split.mirror, 5);
    PeriodVector const w = phi(s.split, p);
    PeriodVector const w2 = jio::period_from(jio::to_json(w), s.split.pair.transcendental);
    CHECK(w2.re == w.re);
    CHECK(w2.im == w.im);
}

TEST_CASE("json: load accepts inline text or a plain string")
{
    CHECK(jio::load("[1,2]") == json::array({1, 2}));
    CHECK(jio::load("K3") == "K3");
    CHECK(jio::load("{\"a\":1}")["a"] == 1);
}
