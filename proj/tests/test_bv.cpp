#include "helpers.hpp"

#include "k3mirror/bv.hpp"

using namespace testing;

TEST_CASE("Hodge numbers")
{
    CHECK(hodge_numbers(BVData::generic(5, 2)) == HodgePair{34, 16});
    CHECK(hodge_numbers(BVData::generic(1, 1)) == HodgePair{15, 15});
    for (long n = 1; n <= 10; ++n) {
        HodgePair const h = hodge_numbers(BVData::generic(n, n));
        CHECK(h.h11 == h.h21);
    }
    CHECK(hodge_numbers(BVData::generic(1, 0)) == HodgePair{16, 10});
    CHECK(error_kind([] { hodge_numbers(BVData::generic(1, 20)); }) == ErrorKind::NonPositiveHodge);
    CHECK(error_kind([] { hodge_numbers(BVData::self_mirror(FixedLocusCase::Empty)); }) == ErrorKind::SelfMirrorCase);
    CHECK(error_kind([] { BVData::generic(0, 1); }) == ErrorKind::OutOfRange);
    CHECK(error_kind([] { BVData::generic(1, -1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("Euler characteristic")
{
    CHECK(euler_characteristic(BVData::generic(5, 2)) == 36);
    CHECK(euler_characteristic(BVData::generic(4, 4)) == 0);
    CHECK(euler_characteristic(BVData::generic(3, 4)) == -12);
    CHECK(error_kind([] { euler_characteristic(BVData::self_mirror(FixedLocusCase::TwoElliptic)); }) ==
          ErrorKind::SelfMirrorCase);
}

TEST_CASE("mirror swap")
{
    CHECK(mirror_swap(BVData::generic(3, 4)) == BVData::generic(4, 3));
    CHECK(mirror_swap(mirror_swap(BVData::generic(7, 2))) == BVData::generic(7, 2));
    CHECK(error_kind([] { mirror_swap(BVData::generic(2, 0)); }) == ErrorKind::NoMirrorFamily);
    BVData const empty = BVData::self_mirror(FixedLocusCase::Empty);
    CHECK(mirror_swap(empty) == empty);
}

TEST_CASE("duality on the full grid")
{
    for (long n = 1; n <= 11; ++n)
        for (long np = 1; np <= 11; ++np) {
            BVData const d = BVData::generic(n, np);
            HodgePair const h = hodge_numbers(d), hs = hodge_numbers(mirror_swap(d));
            CHECK(hs.h11 == h.h21);
            CHECK(hs.h21 == h.h11);
            CHECK(euler_characteristic(d) == 2 * (h.h11 - h.h21));
            CHECK(euler_characteristic(mirror_swap(d)) == -euler_characteristic(d));
        }
}
