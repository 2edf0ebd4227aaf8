#include "helpers.hpp"

#include "k3mirror/hyperkahler.hpp"
#include "k3mirror/sampling.hpp"

using namespace testing;

namespace {

IntegerLattice u3()
{
    return direct_sum(u_plus_u(), hyperbolic_plane(1));
}

FormPair standard_form()
{
    return {rv({"1", "1", "0", "0", "0", "0"}), rv({"0", "0", "1", "1", "0", "0"})};
}

RationalVector standard_kahler()
{
    return rv({"0", "0", "0", "0", "1", "1"});
}

} // namespace

TEST_CASE("rotation table rows")
{
    RotationTable const t = rotation_table(standard_form(), standard_kahler(), u3());
    CHECK(t.row('I').holomorphic == standard_form());
    CHECK(t.row('I').kahler == standard_kahler());
    CHECK(t.row('J').holomorphic == FormPair{standard_kahler(), standard_form().re});
    CHECK(t.row('J').kahler == standard_form().im);
    CHECK(t.row('K').holomorphic == FormPair{standard_form().im, standard_kahler()});
    CHECK(t.row('K').kahler == standard_form().re);
    Sublattice const all = whole(u3());
    for (char c : {'I', 'J', 'K'}) {
        auto const& r = t.row(c);
        CHECK(in_period_domain({all, r.holomorphic.re, r.holomorphic.im}));
    }
    CHECK(error_kind([&] { t.row('X'); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("K-row of the K-row data is the J-row")
{
    FormPair const f = standard_form();
    RationalVector const w = standard_kahler();
    RotationTable const t = rotation_table(f, w, u3());
    RotationRow const& k = t.row('K');
    RotationTable const again = rotation_table(k.holomorphic, k.kahler, u3());
    CHECK(again.row('K').holomorphic == t.row('J').holomorphic);
    CHECK(again.row('K').kahler == t.row('J').kahler);
}

TEST_CASE("normalization failures name the broken equality")
{
    auto message = [](FormPair const& f, RationalVector const& w) {
        try {
            rotation_table(f, w, u3());
        } catch (Error const& e) {
            CHECK(e.kind() == ErrorKind::NormalizationFailure);
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(standard_form(), rv({"0", "0", "0", "0", "1", "2"})) == "normalization fails: (ReΩ)²=ω²");
    CHECK(message({rv({"1", "1", "0", "0", "0", "0"}), rv({"0", "0", "1", "2", "0", "0"})}, standard_kahler()) ==
          "normalization fails: (ReΩ)²=(ImΩ)²");
    CHECK(message({rv({"1", "1", "0", "0", "0", "0"}), rv({"1", "1", "0", "0", "0", "0"})}, standard_kahler()) ==
          "normalization fails: ReΩ.ImΩ=0");
    CHECK(message(standard_form(), rv({"1", "1", "0", "0", "0", "0"})) == "normalization fails: ReΩ.ω=0");
}

TEST_CASE("phase rotation")
{
    FormPair const f{rv({"1", "1", "0", "0"}), rv({"0", "0", "1", "1"})};
    CHECK(phase_rotate(f, UnitPhase(1, 0)) == f);
    FormPair const i = phase_rotate(f, UnitPhase(0, 1));
    CHECK(i.re == Rational(-1) * f.im);
    CHECK(i.im == f.re);
    FormPair const r = phase_rotate(f, UnitPhase(parse_rational("3/5"), parse_rational("4/5")));
    CHECK(r.re == rv({"3/5", "3/5", "-4/5", "-4/5"}));
    IntegerLattice const l = u_plus_u();
    CHECK(pairing(l, r.re, r.re) == pairing(l, r.im, r.im));
    CHECK(pairing(l, r.re, r.im) == 0);
    CHECK(pairing(l, r.re, r.re) + pairing(l, r.im, r.im) == pairing(l, f.re, f.re) + pairing(l, f.im, f.im));
    CHECK(error_kind([] { UnitPhase(1, 1); }) == ErrorKind::NotUnitPhase);
}

TEST_CASE("phase rotation is a group action")
{
    Sampler rng(51);
    FormPair const f{rv({"1", "2", "0", "-1/3"}), rv({"0", "1/2", "1", "1"})};
    for (int t = 0; t < 100; ++t) {
        UnitPhase const a = UnitPhase::from_slope(rng.rational(20));
        UnitPhase const b = UnitPhase::from_slope(rng.rational(20));
        CHECK(phase_rotate(phase_rotate(f, a), b) == phase_rotate(f, a * b));
    }
}
