#include "k3mirror/census.hpp"

namespace k3mirror {

std::string_view to_string(Kodaira k)
{
    return k == Kodaira::I1 ? "I1" : "II";
}

std::optional<Kodaira> parse_kodaira(std::string_view name)
{
    if (name == "I1")
        return Kodaira::I1;
    if (name == "II")
        return Kodaira::II;
    return std::nullopt;
}

CensusReport validate_census(FiberCensus const& c)
{
    std::vector<std::string> violations;
    CensusReport rep;
    for (std::size_t i = 0; i < c.records.size(); ++i) {
        FiberRecord const& r = c.records[i];
        std::string const where = "record " + std::to_string(i) + ": ";
        (r.kodaira == Kodaira::I1 ? rep.i1 : rep.ii) += 1;
        if (!r.fixed) {
            ++rep.non_fixed;
            if (r.real)
                violations.push_back(where + "non-fixed fibre must not carry a real type");
            continue;
        }
        if (!r.real) {
            violations.push_back(where + "fixed fibre needs a real type");
            continue;
        }
        if (r.kodaira == Kodaira::I1) {
            if (*r.real == RealFiberType::CirclePoint)
                ++rep.fixed_circle_point;
            else if (*r.real == RealFiberType::FigureEight)
                ++rep.fixed_figure_eight;
            else
                violations.push_back(where + "fixed I1 must be figure_eight or circle_point");
        } else if (*r.real != RealFiberType::SingularCircle) {
            violations.push_back(where + "fixed II must be singular_circle");
        }
    }
    if (c.bv.is_self_mirror_case())
        violations.push_back("bv: census requires the generic (N, N') case");
    if (c.bv.n < 1 || c.bv.n_prime < 0)
        violations.push_back("bv: need N >= 1 and N' >= 0");
    if (rep.i1 + 2 * rep.ii != 24)
        violations.push_back("#I1+2#II=24: got " + std::to_string(rep.i1) + "+2*" + std::to_string(rep.ii) + "=" +
                             std::to_string(rep.i1 + 2 * rep.ii));
    long const k_cp = rep.fixed_circle_point - 2 * (c.bv.n - 1);
    long const k_fe = rep.fixed_figure_eight - 2 * (c.bv.n_prime - 1);
    if (k_cp < 0)
        violations.push_back("circle_point count: " + std::to_string(rep.fixed_circle_point) + " < 2(N-1)");
    if (k_fe < 0)
        violations.push_back("figure_eight count: " + std::to_string(rep.fixed_figure_eight) + " < 2(N'-1)");
    if (k_cp != k_fe)
        violations.push_back("equal numbers: extra circle_point (" + std::to_string(k_cp) +
                             ") and figure_eight (" + std::to_string(k_fe) + ") counts differ");
    if (rep.non_fixed % 2 != 0)
        violations.push_back("non-fixed count even: got " + std::to_string(rep.non_fixed));

    if (!violations.empty()) {
        std::string msg = "invalid census";
        for (auto const& v : violations)
            msg += "; " + v;
        throw Error(ErrorKind::CensusInvariant, msg);
    }
    rep.k = k_cp;
    return rep;
}

int fiber_contribution(FiberRecord const& r)
{
    if (!r.fixed || r.kodaira != Kodaira::I1 || !r.real)
        return 0;
    switch (*r.real) {
    case RealFiberType::FigureEight: return -6;
    case RealFiberType::CirclePoint: return 6;
    default: return 0;
    }
}

long total_euler(FiberCensus const& c)
{
    validate_census(c);
    long total = 0;
    for (auto const& r : c.records)
        total += fiber_contribution(r);
    long const expected = 12 * (c.bv.n - c.bv.n_prime);
    if (total != expected)
        throw Error(ErrorKind::EulerMismatch, "fibre contributions sum to " + std::to_string(total) +
                                                  ", expected 12(N-N') = " + std::to_string(expected));
    return total;
}

FiberCensus dualize_census(FiberCensus const& c)
{
    validate_census(c);
    FiberCensus out{c.records, mirror_swap(c.bv)};
    for (auto& r : out.records)
        if (r.fixed && r.kodaira == Kodaira::I1 && r.real)
            r.real = real_fiber_dual(*r.real);
    validate_census(out);
    return out;
}

BasePoint::BasePoint(Rational x, Rational y, Rational z, Rational u, Rational v)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), u_(std::move(u)), v_(std::move(v))
{
    if (x_ * x_ + y_ * y_ + z_ * z_ != 1)
        throw Error(ErrorKind::NotOnBase, "(x, y, z) is not on the unit sphere");
    if (u_ * u_ + v_ * v_ != 1)
        throw Error(ErrorKind::NotOnBase, "(u, v) is not on the unit circle");
}

BasePoint BasePoint::involution_image() const
{
    return BasePoint(x_, y_, -z_, u_, -v_);
}

BaseImage base_embed(BasePoint const& p)
{
    return {p.x(), p.y(), p.z() * p.z(), p.u(), p.v() * p.v(), p.z() * p.v()};
}

bool on_base_model(BaseImage const& b)
{
    return b.X * b.X + b.Y * b.Y + b.Z == 1 && b.U * b.U + b.V == 1 && b.W * b.W == b.Z * b.V && b.Z >= 0 &&
           b.V >= 0;
}

} // namespace k3mirror
