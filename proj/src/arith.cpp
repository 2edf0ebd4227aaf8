#include "k3mirror/arith.hpp"

#include <cctype>

namespace k3mirror {

std::string_view kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::NotInLattice: return "not_in_lattice";
    case ErrorKind::ZeroVector: return "zero_vector";
    case ErrorKind::NotIsotropic: return "not_isotropic";
    case ErrorKind::WrongPairing: return "wrong_pairing";
    case ErrorKind::DivisibilityFailure: return "divisibility_failure";
    case ErrorKind::NotPrimitive: return "not_primitive";
    case ErrorKind::SplittingIndex: return "splitting_index";
    case ErrorKind::SearchTooLarge: return "search_too_large";
    case ErrorKind::NotInTube: return "not_in_tube";
    case ErrorKind::NotAPeriod: return "not_a_period";
    case ErrorKind::NormalizationImpossible: return "normalization_impossible";
    case ErrorKind::NormalizationFailure: return "normalization_failure";
    case ErrorKind::NotUnitPhase: return "not_unit_phase";
    case ErrorKind::NotInvolution: return "not_involution";
    case ErrorKind::IncompatibleSplit: return "incompatible_split";
    case ErrorKind::NonIntegralReflection: return "non_integral_reflection";
    case ErrorKind::NotSymplectic: return "not_symplectic";
    case ErrorKind::NotAntiSymplectic: return "not_anti_symplectic";
    case ErrorKind::SmoothFiberType: return "smooth_fiber_type";
    case ErrorKind::NonPositiveHodge: return "nonpositive_hodge";
    case ErrorKind::SelfMirrorCase: return "self_mirror_case";
    case ErrorKind::NoMirrorFamily: return "no_mirror_family";
    case ErrorKind::CensusInvariant: return "census_invariant";
    case ErrorKind::EulerMismatch: return "euler_mismatch";
    case ErrorKind::NotOnBase: return "not_on_base";
    }
    return "unknown";
}

RatMatrix to_rational(IntMatrix const& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RationalVector to_rational(LatticeVector const& v)
{
    RationalVector r;
    r.reserve(v.size());
    for (auto const& x : v)
        r.emplace_back(x);
    return r;
}

namespace {

template <class V>
void check_same_length(V const& a, V const& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

RationalVector operator+(RationalVector a, RationalVector const& b)
{
    check_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

RationalVector operator-(RationalVector a, RationalVector const& b)
{
    check_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

RationalVector operator*(Rational const& s, RationalVector v)
{
    for (auto& x : v)
        x *= s;
    return v;
}

LatticeVector operator+(LatticeVector a, LatticeVector const& b)
{
    check_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

LatticeVector operator-(LatticeVector a, LatticeVector const& b)
{
    check_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

LatticeVector operator*(Integer const& s, LatticeVector v)
{
    for (auto& x : v)
        x *= s;
    return v;
}

bool is_zero(RationalVector const& v)
{
    for (auto const& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(LatticeVector const& v)
{
    for (auto const& x : v)
        if (x != 0)
            return false;
    return true;
}

Integer content(LatticeVector const& v)
{
    Integer g = 0;
    for (auto const& x : v)
        g = gcd(g, x);
    return g;
}

LatticeVector unit_vector(std::size_t n, std::size_t i)
{
    LatticeVector v(n, Integer(0));
    v.at(i) = 1;
    return v;
}

RatMatrix inverse(RatMatrix const& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    std::size_t const n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw Error(ErrorKind::Singular, "matrix is singular");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        Rational const piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational const f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t rational_rank(RatMatrix a)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(p, rank);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, c) == 0)
                continue;
            Rational const f = a(r, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::string to_string(Rational const& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return std::string(s);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || (den.front() == '-' || den.front() == '+'))
        throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(ComplexRational const& z)
{
    if (z.im == 0)
        return to_string(z.re);
    std::string s = z.re == 0 ? std::string() : to_string(z.re) + (z.im > 0 ? "+" : "");
    return s + to_string(z.im) + "i";
}

} // namespace k3mirror
