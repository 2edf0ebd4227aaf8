#include "k3mirror/bv.hpp"

#include <string>

#include "k3mirror/error.hpp"

namespace k3mirror {

BVData BVData::generic(long n, long n_prime)
{
    if (n < 1 || n_prime < 0)
        throw Error(ErrorKind::OutOfRange, "need N >= 1 and N' >= 0, got (" + std::to_string(n) + ", " +
                                               std::to_string(n_prime) + ")");
    return {n, n_prime, FixedLocusCase::Generic};
}

BVData BVData::self_mirror(FixedLocusCase c)
{
    if (c == FixedLocusCase::Generic)
        throw Error(ErrorKind::InvalidArgument, "generic fixed locus needs (N, N')");
    return {0, 0, c};
}

namespace {

void require_generic(BVData const& d)
{
    if (d.is_self_mirror_case())
        throw Error(ErrorKind::SelfMirrorCase, "Hodge/Euler formulas only cover the rational-plus-genus-N' fixed locus");
    if (d.n < 1 || d.n_prime < 0)
        throw Error(ErrorKind::OutOfRange, "need N >= 1 and N' >= 0");
}

} // namespace

HodgePair hodge_numbers(BVData const& d)
{
    require_generic(d);
    HodgePair h{11 + 5 * d.n - d.n_prime, 11 + 5 * d.n_prime - d.n};
    if (h.h11 <= 0 || h.h21 <= 0)
        throw Error(ErrorKind::NonPositiveHodge, "Hodge numbers (" + std::to_string(h.h11) + ", " +
                                                     std::to_string(h.h21) + ") are not both positive");
    return h;
}

long euler_characteristic(BVData const& d)
{
    require_generic(d);
    return 12 * (d.n - d.n_prime);
}

BVData mirror_swap(BVData const& d)
{
    if (d.is_self_mirror_case())
        return d;
    if (d.n_prime < 1)
        throw Error(ErrorKind::NoMirrorFamily, "N' = 0: the involution has no mirror family");
    return BVData::generic(d.n_prime, d.n);
}

} // namespace k3mirror
