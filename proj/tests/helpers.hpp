#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>

#include "k3mirror/catalog.hpp"
#include "k3mirror/lattice.hpp"

namespace testing {

using namespace k3mirror;

inline LatticeVector iv(std::initializer_list<long> xs)
{
    LatticeVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline RationalVector rv(std::initializer_list<char const*> xs)
{
    RationalVector v;
    for (auto const* x : xs)
        v.push_back(parse_rational(x));
    return v;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows)
{
    return IntMatrix::from_rows(rows);
}

inline IntegerLattice u_plus_u()
{
    return direct_sum(hyperbolic_plane(1), hyperbolic_plane(1));
}

inline Sublattice whole(IntegerLattice const& l)
{
    return Sublattice::whole(l);
}

template <class F>
ErrorKind error_kind(F&& f)
{
    try {
        f();
    } catch (Error const& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

} // namespace testing
