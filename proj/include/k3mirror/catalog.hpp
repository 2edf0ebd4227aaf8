#pragma once

// Named lattices: the hyperbolic planes U(m), the negative definite E8 and
// the K3 lattice.
//
// K3 lattice basis indexing (fixed, used by every downstream example):
//   0,1   first U     (e₁, f₁)
//   2,3   second U    (e₂, f₂)
//   4,5   third U     (e₃, f₃)
//   6..13  first E8(−1)
//   14..21 second E8(−1)

#include <string_view>

#include "k3mirror/lattice.hpp"

namespace k3mirror {

/// Gram [[0,m],[m,0]]. Throws OutOfRange for m ≤ 0.
IntegerLattice hyperbolic_plane(long m);

/// Negated E8 Cartan matrix (Bourbaki node order, node 2 attached to node 4).
IntegerLattice e8_minus();

/// U ⊕ U ⊕ U ⊕ E8(−1) ⊕ E8(−1).
IntegerLattice k3_lattice();

/// Parses "U:m", "E8-" or "K3". Returns nullopt for anything else.
std::optional<IntegerLattice> catalog_lattice(std::string_view name);

} // namespace k3mirror
