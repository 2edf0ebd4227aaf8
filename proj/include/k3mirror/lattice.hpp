#pragma once

// Finite-rank integer lattices with symmetric bilinear forms, sublattices
// given by generator rows, and the integer linear algebra behind them
// (Smith and Hermite normal forms, integer kernels, saturation).
//
// All vectors are in ambient coordinates. Every function is pure.

#include <optional>

#include "k3mirror/arith.hpp"

namespace k3mirror {

class IntegerLattice {
public:
    /// The rank-0 lattice.
    IntegerLattice() = default;
    /// Throws InvalidArgument unless gram is square and symmetric.
    explicit IntegerLattice(IntMatrix gram);

    std::size_t rank() const { return gram_.rows(); }
    IntMatrix const& gram() const { return gram_; }
    /// All diagonal entries even.
    bool is_even() const;

    friend bool operator==(IntegerLattice const& a, IntegerLattice const& b) { return a.gram_ == b.gram_; }
    friend bool operator!=(IntegerLattice const& a, IntegerLattice const& b) { return !(a == b); }

private:
    IntMatrix gram_;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(Signature const&, Signature const&) = default;
};

struct DetSignature {
    Integer det;
    Signature signature;
};

/// Generators (rows of `basis`) of a sublattice, written in the coordinates of
/// the ambient lattice. Rows must be linearly independent over Q.
class Sublattice {
public:
    Sublattice(IntegerLattice ambient, IntMatrix basis);

    /// The ambient lattice as a sublattice of itself, basis = identity.
    static Sublattice whole(IntegerLattice const& ambient);
    /// Sublattice spanned by an arbitrary (possibly dependent) generating set,
    /// stored with its Hermite normal form basis.
    static Sublattice generated_by(IntegerLattice const& ambient, IntMatrix const& generators);

    IntegerLattice const& ambient() const { return ambient_; }
    IntMatrix const& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    LatticeVector generator(std::size_t i) const { return basis_.row(i); }

    /// basis · gram · basisᵀ.
    IntMatrix induced_gram() const;
    IntegerLattice induced() const { return IntegerLattice(induced_gram()); }

private:
    IntegerLattice ambient_;
    IntMatrix basis_;
};

struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;

    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

Integer pairing(IntegerLattice const& lattice, LatticeVector const& v, LatticeVector const& w);
Rational pairing(IntegerLattice const& lattice, RationalVector const& v, RationalVector const& w);

/// gram · v, i.e. the linear form w ↦ pairing(v, w) as a coordinate row.
LatticeVector form_of(IntegerLattice const& lattice, LatticeVector const& v);
RationalVector form_of(IntegerLattice const& lattice, RationalVector const& v);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix const& m);

/// Inertia by congruence diagonalization over Q.
Signature signature(IntegerLattice const& lattice);

DetSignature det_and_signature(IntegerLattice const& lattice);

/// left · a · right = diag with d₁ | d₂ | …, all dᵢ ≥ 0, left and right unimodular.
SmithDecomposition smith_normal_form(IntMatrix const& a);

/// Row-style Hermite normal form of the row span; zero rows dropped. Pivots are
/// positive and entries above a pivot are reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix const& a);

/// Rows form a basis of {x ∈ Zⁿ : a·x = 0}, in Hermite normal form.
IntMatrix integer_kernel(IntMatrix const& a);

Sublattice orthogonal_complement(Sublattice const& s);
Sublattice saturation(Sublattice const& s);

/// gcd of |pairing(v, wᵢ)| over a basis {wᵢ} of s. Throws ZeroVector or
/// NotInLattice.
Integer divisibility(Sublattice const& s, LatticeVector const& v);

/// True iff v is not a multiple k·w, k > 1, of some w ∈ s. Throws
/// NotInLattice, or ZeroVector for v = 0.
bool is_primitive(Sublattice const& s, LatticeVector const& v);

IntegerLattice direct_sum(IntegerLattice const& a, IntegerLattice const& b);

/// Coefficients c with c·basis = v if v lies in the rational span of s.
std::optional<RationalVector> rational_coordinates(Sublattice const& s, RationalVector const& v);
/// Integer coefficients c with c·basis = v if v ∈ s.
std::optional<LatticeVector> lattice_coordinates(Sublattice const& s, LatticeVector const& v);

bool in_rational_span(Sublattice const& s, RationalVector const& v);
bool contains(Sublattice const& s, LatticeVector const& v);

/// c·basis in ambient coordinates.
LatticeVector combine(Sublattice const& s, LatticeVector const& coeffs);
RationalVector combine(Sublattice const& s, RationalVector const& coeffs);

/// Equality of the Z-spans (same ambient required).
bool same_span(Sublattice const& a, Sublattice const& b);

/// Sublattice spanned by the generators of a and b together.
Sublattice span_union(Sublattice const& a, Sublattice const& b);

/// [s : t] for t ⊆ s of equal rank, computed from integer coordinates of t's
/// generators in s. Throws NotInLattice if t ⊄ s, DimensionMismatch if ranks differ.
Integer index_in(Sublattice const& s, Sublattice const& t);

/// Orthogonal projection onto s ⊗ Q along its orthogonal complement. Requires
/// the induced form on s to be nondegenerate.
RationalVector orthogonal_projection(Sublattice const& s, RationalVector const& v);

} // namespace k3mirror
