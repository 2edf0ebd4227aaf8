#include "k3mirror/mirror_lattice.hpp"

#include <cmath>

namespace k3mirror {

std::vector<LatticeVector> find_isotropic(Sublattice const& t, long height, std::uint64_t max_candidates)
{
    if (height < 1)
        throw Error(ErrorKind::OutOfRange, "height must be >= 1");
    std::size_t const r = t.rank();
    double const count = std::pow(2.0 * static_cast<double>(height) + 1.0, static_cast<double>(r));
    if (count > static_cast<double>(max_candidates))
        throw Error(ErrorKind::SearchTooLarge, "isotropic search over " + std::to_string(r) +
                                                   " coefficients at height " + std::to_string(height) +
                                                   " exceeds the candidate limit");
    IntMatrix const gram = t.induced_gram();
    std::vector<LatticeVector> found;
    if (r == 0)
        return found;

    std::vector<long> c(r, -height);
    for (;;) {
        // First nonzero coefficient positive: one representative per sign class.
        std::size_t first = 0;
        while (first < r && c[first] == 0)
            ++first;
        if (first < r && c[first] > 0) {
            LatticeVector coeffs(c.begin(), c.end());
            Integer norm = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    norm += coeffs[i] * gram(i, j) * coeffs[j];
            if (norm == 0 && content(coeffs) == 1)
                found.push_back(combine(t, coeffs));
        }
        std::size_t k = 0;
        while (k < r && c[k] == height) {
            c[k] = -height;
            ++k;
        }
        if (k == r)
            break;
        ++c[k];
    }
    return found;
}

AdmissiblePair check_admissible(Sublattice const& t, LatticeVector const& e, LatticeVector const& e_prime, long m)
{
    if (m < 1)
        throw Error(ErrorKind::OutOfRange, "m must be >= 1");
    auto const& lattice = t.ambient();
    if (e.size() != lattice.rank() || e_prime.size() != lattice.rank())
        throw Error(ErrorKind::DimensionMismatch, "E and E' must have ambient length " + std::to_string(lattice.rank()));
    if (!contains(t, e))
        throw Error(ErrorKind::NotInLattice, "E is not an element of T");
    if (!contains(t, e_prime))
        throw Error(ErrorKind::NotInLattice, "E' is not an element of T");
    if (is_zero(e) || is_zero(e_prime))
        throw Error(ErrorKind::ZeroVector, "E and E' must be nonzero");
    if (pairing(lattice, e, e) != 0)
        throw Error(ErrorKind::NotIsotropic, "E is not isotropic");
    if (pairing(lattice, e_prime, e_prime) != 0)
        throw Error(ErrorKind::NotIsotropic, "E' is not isotropic");
    Integer const ee = pairing(lattice, e, e_prime);
    if (ee != m)
        throw Error(ErrorKind::WrongPairing, "E.E' = " + ee.get_str() + ", expected " + std::to_string(m));
    if (!is_primitive(t, e))
        throw Error(ErrorKind::NotPrimitive, "E is not primitive in T");
    if (!is_primitive(t, e_prime))
        throw Error(ErrorKind::NotPrimitive, "E' is not primitive in T");
    // Pairings with E fill div(E)·Z, so "no α with 0 < α·E < m" is div(E) >= m;
    // E·E' = m forces div(E) | m, hence equality.
    Integer const de = divisibility(t, e);
    if (de < m)
        throw Error(ErrorKind::DivisibilityFailure,
                    "div_T(E) = " + de.get_str() + " < m: some α ∈ T has 0 < α.E < m");
    Integer const dep = divisibility(t, e_prime);
    if (dep < m)
        throw Error(ErrorKind::DivisibilityFailure,
                    "div_T(E') = " + dep.get_str() + " < m: some α ∈ T has 0 < α.E' < m");
    return {t, e, e_prime, m};
}

LatticeVector mirror_embedding(AdmissiblePair const& pair, LatticeVector const& alpha)
{
    auto const& lattice = pair.transcendental.ambient();
    if (!contains(pair.transcendental, alpha))
        throw Error(ErrorKind::NotInLattice, "α is not an element of T");
    if (pairing(lattice, alpha, pair.e) != 0)
        throw Error(ErrorKind::NotInLattice, "α is not orthogonal to E");
    Integer const ae = pairing(lattice, alpha, pair.e_prime);
    Integer const m = pair.m;
    if (!mpz_divisible_p(ae.get_mpz_t(), m.get_mpz_t()))
        throw Error(ErrorKind::DivisibilityFailure, "α.E' is not divisible by m");
    Integer const q = ae / m;
    return alpha - q * pair.e;
}

MirrorSplit construct_mirror(AdmissiblePair const& pair)
{
    Sublattice const& t = pair.transcendental;
    auto const& lattice = t.ambient();

    // (ZE)⊥_T: coefficients c with c·(basis·gram·E) = 0.
    LatticeVector const e_form = mat_vec(t.basis(), form_of(lattice, pair.e));
    IntMatrix constraint(1, t.rank());
    for (std::size_t j = 0; j < t.rank(); ++j)
        constraint(0, j) = e_form[j];
    IntMatrix const coeffs = integer_kernel(constraint);

    IntMatrix images(0, lattice.rank());
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
        images.append_row(mirror_embedding(pair, combine(t, coeffs.row(i))));
    Sublattice const mirror = saturation(Sublattice::generated_by(lattice, images));

    IntMatrix p_basis(0, lattice.rank());
    p_basis.append_row(pair.e);
    p_basis.append_row(pair.e_prime);
    Sublattice const hyperbolic(lattice, p_basis);

    for (std::size_t i = 0; i < mirror.rank(); ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (pairing(lattice, mirror.generator(i), hyperbolic.generator(j)) != 0)
                throw Error(ErrorKind::SplittingIndex, "mirror lattice is not orthogonal to P");
    if (mirror.rank() + 2 != t.rank())
        throw Error(ErrorKind::SplittingIndex, "rank(M̌) = " + std::to_string(mirror.rank()) + ", expected rank(T) - 2");

    Sublattice const sum = span_union(hyperbolic, mirror);
    Integer const index = index_in(t, sum);
    if (index != 1)
        throw Error(ErrorKind::SplittingIndex, "P ⊕ M̌ has index " + index.get_str() + " in T");

    // Second formulation: |det P|·|det M̌| = |det T|·index².
    Integer const lhs = abs(determinant(hyperbolic.induced_gram())) * abs(determinant(mirror.induced_gram()));
    Integer const rhs = abs(determinant(t.induced_gram())) * index * index;
    if (lhs != rhs)
        throw Error(ErrorKind::SplittingIndex, "determinant formulation disagrees with the coordinate index");

    return {pair, hyperbolic, mirror, pair.e_prime - pair.e};
}

} // namespace k3mirror
