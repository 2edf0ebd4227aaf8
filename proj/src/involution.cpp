#include "k3mirror/involution.hpp"

namespace k3mirror {

LatticeInvolution::LatticeInvolution(IntegerLattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix))
{
    std::size_t const n = lattice_.rank();
    if (matrix_.rows() != n || matrix_.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "involution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (matrix_ * matrix_ != IntMatrix::identity(n))
        throw Error(ErrorKind::NotInvolution, "matrix does not square to the identity");
    if (matrix_.transpose() * lattice_.gram() * matrix_ != lattice_.gram())
        throw Error(ErrorKind::NotInvolution, "matrix does not preserve the bilinear form");
}

InvariantSplit invariant_sublattices(LatticeInvolution const& rho)
{
    std::size_t const n = rho.lattice().rank();
    IntMatrix const id = IntMatrix::identity(n);
    Sublattice plus(rho.lattice(), integer_kernel(rho.matrix() - id));
    Sublattice minus(rho.lattice(), integer_kernel(rho.matrix() + id));
    if (plus.rank() + minus.rank() != n)
        throw Error(ErrorKind::NotInvolution, "eigenlattices do not have complementary ranks");
    return {std::move(plus), std::move(minus)};
}

IntMatrix reflection_matrix(Sublattice const& p)
{
    auto const& l = p.ambient();
    std::size_t const n = l.rank();
    // proj_P = basisᵀ · G_P⁻¹ · basis · gram on column vectors.
    RatMatrix const b = to_rational(p.basis());
    RatMatrix const proj = b.transpose() * inverse(to_rational(p.induced_gram())) * b * to_rational(l.gram());
    RatMatrix const r = Rational(2) * proj - RatMatrix::identity(n);
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r(i, j).get_den() != 1)
                throw Error(ErrorKind::NonIntegralReflection, "r_P is not integral on the ambient lattice");
            out(i, j) = r(i, j).get_num();
        }
    return out;
}

LatticeInvolution mirror_involution(LatticeInvolution const& rho, MirrorSplit const& split)
{
    if (split.pair.m != 1)
        throw Error(ErrorKind::IncompatibleSplit, "the mirror involution needs an m = 1 split, got m = " +
                                                      std::to_string(split.pair.m));
    if (split.pair.transcendental.ambient() != rho.lattice())
        throw Error(ErrorKind::IncompatibleSplit, "split and involution live in different lattices");
    InvariantSplit const eig = invariant_sublattices(rho);
    if (!same_span(eig.minus, split.pair.transcendental))
        throw Error(ErrorKind::IncompatibleSplit, "anti-invariant lattice of the involution is not the split's T");
    IntMatrix const r_p = reflection_matrix(split.hyperbolic);
    return LatticeInvolution(rho.lattice(), r_p * rho.matrix());
}

SymplecticSpace::SymplecticSpace(RatMatrix form) : form_(std::move(form))
{
    if (!form_.is_square() || form_.rows() == 0 || form_.rows() % 2 != 0)
        throw Error(ErrorKind::NotSymplectic, "symplectic form must be square of positive even size");
    if (form_.transpose() != -form_)
        throw Error(ErrorKind::NotSymplectic, "form is not skew-symmetric");
    if (rational_rank(form_) != form_.rows())
        throw Error(ErrorKind::NotSymplectic, "form is degenerate");
}

SymplecticSpace SymplecticSpace::standard(std::size_t dim)
{
    RatMatrix f(dim, dim);
    for (std::size_t k = 0; k + 1 < dim; k += 2) {
        f(k, k + 1) = 1;
        f(k + 1, k) = -1;
    }
    return SymplecticSpace(std::move(f));
}

RatMatrix transpose_defect(SymplecticSpace const& v, SymplecticSpace const& w, RatMatrix const& phi)
{
    if (v.dim() != w.dim() || phi.rows() != w.dim() || phi.cols() != v.dim())
        throw Error(ErrorKind::DimensionMismatch, "φ must be a square map between spaces of equal dimension");
    if (phi.transpose() * w.form() * phi != -v.form())
        throw Error(ErrorKind::NotAntiSymplectic, "φ does not satisfy ω_W(φa, φb) = −ω_V(a, b)");
    // Ψ_V(x)_j = Σ_i x_i ω_V(i, j), so Ψ_V = ω_Vᵀ on coordinates.
    RatMatrix const psi_v = v.form().transpose();
    RatMatrix const psi_w_inv = inverse(w.form().transpose());
    RatMatrix const phi_inv_t = inverse(phi).transpose();
    return psi_w_inv * phi_inv_t * psi_v + phi;
}

std::string_view to_string(RealFiberType t)
{
    switch (t) {
    case RealFiberType::FigureEight: return "figure_eight";
    case RealFiberType::CirclePoint: return "circle_point";
    case RealFiberType::SingularCircle: return "singular_circle";
    case RealFiberType::SmoothOneCircle: return "smooth_one_circle";
    case RealFiberType::SmoothTwoCircles: return "smooth_two_circles";
    }
    return "unknown";
}

std::optional<RealFiberType> parse_real_fiber_type(std::string_view name)
{
    for (auto t : {RealFiberType::FigureEight, RealFiberType::CirclePoint, RealFiberType::SingularCircle,
                   RealFiberType::SmoothOneCircle, RealFiberType::SmoothTwoCircles})
        if (to_string(t) == name)
            return t;
    return std::nullopt;
}

RealFiberType real_fiber_dual(RealFiberType t)
{
    switch (t) {
    case RealFiberType::FigureEight: return RealFiberType::CirclePoint;
    case RealFiberType::CirclePoint: return RealFiberType::FigureEight;
    case RealFiberType::SingularCircle: return RealFiberType::SingularCircle;
    default:
        throw Error(ErrorKind::SmoothFiberType, std::string("smooth real fibre type ") + std::string(to_string(t)) +
                                                    " has no singular dual");
    }
}

} // namespace k3mirror
