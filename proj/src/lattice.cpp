#include "k3mirror/lattice.hpp"

#include <algorithm>

namespace k3mirror {

IntegerLattice::IntegerLattice(IntMatrix gram) : gram_(std::move(gram))
{
    if (!gram_.is_symmetric())
        throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square and symmetric");
}

bool IntegerLattice::is_even() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        if (!mpz_even_p(gram_(i, i).get_mpz_t()))
            return false;
    return true;
}

Sublattice::Sublattice(IntegerLattice ambient, IntMatrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis))
{
    if (basis_.rows() == 0) {
        basis_ = IntMatrix(0, ambient_.rank());
        return;
    }
    if (basis_.cols() != ambient_.rank())
        throw Error(ErrorKind::DimensionMismatch,
                    "sublattice generators have " + std::to_string(basis_.cols()) + " coordinates, ambient rank is " +
                        std::to_string(ambient_.rank()));
    if (rational_rank(to_rational(basis_)) != basis_.rows())
        throw Error(ErrorKind::InvalidArgument, "sublattice generators are linearly dependent");
}

Sublattice Sublattice::whole(IntegerLattice const& ambient)
{
    return Sublattice(ambient, IntMatrix::identity(ambient.rank()));
}

Sublattice Sublattice::generated_by(IntegerLattice const& ambient, IntMatrix const& generators)
{
    if (generators.rows() == 0)
        return Sublattice(ambient, IntMatrix(0, ambient.rank()));
    if (generators.cols() != ambient.rank())
        throw Error(ErrorKind::DimensionMismatch, "generator length does not match ambient rank");
    return Sublattice(ambient, hermite_normal_form(generators));
}

IntMatrix Sublattice::induced_gram() const
{
    return basis_ * ambient_.gram() * basis_.transpose();
}

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    std::size_t const n = std::min(diag.rows(), diag.cols());
    while (r < n && diag(r, r) != 0)
        ++r;
    return r;
}

Integer pairing(IntegerLattice const& lattice, LatticeVector const& v, LatticeVector const& w)
{
    if (v.size() != lattice.rank() || w.size() != lattice.rank())
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match lattice rank " +
                                                      std::to_string(lattice.rank()));
    Integer s = 0;
    auto const& g = lattice.gram();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            s += v[i] * g(i, j) * w[j];
    }
    return s;
}

Rational pairing(IntegerLattice const& lattice, RationalVector const& v, RationalVector const& w)
{
    if (v.size() != lattice.rank() || w.size() != lattice.rank())
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match lattice rank " +
                                                      std::to_string(lattice.rank()));
    Rational s = 0;
    auto const& g = lattice.gram();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (g(i, j) != 0)
                s += v[i] * g(i, j) * w[j];
    }
    return s;
}

LatticeVector form_of(IntegerLattice const& lattice, LatticeVector const& v)
{
    return mat_vec(lattice.gram(), v);
}

RationalVector form_of(IntegerLattice const& lattice, RationalVector const& v)
{
    return mat_vec(to_rational(lattice.gram()), v);
}

Integer determinant(IntMatrix const& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Signature signature(IntegerLattice const& lattice)
{
    RatMatrix a = to_rational(lattice.gram());
    std::size_t const n = a.rows();
    Signature sig;
    auto congruent_swap = [&a](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0)
            ++p;
        if (p == n) {
            // No usable diagonal pivot: look for a_ij ≠ 0 and use e_i ← e_i + e_j.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                sig.zero += n - k;
                break;
            }
            for (std::size_t c = 0; c < n; ++c)
                a(pi, c) += a(pj, c);
            for (std::size_t r = 0; r < n; ++r)
                a(r, pi) += a(r, pj);
            p = pi;
        }
        congruent_swap(p, k);
        Rational const piv = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0)
                continue;
            Rational const f = a(r, k) / piv;
            for (std::size_t c = k; c < n; ++c)
                a(r, c) -= f * a(k, c);
            for (std::size_t c = k; c < n; ++c)
                a(c, r) = a(r, c);
        }
        if (piv > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

DetSignature det_and_signature(IntegerLattice const& lattice)
{
    return {determinant(lattice.gram()), signature(lattice)};
}

SmithDecomposition smith_normal_form(IntMatrix const& a)
{
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    IntMatrix d = a;
    IntMatrix left = IntMatrix::identity(m);
    IntMatrix right = IntMatrix::identity(n);

    auto row_axpy = [&](std::size_t dst, std::size_t src, Integer const& q) {
        for (std::size_t j = 0; j < n; ++j)
            d(dst, j) -= q * d(src, j);
        for (std::size_t j = 0; j < m; ++j)
            left(dst, j) -= q * left(src, j);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, Integer const& q) {
        for (std::size_t i = 0; i < m; ++i)
            d(i, dst) -= q * d(i, src);
        for (std::size_t i = 0; i < n; ++i)
            right(i, dst) -= q * right(i, src);
    };

    std::size_t const steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        bool found_any = true;
        for (;;) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                found_any = false;
                break;
            }
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = d(i, t) / d(t, t);
                row_axpy(i, t, q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = d(t, j) / d(t, t);
                col_axpy(j, t, q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Enforce d_t | every remaining entry.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            row_axpy(t, bad, Integer(-1));
        }
        if (!found_any)
            break;
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j)
                d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < m; ++j)
                left(t, j) = -left(t, j);
        }
    }
    return {std::move(left), std::move(d), std::move(right)};
}

IntMatrix hermite_normal_form(IntMatrix const& a)
{
    IntMatrix h = a;
    std::size_t const m = h.rows();
    std::size_t const n = h.cols();
    auto row_axpy = [&](std::size_t dst, std::size_t src, Integer const& q) {
        for (std::size_t j = 0; j < n; ++j)
            h(dst, j) -= q * h(src, j);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c))))
                    p = i;
            if (p == m)
                break;
            h.swap_rows(p, r);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                row_axpy(i, r, q);
                if (h(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0)
            for (std::size_t j = 0; j < n; ++j)
                h(r, j) = -h(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0)
                row_axpy(i, r, q);
        }
        ++r;
    }
    IntMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = h(i, j);
    return out;
}

IntMatrix integer_kernel(IntMatrix const& a)
{
    std::size_t const n = a.cols();
    if (a.rows() == 0)
        return IntMatrix::identity(n);
    SmithDecomposition snf = smith_normal_form(a);
    std::size_t const r = snf.rank();
    IntMatrix k(n - r, n);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k(i - r, j) = snf.right(j, i);
    if (k.rows() == 0)
        return k;
    return hermite_normal_form(k);
}

Sublattice orthogonal_complement(Sublattice const& s)
{
    IntMatrix const forms = s.basis() * s.ambient().gram();
    return Sublattice(s.ambient(), integer_kernel(forms));
}

Sublattice saturation(Sublattice const& s)
{
    if (s.rank() == 0)
        return s;
    IntMatrix const annihilator = integer_kernel(s.basis());
    return Sublattice(s.ambient(), integer_kernel(annihilator));
}

namespace {

void require_member(Sublattice const& s, LatticeVector const& v, std::optional<LatticeVector>& coords)
{
    if (v.size() != s.ambient().rank())
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match ambient rank");
    coords = lattice_coordinates(s, v);
    if (!coords)
        throw Error(ErrorKind::NotInLattice, "vector is not an element of the sublattice");
}

} // namespace

Integer divisibility(Sublattice const& s, LatticeVector const& v)
{
    std::optional<LatticeVector> coords;
    require_member(s, v, coords);
    if (is_zero(v))
        throw Error(ErrorKind::ZeroVector, "divisibility of the zero vector is undefined");
    Integer g = 0;
    for (std::size_t i = 0; i < s.rank(); ++i)
        g = gcd(g, pairing(s.ambient(), v, s.generator(i)));
    return g;
}

bool is_primitive(Sublattice const& s, LatticeVector const& v)
{
    std::optional<LatticeVector> coords;
    require_member(s, v, coords);
    if (is_zero(v))
        throw Error(ErrorKind::ZeroVector, "primitivity of the zero vector is undefined");
    return content(*coords) == 1;
}

IntegerLattice direct_sum(IntegerLattice const& a, IntegerLattice const& b)
{
    std::size_t const n = a.rank() + b.rank();
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
    return IntegerLattice(std::move(g));
}

std::optional<RationalVector> rational_coordinates(Sublattice const& s, RationalVector const& v)
{
    std::size_t const n = s.ambient().rank();
    std::size_t const r = s.rank();
    if (v.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match ambient rank");
    // Solve basisᵀ·c = v by elimination on the augmented n × (r+1) system.
    RatMatrix aug(n, r + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            aug(i, j) = Rational(s.basis()(j, i));
        aug(i, r) = v[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < n; ++c) {
        std::size_t p = row;
        while (p < n && aug(p, c) == 0)
            ++p;
        if (p == n)
            continue;
        aug.swap_rows(p, row);
        Rational const piv = aug(row, c);
        for (std::size_t j = c; j <= r; ++j)
            aug(row, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug(i, c) == 0)
                continue;
            Rational const f = aug(i, c);
            for (std::size_t j = c; j <= r; ++j)
                aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug(i, r) != 0)
            return std::nullopt;
    RationalVector c(r, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        c[pivot_col[i]] = aug(i, r);
    return c;
}

std::optional<LatticeVector> lattice_coordinates(Sublattice const& s, LatticeVector const& v)
{
    auto q = rational_coordinates(s, to_rational(v));
    if (!q)
        return std::nullopt;
    LatticeVector c;
    c.reserve(q->size());
    for (auto const& x : *q) {
        if (x.get_den() != 1)
            return std::nullopt;
        c.push_back(x.get_num());
    }
    return c;
}

bool in_rational_span(Sublattice const& s, RationalVector const& v)
{
    return rational_coordinates(s, v).has_value();
}

bool contains(Sublattice const& s, LatticeVector const& v)
{
    return lattice_coordinates(s, v).has_value();
}

LatticeVector combine(Sublattice const& s, LatticeVector const& coeffs)
{
    if (coeffs.size() != s.rank())
        throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match sublattice rank");
    LatticeVector out(s.ambient().rank(), Integer(0));
    for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += coeffs[i] * s.basis()(i, j);
    return out;
}

RationalVector combine(Sublattice const& s, RationalVector const& coeffs)
{
    if (coeffs.size() != s.rank())
        throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match sublattice rank");
    RationalVector out(s.ambient().rank(), Rational(0));
    for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += coeffs[i] * s.basis()(i, j);
    return out;
}

bool same_span(Sublattice const& a, Sublattice const& b)
{
    if (a.ambient() != b.ambient() || a.rank() != b.rank())
        return false;
    return hermite_normal_form(a.basis()) == hermite_normal_form(b.basis());
}

Sublattice span_union(Sublattice const& a, Sublattice const& b)
{
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::InvalidArgument, "sublattices live in different ambient lattices");
    IntMatrix g = a.basis();
    for (std::size_t i = 0; i < b.rank(); ++i)
        g.append_row(b.generator(i));
    return Sublattice::generated_by(a.ambient(), g);
}

Integer index_in(Sublattice const& s, Sublattice const& t)
{
    if (s.rank() != t.rank())
        throw Error(ErrorKind::DimensionMismatch, "index requires sublattices of equal rank");
    IntMatrix c(t.rank(), s.rank());
    for (std::size_t i = 0; i < t.rank(); ++i) {
        auto coords = lattice_coordinates(s, t.generator(i));
        if (!coords)
            throw Error(ErrorKind::NotInLattice, "generator is not contained in the larger lattice");
        for (std::size_t j = 0; j < s.rank(); ++j)
            c(i, j) = (*coords)[j];
    }
    return abs(determinant(c));
}

RationalVector orthogonal_projection(Sublattice const& s, RationalVector const& v)
{
    RatMatrix const g_inv = inverse(to_rational(s.induced_gram()));
    RationalVector x(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i)
        x[i] = pairing(s.ambient(), v, to_rational(s.generator(i)));
    return combine(s, mat_vec(g_inv, x));
}

} // namespace k3mirror
