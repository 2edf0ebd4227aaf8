#pragma once

// Exact scalar, vector and dense matrix types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3mirror/error.hpp"

namespace k3mirror {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coordinates of a lattice element in the ambient basis.
using LatticeVector = std::vector<Integer>;
/// Coordinates of an element of (ambient lattice) ⊗ Q.
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix. Used with Integer and Rational entries.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::vector<std::vector<T>> const& rows)
    {
        if (rows.empty())
            return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows)
    {
        std::vector<std::vector<T>> v;
        for (auto const& r : rows) {
            std::vector<T> row;
            for (long x : r)
                row.emplace_back(x);
            v.push_back(std::move(row));
        }
        return from_rows(v);
    }

    /// rows x cols with zero rows allowed to keep the column count.
    static Matrix with_shape(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void append_row(std::vector<T> const& r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    bool is_zero() const
    {
        for (auto const& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                T const& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, Matrix const& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(T const& s, Matrix a)
    {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    friend bool operator==(Matrix const& a, Matrix const& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(Matrix const& a, Matrix const& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(IntMatrix const& m);
RationalVector to_rational(LatticeVector const& v);

/// Matrix times column vector.
template <class T>
std::vector<T> mat_vec(Matrix<T> const& m, std::vector<T> const& v)
{
    if (m.cols() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix/vector shape mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

RationalVector operator+(RationalVector a, RationalVector const& b);
RationalVector operator-(RationalVector a, RationalVector const& b);
RationalVector operator*(Rational const& s, RationalVector v);
LatticeVector operator+(LatticeVector a, LatticeVector const& b);
LatticeVector operator-(LatticeVector a, LatticeVector const& b);
LatticeVector operator*(Integer const& s, LatticeVector v);

bool is_zero(RationalVector const& v);
bool is_zero(LatticeVector const& v);

/// gcd of absolute values; 0 for the empty or zero vector.
Integer content(LatticeVector const& v);

/// Unit vector of length n with a 1 in slot i.
LatticeVector unit_vector(std::size_t n, std::size_t i);

/// Exact inverse of a square rational matrix; throws Singular if not invertible.
RatMatrix inverse(RatMatrix const& m);

/// Rank over Q.
std::size_t rational_rank(RatMatrix m);

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(Rational const& q);
/// Accepts "p", "p/q", "-p/q"; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// Complex number with exact rational parts.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    ComplexRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend ComplexRational operator+(ComplexRational const& a, ComplexRational const& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(ComplexRational const& a, ComplexRational const& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(ComplexRational const& a, ComplexRational const& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Division through the conjugate.
    friend ComplexRational operator/(ComplexRational const& a, ComplexRational const& b)
    {
        if (b.is_zero())
            throw Error(ErrorKind::Singular, "complex division by zero");
        Rational n = b.norm();
        ComplexRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    ComplexRational operator-() const { return {-re, -im}; }
    friend bool operator==(ComplexRational const& a, ComplexRational const& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(ComplexRational const& a, ComplexRational const& b) { return !(a == b); }
};

std::string to_string(ComplexRational const& z);

} // namespace k3mirror
