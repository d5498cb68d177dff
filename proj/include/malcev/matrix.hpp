#pragma once

/// \file matrix.hpp
/// Dense vectors and matrices over Scalar.
///
/// Matrices act on column coordinate vectors: column j holds the image of
/// the j-th source basis vector.

#include "malcev/error.hpp"
#include "malcev/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace malcev {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector basis_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = Scalar(1);
    return v;
}

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

inline Vector operator+(Vector a, const Vector& b)
{
    if (a.size() != b.size())
        throw input_error("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b)
{
    if (a.size() != b.size())
        throw input_error("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Vector operator*(const Scalar& s, Vector v)
{
    for (auto& x : v)
        x = s * x;
    return v;
}

inline Vector operator-(Vector v)
{
    for (auto& x : v)
        x = -x;
    return v;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Scalar(1);
        return m;
    }

    static Matrix column(const Vector& v)
    {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            m(i, 0) = v[i];
        return m;
    }

    /// Builds from row-major nested lists of integers (test and fixture convenience).
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw input_error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Scalar& at(std::size_t i, std::size_t j)
    {
        if (i >= rows_ || j >= cols_)
            throw input_error("matrix index out of range");
        return (*this)(i, j);
    }
    const Scalar& at(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_)
            throw input_error("matrix index out of range");
        return (*this)(i, j);
    }

    Vector col(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const Vector& v)
    {
        if (v.size() != rows_)
            throw input_error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool all_rational() const
    {
        for (const auto& x : data_)
            if (!x.is_rational())
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Vector apply(const Vector& v) const
    {
        if (v.size() != cols_)
            throw input_error("matrix-vector shape mismatch: " + std::to_string(rows_) + "x" +
                              std::to_string(cols_) + " applied to length " + std::to_string(v.size()));
        Vector out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero())
                continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& a = (*this)(i, j);
                if (!a.is_zero())
                    out[i] += a * v[j];
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw input_error("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& bkj = b(k, j);
                    if (!bkj.is_zero())
                        c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a += b;
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a -= b;
        return a;
    }
    Matrix& operator+=(const Matrix& b)
    {
        check_same_shape(b);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += b.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& b)
    {
        check_same_shape(b);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= b.data_[i];
        return *this;
    }
    friend Matrix operator*(const Scalar& s, Matrix m)
    {
        for (auto& x : m.data_)
            x = s * x;
        return m;
    }
    Matrix operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix substitute(const Assignment& values) const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = x.substitute(values);
        return m;
    }

    const std::vector<Scalar>& data() const { return data_; }

private:
    void check_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw input_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

namespace detail {

// Determinant of the submatrix on rows [first_row, n) and the columns in
// `cols`, by Laplace expansion along the first row with memoization on the
// column subset. Exact over any commutative ring; O(n * 2^n) products.
inline Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& row_ids,
                        const std::vector<std::size_t>& col_ids)
{
    const std::size_t n = row_ids.size();
    if (n == 0)
        return Scalar(1);
    if (n > 24)
        throw input_error("symbolic determinant limited to 24x24");
    // memo[mask] = det of rows [n - popcount(mask), n) restricted to columns in mask
    std::vector<Scalar> memo(std::size_t{1} << n);
    std::vector<bool> done(memo.size(), false);
    memo[0] = Scalar(1);
    done[0] = true;
    for (std::uint32_t mask = 1; mask < memo.size(); ++mask) {
        int k = __builtin_popcount(mask);
        std::size_t row = row_ids[n - static_cast<std::size_t>(k)];
        Scalar sum;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1U << c)))
                continue;
            const auto& a = m(row, col_ids[c]);
            if (!a.is_zero()) {
                auto term = a * memo[mask & ~(1U << c)];
                if (position % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            ++position;
        }
        memo[mask] = std::move(sum);
    }
    return memo.back();
}

inline std::vector<std::size_t> iota(std::size_t n, std::size_t skip = static_cast<std::size_t>(-1))
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip)
            v.push_back(i);
    return v;
}

// Gauss-Jordan over Q. Returns the determinant; fills `inverse` when requested and nonsingular.
inline Rational rational_gauss(const Matrix& m, Matrix* inverse)
{
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j).rational();
        a[i][n + i] = Rational(1);
    }
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rational inv = a[c][c].inverse();
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero())
                continue;
            Rational f = a[r][c];
            for (std::size_t j = c; j < 2 * n; ++j)
                if (!a[c][j].is_zero())
                    a[r][j] -= f * a[c][j];
        }
    }
    if (inverse) {
        *inverse = Matrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                (*inverse)(i, j) = a[i][n + j];
    }
    return det;
}

} // namespace detail

inline Scalar determinant(const Matrix& m)
{
    if (!m.is_square())
        throw input_error("determinant of a non-square matrix");
    if (m.all_rational())
        return Scalar(detail::rational_gauss(m, nullptr));
    return detail::minor_det(m, detail::iota(m.rows()), detail::iota(m.cols()));
}

/// Inverse over the scalar ring. Rational matrices need a nonzero
/// determinant; parametric ones need a unit (single-term) determinant.
inline Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw input_error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (m.all_rational()) {
        Matrix inv;
        if (detail::rational_gauss(m, &inv).is_zero())
            throw not_invertible("matrix is singular");
        return inv;
    }
    Scalar det = determinant(m);
    if (det.is_zero())
        throw not_invertible("matrix is singular");
    if (!det.is_unit())
        throw not_invertible("determinant " + det.render() +
                             " is not a unit of the parameter ring; instantiate the parameters first");
    Scalar det_inv = det.inverse();
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // inv(j, i) = (-1)^{i+j} det(m without row i, column j) / det
            Scalar cof = detail::minor_det(m, detail::iota(n, i), detail::iota(n, j));
            if ((i + j) % 2 == 1)
                cof = -cof;
            inv(j, i) = cof * det_inv;
        }
    return inv;
}

inline bool is_skew(const Matrix& m)
{
    if (!m.is_square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!(m(i, j) + m(j, i)).is_zero())
                return false;
    return true;
}

inline bool is_symmetric(const Matrix& m)
{
    if (!m.is_square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i)))
                return false;
    return true;
}

/// Non-degeneracy over a parametric ring: a unit determinant is
/// non-degenerate outright; a nonzero non-unit determinant is non-degenerate
/// only where it does not vanish.
struct NonDegeneracy {
    enum class Status { degenerate, nondegenerate, generic };
    Status status = Status::degenerate;
    Scalar determinant;

    bool holds() const { return status == Status::nondegenerate; }

    std::string describe() const
    {
        switch (status) {
        case Status::degenerate:
            return "degenerate (determinant is 0)";
        case Status::nondegenerate:
            return "non-degenerate (determinant " + determinant.render() + ")";
        case Status::generic:
            return "generically non-degenerate: condition = " + determinant.render() + " != 0";
        }
        return {};
    }
};

inline NonDegeneracy classify_nondegeneracy(const Matrix& m)
{
    NonDegeneracy nd;
    nd.determinant = determinant(m);
    if (nd.determinant.is_zero())
        nd.status = NonDegeneracy::Status::degenerate;
    else if (nd.determinant.is_unit())
        nd.status = NonDegeneracy::Status::nondegenerate;
    else
        nd.status = NonDegeneracy::Status::generic;
    return nd;
}

} // namespace malcev
