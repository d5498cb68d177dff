#pragma once

/// \file oracle.hpp
/// Brute-force residuals computed straight from the defining formulas on
/// dense coefficient arrays. Nothing here calls the engine's residual code;
/// only scalar arithmetic and the data types are shared.

#include "malcev/algebra.hpp"
#include "malcev/reps.hpp"
#include "malcev/ybe.hpp"

#include <optional>
#include <vector>

namespace malcev::oracle {

/// c[(i*n + j)*n + k] = c_ij^k.
class Dense {
public:
    explicit Dense(const StructureTable& A) : n_(A.dim()), c_(n_ * n_ * n_)
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    c_[(i * n_ + j) * n_ + k] = A.constant(i, j, k);
    }

    std::size_t n() const { return n_; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    Vector mul(const Vector& x, const Vector& y) const
    {
        Vector out(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            Scalar s;
            for (std::size_t i = 0; i < n_; ++i) {
                if (x[i].is_zero())
                    continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (!y[j].is_zero() && !(*this)(i, j, k).is_zero())
                        s += x[i] * y[j] * (*this)(i, j, k);
            }
            out[k] = s;
        }
        return out;
    }

private:
    std::size_t n_;
    std::vector<Scalar> c_;
};

namespace detail {

inline Vector vadd(const Vector& a, const Vector& b)
{
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline Vector vsub(const Vector& a, const Vector& b)
{
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline Vector unit(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = Scalar(1);
    return v;
}

// (Σ_i x_i M_i) applied to v, entry by entry.
inline Vector act(const std::vector<Matrix>& mats, const Vector& x, const Vector& v)
{
    std::size_t m = v.size();
    Vector out(m);
    for (std::size_t a = 0; a < m; ++a) {
        Scalar s;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t b = 0; b < m; ++b)
                if (!v[b].is_zero())
                    s += x[i] * mats[i](a, b) * v[b];
        }
        out[a] = s;
    }
    return out;
}

// Stacks the images of the basis vectors as columns.
template <class F>
Matrix operator_matrix(std::size_t m, F&& apply)
{
    Matrix M(m, m);
    for (std::size_t b = 0; b < m; ++b) {
        Vector col = apply(unit(m, b));
        for (std::size_t a = 0; a < m; ++a)
            M(a, b) = col[a];
    }
    return M;
}

} // namespace detail

inline Vector malcev(const Dense& c, const Vector& x, const Vector& y, const Vector& z)
{
    auto m = [&](const Vector& a, const Vector& b) { return c.mul(a, b); };
    Vector lhs = m(m(x, y), m(x, z));
    Vector rhs = detail::vadd(detail::vadd(m(m(m(x, y), z), x), m(m(m(y, z), x), x)), m(m(m(z, x), x), y));
    return detail::vsub(lhs, rhs);
}

inline Vector sagle(const Dense& c, const Vector& x, const Vector& y, const Vector& z, const Vector& t)
{
    auto m = [&](const Vector& a, const Vector& b) { return c.mul(a, b); };
    Vector lhs = m(m(x, z), m(y, t));
    Vector rhs = m(m(m(x, y), z), t);
    rhs = detail::vadd(rhs, m(m(m(y, z), t), x));
    rhs = detail::vadd(rhs, m(m(m(z, t), x), y));
    rhs = detail::vadd(rhs, m(m(m(t, x), y), z));
    return detail::vsub(lhs, rhs);
}

inline Vector jacobi(const Dense& c, const Vector& x, const Vector& y, const Vector& z)
{
    auto m = [&](const Vector& a, const Vector& b) { return c.mul(a, b); };
    return detail::vadd(detail::vadd(m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y));
}

inline Vector pre_malcev(const Dense& c, const Vector& x, const Vector& y, const Vector& z, const Vector& t)
{
    auto m = [&](const Vector& a, const Vector& b) { return c.mul(a, b); };
    std::vector<std::pair<int, Vector>> terms = {
        {+1, m(m(y, z), m(x, t))},    {-1, m(m(z, y), m(x, t))},    {+1, m(m(m(x, y), z), t)},
        {-1, m(m(m(y, x), z), t)},    {+1, m(m(z, m(y, x)), t)},    {-1, m(m(z, m(x, y)), t)},
        {+1, m(y, m(m(x, z), t))},    {-1, m(y, m(m(z, x), t))},    {+1, m(z, m(x, m(y, t)))},
        {-1, m(x, m(y, m(z, t)))},
    };
    Vector out(c.n());
    for (const auto& [sign, v] : terms)
        out = sign > 0 ? detail::vadd(out, v) : detail::vsub(out, v);
    return out;
}

/// Representation residual as an operator, built by applying both sides of
/// the identity to each basis vector of V.
inline Matrix rep(const LinearRep& R, const Vector& x, const Vector& y, const Vector& z)
{
    Dense c(R.algebra);
    const auto& M = R.action;
    return detail::operator_matrix(R.space_dim(), [&](const Vector& v) {
        auto r = [&](const Vector& a, const Vector& w) { return detail::act(M, a, w); };
        Vector lhs = r(c.mul(c.mul(x, y), z), v);
        Vector t1 = r(x, r(y, r(z, v)));
        Vector t2 = r(z, r(x, r(y, v)));
        Vector t3 = r(y, r(c.mul(z, x), v));
        Vector t4 = r(c.mul(y, z), r(x, v));
        return detail::vsub(lhs, detail::vsub(detail::vadd(detail::vsub(t1, t2), t3), t4));
    });
}

/// The four bimodule residuals, each applied vector by vector.
inline std::array<Matrix, 4> bimodule(const Bimodule& B, const Vector& x, const Vector& y, const Vector& z)
{
    Dense c(B.algebra);
    auto m = [&](const Vector& a, const Vector& b) { return c.mul(a, b); };
    auto L = [&](const Vector& a, const Vector& v) { return detail::act(B.left, a, v); };
    auto R = [&](const Vector& a, const Vector& v) { return detail::act(B.right, a, v); };
    auto sum = [](std::vector<std::pair<int, Vector>> terms) {
        Vector out(terms.front().second.size());
        for (const auto& [s, v] : terms)
            out = s > 0 ? detail::vadd(out, v) : detail::vsub(out, v);
        return out;
    };
    const std::size_t dim = B.space_dim();
    std::array<Matrix, 4> out;
    out[0] = detail::operator_matrix(dim, [&](const Vector& v) {
        return sum({{+1, R(x, R(y, R(z, v)))}, {-1, R(x, R(y, L(z, v)))}, {-1, R(x, L(y, R(z, v)))},
                    {+1, R(x, L(y, L(z, v)))}, {-1, R(m(z, m(y, x)), v)}, {+1, L(y, R(m(z, x), v))},
                    {+1, L(m(z, y), R(x, v))}, {-1, L(m(y, z), R(x, v))}, {-1, L(z, R(x, L(y, v)))},
                    {+1, L(z, R(x, R(y, v)))}});
    });
    out[1] = detail::operator_matrix(dim, [&](const Vector& v) {
        return sum({{+1, R(x, R(y, L(z, v)))}, {-1, R(x, R(y, R(z, v)))}, {-1, R(x, L(y, L(z, v)))},
                    {+1, R(x, L(y, R(z, v)))}, {-1, L(z, R(m(y, x), v))}, {+1, L(y, L(z, R(x, v)))},
                    {+1, R(m(z, x), R(y, v))}, {-1, R(m(z, x), L(y, v))}, {-1, R(m(m(y, z), x), v)},
                    {+1, R(m(m(z, y), x), v)}});
    });
    out[2] = detail::operator_matrix(dim, [&](const Vector& v) {
        return sum({{+1, R(x, L(m(y, z), v))}, {-1, R(x, L(m(z, y), v))}, {-1, R(x, R(m(y, z), v))},
                    {+1, R(x, R(m(z, y), v))}, {-1, L(y, L(z, R(x, v)))}, {+1, R(m(y, m(z, x)), v)},
                    {+1, R(m(y, x), L(z, v))}, {-1, R(m(y, x), R(z, v))}, {-1, L(z, R(x, R(y, v)))},
                    {+1, L(z, R(x, L(y, v)))}});
    });
    out[3] = detail::operator_matrix(dim, [&](const Vector& v) {
        return sum({{+1, L(m(m(x, y), z), v)}, {-1, L(m(m(y, x), z), v)}, {-1, L(m(z, m(x, y)), v)},
                    {+1, L(m(z, m(y, x)), v)}, {-1, L(x, L(y, L(z, v)))}, {+1, L(z, L(x, L(y, v)))},
                    {+1, L(m(y, z), L(x, v))}, {-1, L(m(z, y), L(x, v))}, {-1, L(y, L(m(z, x), v))},
                    {+1, L(y, L(m(x, z), v))}});
    });
    return out;
}

/// CYBE residual entry by entry:
///   R[p,q,s] = Σ_{a,c} c_ac^p r^{aq} r^{cs} + Σ_{b,d} r^{pb} r^{qd} c_bd^s - Σ_{a,d} r^{as} r^{pd} c_ad^q.
inline ThreeTensor cybe(const TwoTensor& r)
{
    Dense c(r.algebra);
    const std::size_t N = c.n();
    const Matrix& t = r.coeffs;
    ThreeTensor out(N);
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q)
            for (std::size_t s = 0; s < N; ++s) {
                Scalar v;
                for (std::size_t a = 0; a < N; ++a)
                    for (std::size_t b = 0; b < N; ++b) {
                        v += c(a, b, p) * t(a, q) * t(b, s);
                        v += t(p, a) * t(q, b) * c(a, b, s);
                        v -= t(a, s) * t(p, b) * c(a, b, q);
                    }
                out.add(p, q, s, v);
            }
    return out;
}

/// Pre-Malcev CYBE residual entry by entry:
///   -Σ c_ac^p r^{aq} r^{cs} + Σ r^{pb} c_bc^q r^{cs} + Σ r^{pb} r^{qd} (c_bd^s - c_db^s).
inline ThreeTensor pm_cybe(const TwoTensor& r)
{
    Dense c(r.algebra);
    const std::size_t N = c.n();
    const Matrix& t = r.coeffs;
    ThreeTensor out(N);
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q)
            for (std::size_t s = 0; s < N; ++s) {
                Scalar v;
                for (std::size_t a = 0; a < N; ++a)
                    for (std::size_t b = 0; b < N; ++b) {
                        v -= c(a, b, p) * t(a, q) * t(b, s);
                        v += t(p, a) * c(a, b, q) * t(b, s);
                        v += t(p, a) * t(q, b) * (c(a, b, s) - c(b, a, s));
                    }
                out.add(p, q, s, v);
            }
    return out;
}

inline Vector map_apply(const Matrix& T, const Vector& v)
{
    Vector out(T.rows());
    for (std::size_t a = 0; a < T.rows(); ++a) {
        Scalar s;
        for (std::size_t b = 0; b < T.cols(); ++b)
            s += T(a, b) * v[b];
        out[a] = s;
    }
    return out;
}

inline PairResiduals o_operator(const LinearMap& T, const LinearRep& R)
{
    Dense c(R.algebra);
    const std::size_t m = T.cols();
    PairResiduals out{m, {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vector v = detail::unit(m, j), w = detail::unit(m, k);
            Vector Tv = map_apply(T, v), Tw = map_apply(T, w);
            Vector inner = detail::vsub(detail::act(R.action, Tv, w), detail::act(R.action, Tw, v));
            out.values.push_back(detail::vsub(c.mul(Tv, Tw), map_apply(T, inner)));
        }
    return out;
}

inline PairResiduals pm_o_operator(const LinearMap& T, const Bimodule& B)
{
    Dense c(B.algebra);
    const std::size_t m = T.cols();
    PairResiduals out{m, {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vector v = detail::unit(m, j), w = detail::unit(m, k);
            Vector Tv = map_apply(T, v), Tw = map_apply(T, w);
            Vector inner = detail::vadd(detail::act(B.left, Tv, w), detail::act(B.right, Tw, v));
            out.values.push_back(detail::vsub(c.mul(Tv, Tw), map_apply(T, inner)));
        }
    return out;
}

/// B(e_i e_j, e_k) - B(e_i, e_j e_k) as Σ_l c_ij^l B_lk - Σ_l c_jk^l B_il.
inline Scalar invariant(const BilinearForm& B, std::size_t i, std::size_t j, std::size_t k)
{
    Dense c(B.algebra);
    Scalar s;
    for (std::size_t l = 0; l < c.n(); ++l)
        s += c(i, j, l) * B.matrix(l, k) - c(j, k, l) * B.matrix(i, l);
    return s;
}

/// B(e_i e_j, e_k) + B(e_j e_k, e_i) + B(e_k e_i, e_j).
inline Scalar cyclic(const BilinearForm& B, std::size_t i, std::size_t j, std::size_t k)
{
    Dense c(B.algebra);
    Scalar s;
    for (std::size_t l = 0; l < c.n(); ++l)
        s += c(i, j, l) * B.matrix(l, k) + c(j, k, l) * B.matrix(l, i) + c(k, i, l) * B.matrix(l, j);
    return s;
}

/// First failing basis tuple of a residual, in lexicographic order.
template <std::size_t Arity, class F>
std::optional<std::vector<std::size_t>> first_failure(std::size_t n, F&& residual_is_zero)
{
    std::vector<std::size_t> idx(Arity, 0);
    if (n == 0)
        return std::nullopt;
    for (;;) {
        if (!residual_is_zero(idx))
            return idx;
        std::size_t p = Arity;
        for (;;) {
            if (p == 0)
                return std::nullopt;
            --p;
            if (++idx[p] < n)
                break;
            idx[p] = 0;
        }
    }
}

} // namespace malcev::oracle
