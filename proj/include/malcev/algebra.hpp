#pragma once

/// \file algebra.hpp
/// Based algebras given by structure constants e_i e_j = Σ_k c_ij^k e_k,
/// and checks of the identities they may satisfy.

#include "malcev/error.hpp"
#include "malcev/matrix.hpp"
#include "malcev/report.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

enum class AlgebraKind { anticommutative, general };

inline std::string to_string(AlgebraKind k)
{
    return k == AlgebraKind::anticommutative ? "anticommutative" : "general";
}

inline std::vector<std::string> default_basis(std::size_t n, const std::string& prefix = "e")
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return names;
}

/// Sparse structure constants keyed by the pair (i, j).
class StructureTable {
public:
    using Entry = std::pair<std::size_t, Scalar>;
    using SparseVec = std::vector<Entry>;

    StructureTable() = default;

    /// The zero product on the given basis.
    StructureTable(std::vector<std::string> basis, AlgebraKind kind, Ring ring = {})
        : basis_(std::move(basis)), ring_(std::move(ring)), kind_(kind),
          products_(basis_.size() * basis_.size())
    {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].empty())
                throw input_error("empty basis name");
            for (std::size_t j = 0; j < i; ++j)
                if (basis_[j] == basis_[i])
                    throw input_error("duplicate basis name '" + basis_[i] + "'");
        }
    }

    static StructureTable zero(std::size_t n, AlgebraKind kind) { return StructureTable(default_basis(n), kind); }

    /// Adds c to c_ij^k. For an anticommutative table the entry (j, i) receives -c.
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c)
    {
        check_index(i);
        check_index(j);
        check_index(k);
        if (c.is_zero())
            return;
        if (kind_ == AlgebraKind::anticommutative) {
            if (i == j)
                throw input_error("anticommutative table has nonzero square " + basis_[i] + basis_[i]);
            accumulate(j, i, k, -c);
        }
        accumulate(i, j, k, c);
    }

    /// Builds a table from the full constants and rejects anticommutativity violations.
    static StructureTable from_products(std::vector<std::string> basis, AlgebraKind kind, Ring ring,
                                        const std::function<Vector(std::size_t, std::size_t)>& product)
    {
        StructureTable t(std::move(basis), AlgebraKind::general, std::move(ring));
        const std::size_t n = t.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector v = product(i, j);
                if (v.size() != n)
                    throw input_error("product vector has wrong length");
                for (std::size_t k = 0; k < n; ++k)
                    t.accumulate(i, j, k, v[k]);
            }
        if (kind == AlgebraKind::anticommutative) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (!malcev::is_zero(t.product_vector(i, j) + t.product_vector(j, i)))
                        throw input_error("table is not anticommutative at (" + t.basis_[i] + ", " + t.basis_[j] + ")");
            t.kind_ = kind;
        }
        return t;
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const Ring& ring() const { return ring_; }
    AlgebraKind kind() const { return kind_; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }

    Vector product_vector(std::size_t i, std::size_t j) const
    {
        Vector v(dim());
        for (const auto& [k, c] : product(i, j))
            v[k] = c;
        return v;
    }

    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        for (const auto& [kk, c] : product(i, j))
            if (kk == k)
                return c;
        return Scalar();
    }

    std::size_t nonzero_count() const
    {
        std::size_t n = 0;
        for (const auto& p : products_)
            n += p.size();
        return n;
    }

    StructureTable with_basis(std::vector<std::string> names) const
    {
        if (names.size() != dim())
            throw input_error("basis rename has wrong length");
        StructureTable t(std::move(names), kind_, ring_);
        t.products_ = products_;
        return t;
    }

    StructureTable with_kind(AlgebraKind kind) const
    {
        return from_products(basis_, kind, ring_, [this](std::size_t i, std::size_t j) { return product_vector(i, j); });
    }

    /// Equality of structure constants, ignoring names and kind tags.
    bool same_products(const StructureTable& o) const { return dim() == o.dim() && products_ == o.products_; }

    friend bool operator==(const StructureTable& a, const StructureTable& b)
    {
        return a.kind_ == b.kind_ && a.basis_ == b.basis_ && a.products_ == b.products_;
    }

private:
    void check_index(std::size_t i) const
    {
        if (i >= dim())
            throw input_error("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim()));
    }

    void accumulate(std::size_t i, std::size_t j, std::size_t k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto& vec = products_[i * dim() + j];
        auto it = std::lower_bound(vec.begin(), vec.end(), k, [](const Entry& e, std::size_t key) { return e.first < key; });
        if (it != vec.end() && it->first == k) {
            it->second += c;
            if (it->second.is_zero())
                vec.erase(it);
        } else {
            vec.insert(it, Entry{k, c});
        }
    }

    std::vector<std::string> basis_;
    Ring ring_;
    AlgebraKind kind_ = AlgebraKind::general;
    std::vector<SparseVec> products_;
};

inline Vector multiply(const StructureTable& A, const Vector& x, const Vector& y)
{
    const std::size_t n = A.dim();
    if (x.size() != n || y.size() != n)
        throw input_error("element does not belong to this algebra (coordinate length mismatch)");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            const auto& p = A.product(i, j);
            if (p.empty())
                continue;
            Scalar w = x[i] * y[j];
            for (const auto& [k, c] : p)
                out[k] += w * c;
        }
    }
    return out;
}

namespace detail {

inline void require_anticommutative(const StructureTable& A, const char* what)
{
    if (A.kind() != AlgebraKind::anticommutative)
        throw input_error(std::string(what) + " requires an anticommutative algebra");
}

inline std::vector<Vector> basis_vectors(std::size_t n)
{
    std::vector<Vector> b;
    for (std::size_t i = 0; i < n; ++i)
        b.push_back(basis_vector(n, i));
    return b;
}

// Visits index tuples of the given arity in lexicographic order until `f` returns false.
template <std::size_t Arity, class F>
void for_each_tuple(std::size_t n, F&& f)
{
    if (n == 0)
        return;
    std::array<std::size_t, Arity> idx{};
    for (;;) {
        if (!f(idx))
            return;
        std::size_t p = Arity;
        while (p > 0) {
            --p;
            if (++idx[p] < n)
                break;
            idx[p] = 0;
            if (p == 0)
                return;
        }
    }
}

template <std::size_t Arity>
std::vector<std::size_t> to_vector(const std::array<std::size_t, Arity>& a)
{
    return std::vector<std::size_t>(a.begin(), a.end());
}

template <std::size_t Arity, class Residual>
CheckResult check_basis_tuples(const StructureTable& A, std::string name, Residual&& residual)
{
    auto e = basis_vectors(A.dim());
    CheckResult result = passed(name);
    for_each_tuple<Arity>(A.dim(), [&](const std::array<std::size_t, Arity>& idx) {
        Vector r = [&]<std::size_t... I>(std::index_sequence<I...>) { return residual(e[idx[I]]...); }
        (std::make_index_sequence<Arity>{});
        if (is_zero(r))
            return true;
        auto v = to_vector(idx);
        result = failed(name, Witness{v, render_tuple(v, A.basis()), Matrix::column(r)});
        return false;
    });
    return result;
}

} // namespace detail

inline CheckResult check_anticommutative(const StructureTable& A)
{
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector r = A.product_vector(i, j) + A.product_vector(j, i);
            if (!is_zero(r)) {
                std::vector<std::size_t> idx{i, j};
                return failed("anticommutativity", Witness{idx, render_tuple(idx, A.basis()), Matrix::column(r)});
            }
        }
    return passed("anticommutativity");
}

/// (xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y
inline Vector malcev_residual(const StructureTable& A, const Vector& x, const Vector& y, const Vector& z)
{
    detail::require_anticommutative(A, "the Malcev identity");
    auto m = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    Vector xy = m(x, y);
    return m(xy, m(x, z)) - m(m(xy, z), x) - m(m(m(y, z), x), x) - m(m(m(z, x), x), y);
}

/// The Malcev identity is quadratic in x, so basis triples alone do not
/// determine it; x also runs over e_i + e_j (i < j) to capture the
/// polarized cross terms.
inline CheckResult check_malcev(const StructureTable& A)
{
    detail::require_anticommutative(A, "the Malcev identity");
    const std::string name = "malcev";
    CheckResult result = detail::check_basis_tuples<3>(
        A, name, [&](const Vector& x, const Vector& y, const Vector& z) { return malcev_residual(A, x, y, z); });
    if (!result.holds)
        return result;
    const std::size_t n = A.dim();
    auto e = detail::basis_vectors(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector x = e[i] + e[j];
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    Vector r = malcev_residual(A, x, e[b], e[c]);
                    if (is_zero(r))
                        continue;
                    std::string args = "(" + A.basis()[i] + "+" + A.basis()[j] + ", " + A.basis()[b] + ", " +
                                       A.basis()[c] + ")";
                    return failed(name, Witness{{i, j, b, c}, args, Matrix::column(r)});
                }
        }
    return result;
}

/// (xz)(yt) - ((xy)z)t - ((yz)t)x - ((zt)x)y - ((tx)y)z
inline Vector sagle_residual(const StructureTable& A, const Vector& x, const Vector& y, const Vector& z,
                             const Vector& t)
{
    detail::require_anticommutative(A, "the Sagle identity");
    auto m = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    return m(m(x, z), m(y, t)) - m(m(m(x, y), z), t) - m(m(m(y, z), t), x) - m(m(m(z, t), x), y) -
           m(m(m(t, x), y), z);
}

inline CheckResult check_sagle(const StructureTable& A)
{
    detail::require_anticommutative(A, "the Sagle identity");
    return detail::check_basis_tuples<4>(A, "sagle", [&](const Vector& x, const Vector& y, const Vector& z,
                                                         const Vector& t) { return sagle_residual(A, x, y, z, t); });
}

/// (xy)z + (yz)x + (zx)y
inline Vector jacobi_residual(const StructureTable& A, const Vector& x, const Vector& y, const Vector& z)
{
    detail::require_anticommutative(A, "the Jacobi identity");
    auto m = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    return m(m(x, y), z) + m(m(y, z), x) + m(m(z, x), y);
}

inline CheckResult check_jacobi(const StructureTable& A)
{
    detail::require_anticommutative(A, "the Jacobi identity");
    return detail::check_basis_tuples<3>(
        A, "jacobi", [&](const Vector& x, const Vector& y, const Vector& z) { return jacobi_residual(A, x, y, z); });
}

/// P_M(x, y, z, t), all ten terms.
inline Vector pre_malcev_residual(const StructureTable& A, const Vector& x, const Vector& y, const Vector& z,
                                  const Vector& t)
{
    auto m = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    Vector xy = m(x, y), yx = m(y, x), xz = m(x, z), zx = m(z, x), xt = m(x, t);
    return m(m(y, z), xt) - m(m(z, y), xt) + m(m(xy, z), t) - m(m(yx, z), t) + m(m(z, yx), t) - m(m(z, xy), t) +
           m(y, m(xz, t)) - m(y, m(zx, t)) + m(z, m(x, m(y, t))) - m(x, m(y, m(z, t)));
}

inline CheckResult check_pre_malcev(const StructureTable& A)
{
    return detail::check_basis_tuples<4>(A, "pre-malcev", [&](const Vector& x, const Vector& y, const Vector& z,
                                                              const Vector& t) {
        return pre_malcev_residual(A, x, y, z, t);
    });
}

/// The subadjacent algebra: xy = x·y - y·x.
inline StructureTable commutator_algebra(const StructureTable& A)
{
    return StructureTable::from_products(A.basis(), AlgebraKind::anticommutative, A.ring(),
                                         [&](std::size_t i, std::size_t j) {
                                             return A.product_vector(i, j) - A.product_vector(j, i);
                                         });
}

} // namespace malcev
