#pragma once

/// \file reps.hpp
/// Representations of Malcev algebras and bimodules of pre-Malcev algebras.
///
/// Operators act on column coordinate vectors; ρ(x) = Σ x_i action[i].

#include "malcev/algebra.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// A linear map V → A, stored as a target_dim × source_dim matrix whose
/// j-th column is the image of the j-th source basis vector.
using LinearMap = Matrix;

struct LinearRep {
    StructureTable algebra;
    std::vector<std::string> space_names;
    std::vector<Matrix> action;

    std::size_t space_dim() const { return space_names.size(); }
};

struct Bimodule {
    StructureTable algebra;
    std::vector<std::string> space_names;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    std::size_t space_dim() const { return space_names.size(); }
};

namespace detail {

inline void check_family(const StructureTable& A, const std::vector<Matrix>& mats, std::size_t m, const char* what)
{
    if (mats.size() != A.dim())
        throw input_error(std::string(what) + ": expected " + std::to_string(A.dim()) + " operators, got " +
                          std::to_string(mats.size()));
    for (const auto& M : mats)
        if (M.rows() != m || M.cols() != m)
            throw input_error(std::string(what) + ": every operator must be " + std::to_string(m) + "x" +
                              std::to_string(m));
}

inline Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t m)
{
    Matrix out(m, m);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            out += x[i] * mats[i];
    return out;
}

/// Toggles a trailing '*' to name the dual basis.
inline std::vector<std::string> dual_names(const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (const auto& n : names)
        out.push_back(!n.empty() && n.back() == '*' ? n.substr(0, n.size() - 1) : n + "*");
    return out;
}

inline std::vector<Matrix> transposed(const std::vector<Matrix>& mats, const Scalar& sign)
{
    std::vector<Matrix> out;
    for (const auto& M : mats)
        out.push_back(sign * M.transpose());
    return out;
}

inline std::vector<std::size_t> to_indices(std::size_t a, std::size_t b, std::size_t c) { return {a, b, c}; }

} // namespace detail

inline void validate(const LinearRep& R) { detail::check_family(R.algebra, R.action, R.space_dim(), "representation"); }

inline void validate(const Bimodule& B)
{
    detail::check_family(B.algebra, B.left, B.space_dim(), "bimodule left action");
    detail::check_family(B.algebra, B.right, B.space_dim(), "bimodule right action");
}

inline Matrix rho(const LinearRep& R, const Vector& x) { return detail::combine(R.action, x, R.space_dim()); }
inline Matrix left_op(const Bimodule& B, const Vector& x) { return detail::combine(B.left, x, B.space_dim()); }
inline Matrix right_op(const Bimodule& B, const Vector& x) { return detail::combine(B.right, x, B.space_dim()); }

/// ρ((xy)z) - [ρ(x)ρ(y)ρ(z) - ρ(z)ρ(x)ρ(y) + ρ(y)ρ(zx) - ρ(yz)ρ(x)]
inline Matrix rep_residual(const LinearRep& R, const Vector& x, const Vector& y, const Vector& z)
{
    const auto& A = R.algebra;
    auto r = [&](const Vector& v) { return rho(R, v); };
    Matrix rx = r(x), ry = r(y), rz = r(z);
    return r(multiply(A, multiply(A, x, y), z)) -
           (rx * ry * rz - rz * rx * ry + ry * r(multiply(A, z, x)) - r(multiply(A, y, z)) * rx);
}

inline Matrix rep_residual(const LinearRep& R, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = R.algebra.dim();
    return rep_residual(R, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
}

inline CheckResult check_rep(const LinearRep& R)
{
    validate(R);
    const std::size_t n = R.algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Matrix res = rep_residual(R, i, j, k);
                if (!res.is_zero()) {
                    auto idx = detail::to_indices(i, j, k);
                    return failed("representation", Witness{idx, render_tuple(idx, R.algebra.basis()), res});
                }
            }
    return passed("representation");
}

/// The adjoint representation; column j of ad(e_i) is e_i e_j.
inline LinearRep adjoint_rep(const StructureTable& A)
{
    const std::size_t n = A.dim();
    LinearRep R{A, default_basis(n, "x"), {}};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix M(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j))
                M(k, j) = c;
        R.action.push_back(std::move(M));
    }
    return R;
}

/// ρ*(x) = -ρ(x)^T in the dual basis.
inline LinearRep dual_rep(const LinearRep& R)
{
    validate(R);
    return LinearRep{R.algebra, detail::dual_names(R.space_names), detail::transposed(R.action, Scalar(-1))};
}

inline LinearRep coadjoint_rep(const StructureTable& A) { return dual_rep(adjoint_rep(A)); }

/// A ⋉_ρ V on the basis (A-basis, V-basis): (x,u)(y,v) = (xy, ρ(x)v - ρ(y)u).
inline StructureTable semidirect_malcev(const LinearRep& R)
{
    validate(R);
    const auto& A = R.algebra;
    const std::size_t n = A.dim(), m = R.space_dim();
    auto names = A.basis();
    names.insert(names.end(), R.space_names.begin(), R.space_names.end());
    StructureTable S(names, AlgebraKind::general, A.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j))
                S.add(i, j, k, c);
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a) {
                const Scalar& c = R.action[i](a, b);
                if (c.is_zero())
                    continue;
                S.add(i, n + b, n + a, c);
                S.add(n + b, i, n + a, -c);
            }
    }
    return A.kind() == AlgebraKind::anticommutative ? S.with_kind(AlgebraKind::anticommutative) : S;
}

/// φ: V2 → V1 is an isomorphism of representations when it is invertible and
/// ρ1(x)φ = φρ2(x) for every basis element x.
inline AxiomReport check_rep_iso(const LinearMap& phi, const LinearRep& R1, const LinearRep& R2)
{
    validate(R1);
    validate(R2);
    if (!phi.is_square() || phi.rows() != R1.space_dim() || phi.cols() != R2.space_dim())
        throw input_error("isomorphism must be a square map from the second space to the first");
    if (R1.algebra.dim() != R2.algebra.dim())
        throw input_error("representations are over algebras of different dimension");
    AxiomReport report;
    NonDegeneracy nd = classify_nondegeneracy(phi);
    if (nd.status == NonDegeneracy::Status::degenerate)
        report.checks.push_back(failed("invertible", Witness{{}, "det", Matrix::column({nd.determinant})}, nd.describe()));
    else
        report.checks.push_back(CheckResult{"invertible", true, std::nullopt, nd.describe()});
    CheckResult inter = passed("intertwining");
    for (std::size_t i = 0; i < R1.algebra.dim(); ++i) {
        Matrix d = R1.action[i] * phi - phi * R2.action[i];
        if (!d.is_zero()) {
            inter = failed("intertwining", Witness{{i}, R1.algebra.basis()[i], d});
            break;
        }
    }
    report.checks.push_back(std::move(inter));
    return report;
}

/// The four bimodule identities, each evaluated as displayed.
inline std::array<Matrix, 4> bimodule_residuals(const Bimodule& B, const Vector& x, const Vector& y, const Vector& z)
{
    const auto& A = B.algebra;
    auto m = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    auto l = [&](const Vector& v) { return left_op(B, v); };
    auto r = [&](const Vector& v) { return right_op(B, v); };
    Matrix lx = l(x), ly = l(y), lz = l(z), rx = r(x), ry = r(y), rz = r(z);
    Vector xy = m(x, y), yx = m(y, x), yz = m(y, z), zy = m(z, y), zx = m(z, x), xz = m(x, z);

    Matrix first = rx * ry * rz - rx * ry * lz - rx * ly * rz + rx * ly * lz - r(m(z, yx)) + ly * r(zx) +
                   l(zy) * rx - l(yz) * rx - lz * rx * ly + lz * rx * ry;
    Matrix second = rx * ry * lz - rx * ry * rz - rx * ly * lz + rx * ly * rz - lz * r(yx) + ly * lz * rx +
                    r(zx) * ry - r(zx) * ly - r(m(yz, x)) + r(m(zy, x));
    Matrix third = rx * l(yz) - rx * l(zy) - rx * r(yz) + rx * r(zy) - ly * lz * rx + r(m(y, zx)) + r(yx) * lz -
                   r(yx) * rz - lz * rx * ry + lz * rx * ly;
    Matrix fourth = l(m(xy, z)) - l(m(yx, z)) - l(m(z, xy)) + l(m(z, yx)) - lx * ly * lz + lz * lx * ly + l(yz) * lx -
                    l(zy) * lx - ly * l(zx) + ly * l(xz);
    return {std::move(first), std::move(second), std::move(third), std::move(fourth)};
}

inline AxiomReport check_bimodule(const Bimodule& B)
{
    validate(B);
    const std::size_t n = B.algebra.dim();
    AxiomReport report;
    for (int a = 0; a < 4; ++a)
        report.checks.push_back(passed("bimodule-" + std::to_string(a + 1)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto res = bimodule_residuals(B, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                for (std::size_t a = 0; a < 4; ++a) {
                    auto& c = report.checks[a];
                    if (c.holds && !res[a].is_zero()) {
                        auto idx = detail::to_indices(i, j, k);
                        c = failed(c.name, Witness{idx, render_tuple(idx, B.algebra.basis()), res[a]});
                    }
                }
            }
    return report;
}

/// (𝒜, L, R) with L_x(y) = x·y and R_x(y) = y·x.
inline Bimodule regular_bimodule(const StructureTable& A)
{
    const std::size_t n = A.dim();
    Bimodule B{A, default_basis(n, "x"), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix L(n, n), R(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : A.product(i, j))
                L(k, j) = c;
            for (const auto& [k, c] : A.product(j, i))
                R(k, j) = c;
        }
        B.left.push_back(std::move(L));
        B.right.push_back(std::move(R));
    }
    return B;
}

/// (𝒜, L, 0).
inline Bimodule left_regular_bimodule(const StructureTable& A)
{
    Bimodule B = regular_bimodule(A);
    for (auto& M : B.right)
        M = Matrix(M.rows(), M.cols());
    return B;
}

/// (V*, ℓ* - 𝔯*, -𝔯*) with ℓ* = -ℓ^T and 𝔯* = -𝔯^T.
inline Bimodule dual_bimodule(const Bimodule& B)
{
    validate(B);
    Bimodule D{B.algebra, detail::dual_names(B.space_names), {}, {}};
    for (std::size_t i = 0; i < B.left.size(); ++i) {
        D.left.push_back(B.right[i].transpose() - B.left[i].transpose());
        D.right.push_back(B.right[i].transpose());
    }
    return D;
}

/// 𝒜 ⋉_{ℓ,𝔯} V: (x,u)·(y,v) = (x·y, ℓ_x(v) + 𝔯_y(u)).
inline StructureTable semidirect_pre_malcev(const Bimodule& B)
{
    validate(B);
    const auto& A = B.algebra;
    const std::size_t n = A.dim(), m = B.space_dim();
    auto names = A.basis();
    names.insert(names.end(), B.space_names.begin(), B.space_names.end());
    StructureTable S(names, AlgebraKind::general, A.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j))
                S.add(i, j, k, c);
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a) {
                S.add(i, n + b, n + a, B.left[i](a, b));
                S.add(n + b, i, n + a, B.right[i](a, b));
            }
    }
    return S;
}

/// (V, ℓ) and (V, ℓ - 𝔯) as representations of the commutator algebra.
inline std::pair<LinearRep, LinearRep> induced_malcev_reps(const Bimodule& B)
{
    validate(B);
    StructureTable C = commutator_algebra(B.algebra);
    std::vector<Matrix> diff;
    for (std::size_t i = 0; i < B.left.size(); ++i)
        diff.push_back(B.left[i] - B.right[i]);
    return {LinearRep{C, B.space_names, B.left}, LinearRep{C, B.space_names, std::move(diff)}};
}

} // namespace malcev
