#pragma once

/// \file ybe.hpp
/// Two-tensors, the classical Yang-Baxter equation on Malcev and pre-Malcev
/// algebras, O-operators and bilinear forms.

#include "malcev/algebra.hpp"
#include "malcev/reps.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// r = Σ coeffs(i, j) e_i ⊗ e_j.
struct TwoTensor {
    StructureTable algebra;
    Matrix coeffs;
};

/// Sparse element of A ⊗ A ⊗ A; zero coefficients are never stored.
class ThreeTensor {
public:
    using Key = std::array<std::size_t, 3>;

    explicit ThreeTensor(std::size_t dim = 0) : dim_(dim) {}

    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c)
    {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw input_error("three-tensor index out of range");
        if (c.is_zero())
            return;
        auto [it, inserted] = entries_.try_emplace(Key{i, j, k}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                entries_.erase(it);
        }
    }

    Scalar at(std::size_t i, std::size_t j, std::size_t k) const
    {
        auto it = entries_.find(Key{i, j, k});
        return it == entries_.end() ? Scalar() : it->second;
    }

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<Key, Scalar>& entries() const { return entries_; }

    friend bool operator==(const ThreeTensor& a, const ThreeTensor& b)
    {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::map<Key, Scalar> entries_;
};

struct BilinearForm {
    StructureTable algebra;
    Matrix matrix;
};

/// The O-operator residual for each ordered pair of source basis vectors.
struct PairResiduals {
    std::size_t source_dim = 0;
    std::vector<Vector> values; // index j * source_dim + k

    const Vector& at(std::size_t j, std::size_t k) const { return values[j * source_dim + k]; }
};

namespace detail {

inline void check_tensor(const TwoTensor& r)
{
    const std::size_t n = r.algebra.dim();
    if (r.coeffs.rows() != n || r.coeffs.cols() != n)
        throw input_error("tensor is " + std::to_string(r.coeffs.rows()) + "x" + std::to_string(r.coeffs.cols()) +
                          " but the algebra has dimension " + std::to_string(n));
}

struct Nonzero {
    std::size_t row, col;
    Scalar value;
};

inline std::vector<Nonzero> nonzeros(const Matrix& m)
{
    std::vector<Nonzero> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                out.push_back({i, j, m(i, j)});
    return out;
}

inline CheckResult check_three_tensor(const ThreeTensor& t, const std::vector<std::string>& names, std::string name)
{
    if (t.is_zero())
        return passed(std::move(name));
    const auto& [key, value] = *t.entries().begin();
    std::vector<std::size_t> idx(key.begin(), key.end());
    return failed(std::move(name),
                  Witness{idx, names[key[0]] + "⊗" + names[key[1]] + "⊗" + names[key[2]], Matrix::column({value})});
}

inline CheckResult check_pairs(const PairResiduals& res, const std::vector<std::string>& source_names,
                               std::string name)
{
    for (std::size_t j = 0; j < res.source_dim; ++j)
        for (std::size_t k = 0; k < res.source_dim; ++k)
            if (!is_zero(res.at(j, k))) {
                std::vector<std::size_t> idx{j, k};
                return failed(std::move(name), Witness{idx, render_tuple(idx, source_names), Matrix::column(res.at(j, k))});
            }
    return passed(std::move(name));
}

inline void check_map_shape(const LinearMap& T, std::size_t algebra_dim, std::size_t space_dim)
{
    if (T.rows() != algebra_dim || T.cols() != space_dim)
        throw input_error("map is " + std::to_string(T.rows()) + "x" + std::to_string(T.cols()) + ", expected " +
                          std::to_string(algebra_dim) + "x" + std::to_string(space_dim) +
                          " (rows = algebra dimension, columns = module dimension)");
}

} // namespace detail

inline TwoTensor twist(const TwoTensor& r) { return TwoTensor{r.algebra, r.coeffs.transpose()}; }
inline bool is_skew(const TwoTensor& r) { return is_skew(r.coeffs); }
inline bool is_symmetric(const TwoTensor& r) { return is_symmetric(r.coeffs); }

/// T_r: A* → A; T_r(ε_j) = Σ_i coeffs(i, j) e_i, so the matrix is coeffs itself.
inline LinearMap t_map(const TwoTensor& r)
{
    detail::check_tensor(r);
    return r.coeffs;
}

/// r12 r13 + r13 r23 - r23 r12 with
///   r12 r13 = Σ x_i x_j ⊗ y_i ⊗ y_j,
///   r13 r23 = Σ x_i ⊗ x_j ⊗ y_i y_j,
///   r23 r12 = Σ x_j ⊗ x_i y_j ⊗ y_i.
inline ThreeTensor cybe_residual(const TwoTensor& r)
{
    detail::check_tensor(r);
    detail::require_anticommutative(r.algebra, "the classical Yang-Baxter equation");
    const auto& A = r.algebra;
    ThreeTensor out(A.dim());
    auto nz = detail::nonzeros(r.coeffs);
    for (const auto& p : nz)
        for (const auto& q : nz) {
            Scalar w = p.value * q.value;
            for (const auto& [k, c] : A.product(p.row, q.row))
                out.add(k, p.col, q.col, w * c);
            for (const auto& [k, c] : A.product(p.col, q.col))
                out.add(p.row, q.row, k, w * c);
            for (const auto& [k, c] : A.product(p.row, q.col))
                out.add(q.row, k, p.col, -(w * c));
        }
    return out;
}

inline CheckResult check_cybe(const TwoTensor& r)
{
    return detail::check_three_tensor(cybe_residual(r), r.algebra.basis(), "cybe");
}

/// -r12·r13 + r12·r23 + r13 r23 with
///   r12·r13 = Σ x_i·x_j ⊗ y_i ⊗ y_j,
///   r12·r23 = Σ x_i ⊗ y_i·x_j ⊗ y_j,
///   r13 r23 = Σ x_i ⊗ x_j ⊗ (y_i·y_j - y_j·y_i).
inline ThreeTensor pm_cybe_residual(const TwoTensor& r)
{
    detail::check_tensor(r);
    const auto& A = r.algebra;
    ThreeTensor out(A.dim());
    auto nz = detail::nonzeros(r.coeffs);
    for (const auto& p : nz)
        for (const auto& q : nz) {
            Scalar w = p.value * q.value;
            for (const auto& [k, c] : A.product(p.row, q.row))
                out.add(k, p.col, q.col, -(w * c));
            for (const auto& [k, c] : A.product(p.col, q.row))
                out.add(p.row, k, q.col, w * c);
            for (const auto& [k, c] : A.product(p.col, q.col))
                out.add(p.row, q.row, k, w * c);
            for (const auto& [k, c] : A.product(q.col, p.col))
                out.add(p.row, q.row, k, -(w * c));
        }
    return out;
}

inline CheckResult check_pm_cybe(const TwoTensor& r)
{
    return detail::check_three_tensor(pm_cybe_residual(r), r.algebra.basis(), "pm-cybe");
}

/// T(v_j)T(v_k) - T(ρ(T(v_j))v_k - ρ(T(v_k))v_j) for all basis pairs.
inline PairResiduals o_residual(const LinearMap& T, const LinearRep& R)
{
    validate(R);
    const auto& A = R.algebra;
    const std::size_t m = R.space_dim();
    detail::check_map_shape(T, A.dim(), m);
    std::vector<Vector> images;
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < m; ++j) {
        images.push_back(T.col(j));
        ops.push_back(rho(R, images.back()));
    }
    PairResiduals out{m, {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vector inner = ops[j].col(k) - ops[k].col(j);
            out.values.push_back(multiply(A, images[j], images[k]) - T.apply(inner));
        }
    return out;
}

inline CheckResult check_o_operator(const LinearMap& T, const LinearRep& R)
{
    return detail::check_pairs(o_residual(T, R), R.space_names, "o-operator");
}

/// Rota-Baxter operators of weight zero are the O-operators for the adjoint representation.
inline CheckResult check_rota_baxter(const LinearMap& T, const StructureTable& A)
{
    CheckResult c = check_o_operator(T, adjoint_rep(A));
    c.name = "rota-baxter";
    return c;
}

/// T(v_j)·T(v_k) - T(ℓ_{T(v_j)} v_k + 𝔯_{T(v_k)} v_j) for all basis pairs.
inline PairResiduals pm_o_residual(const LinearMap& T, const Bimodule& B)
{
    validate(B);
    const auto& A = B.algebra;
    const std::size_t m = B.space_dim();
    detail::check_map_shape(T, A.dim(), m);
    std::vector<Vector> images;
    std::vector<Matrix> lops, rops;
    for (std::size_t j = 0; j < m; ++j) {
        images.push_back(T.col(j));
        lops.push_back(left_op(B, images.back()));
        rops.push_back(right_op(B, images.back()));
    }
    PairResiduals out{m, {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vector inner = lops[j].col(k) + rops[k].col(j);
            out.values.push_back(multiply(A, images[j], images[k]) - T.apply(inner));
        }
    return out;
}

inline CheckResult check_pm_o_operator(const LinearMap& T, const Bimodule& B)
{
    return detail::check_pairs(pm_o_residual(T, B), B.space_names, "pm-o-operator");
}

// ---------------------------------------------------------------------------
// Bilinear forms. B(x, y) = x^T M y.

inline Scalar form_value(const Matrix& M, const Vector& x, const Vector& y)
{
    Vector My = M.apply(y);
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            s += x[i] * My[i];
    return s;
}

/// B_r(x, y) = <T_r^{-1}(x), y>, whose matrix is the transposed inverse of T_r.
inline BilinearForm b_from_r(const TwoTensor& r)
{
    detail::check_tensor(r);
    return BilinearForm{r.algebra, inverse(t_map(r)).transpose()};
}

inline TwoTensor r_from_b(const BilinearForm& B)
{
    return TwoTensor{B.algebra, inverse(B.matrix).transpose()};
}

namespace detail {

inline void check_form(const BilinearForm& B)
{
    const std::size_t n = B.algebra.dim();
    if (B.matrix.rows() != n || B.matrix.cols() != n)
        throw input_error("form matrix does not match the algebra dimension");
}

template <class F>
CheckResult check_form_triples(const BilinearForm& B, std::string name, F&& residual)
{
    const std::size_t n = B.algebra.dim();
    auto e = basis_vectors(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar s = residual(e[i], e[j], e[k]);
                if (!s.is_zero()) {
                    std::vector<std::size_t> idx{i, j, k};
                    return failed(std::move(name), Witness{idx, render_tuple(idx, B.algebra.basis()), Matrix::column({s})});
                }
            }
    return passed(std::move(name));
}

} // namespace detail

/// B(xy, z) = B(x, yz).
inline CheckResult check_invariant(const BilinearForm& B)
{
    detail::check_form(B);
    const auto& A = B.algebra;
    return detail::check_form_triples(B, "invariant", [&](const Vector& x, const Vector& y, const Vector& z) {
        return form_value(B.matrix, multiply(A, x, y), z) - form_value(B.matrix, x, multiply(A, y, z));
    });
}

inline CheckResult check_cyclic(const BilinearForm& B)
{
    detail::check_form(B);
    const auto& A = B.algebra;
    return detail::check_form_triples(B, "cyclic", [&](const Vector& x, const Vector& y, const Vector& z) {
        return form_value(B.matrix, multiply(A, x, y), z) + form_value(B.matrix, multiply(A, y, z), x) +
               form_value(B.matrix, multiply(A, z, x), y);
    });
}

inline CheckResult check_nondegenerate(const Matrix& M)
{
    NonDegeneracy nd = classify_nondegeneracy(M);
    if (nd.status == NonDegeneracy::Status::degenerate)
        return failed("non-degenerate", Witness{{}, "det", Matrix::column({nd.determinant})}, nd.describe());
    return CheckResult{"non-degenerate", true, std::nullopt, nd.describe()};
}

/// Skew, vanishing cyclic sum, and non-degenerate. A parametric determinant
/// that is nonzero but not a unit passes with its condition in the note.
inline AxiomReport check_symplectic(const BilinearForm& B)
{
    detail::check_form(B);
    AxiomReport report;
    if (is_skew(B.matrix))
        report.checks.push_back(passed("skew"));
    else {
        Matrix d = B.matrix + B.matrix.transpose();
        report.checks.push_back(failed("skew", Witness{{}, "B + B^T", d}));
    }
    report.checks.push_back(check_cyclic(B));
    report.checks.push_back(check_nondegenerate(B.matrix));
    return report;
}

/// φ_B(x) = B(x, -) in the dual basis; the matrix is B^T.
inline LinearMap phi_from_form(const BilinearForm& B)
{
    detail::check_form(B);
    return B.matrix.transpose();
}

// ---------------------------------------------------------------------------
// Constructions.

/// r_T = T̃ - σ(T̃) with T̃ = Σ T(v_i) ⊗ ξ_i, on A ⋉ V* for the dual representation.
inline TwoTensor build_r_T(const LinearMap& T, const LinearRep& R)
{
    validate(R);
    const std::size_t n = R.algebra.dim(), m = R.space_dim();
    detail::check_map_shape(T, n, m);
    StructureTable S = semidirect_malcev(dual_rep(R));
    Matrix c(n + m, n + m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i) {
            c(a, n + i) = T(a, i);
            c(n + i, a) = -T(a, i);
        }
    return TwoTensor{std::move(S), std::move(c)};
}

/// s_T = T̃ + σ(T̃), on 𝒜 ⋉ V* for the dual bimodule.
inline TwoTensor build_s_T(const LinearMap& T, const Bimodule& B)
{
    validate(B);
    const std::size_t n = B.algebra.dim(), m = B.space_dim();
    detail::check_map_shape(T, n, m);
    StructureTable S = semidirect_pre_malcev(dual_bimodule(B));
    Matrix c(n + m, n + m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i) {
            c(a, n + i) = T(a, i);
            c(n + i, a) = T(a, i);
        }
    return TwoTensor{std::move(S), std::move(c)};
}

/// The CYBE residual of r_T written through the O-operator residual O(i, j):
/// O(i,j) in the (A, V*, V*) block, O(j,i) in (V*, A, V*), O(i,j) in (V*, V*, A).
inline ThreeTensor r_T_residual_by_blocks(const LinearMap& T, const LinearRep& R)
{
    auto O = o_residual(T, R);
    const std::size_t n = R.algebra.dim(), m = R.space_dim();
    ThreeTensor out(n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.add(k, n + i, n + j, O.at(i, j)[k]);
                out.add(n + i, k, n + j, O.at(j, i)[k]);
                out.add(n + i, n + j, k, O.at(i, j)[k]);
            }
    return out;
}

/// The pre-Malcev CYBE residual of s_T written through D(i, j), the
/// pre-Malcev O-operator residual: -D(i,j), D(i,j) and D(i,j) - D(j,i).
inline ThreeTensor s_T_residual_by_blocks(const LinearMap& T, const Bimodule& B)
{
    auto D = pm_o_residual(T, B);
    const std::size_t n = B.algebra.dim(), m = B.space_dim();
    ThreeTensor out(n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.add(k, n + i, n + j, -D.at(i, j)[k]);
                out.add(n + i, k, n + j, D.at(i, j)[k]);
                out.add(n + i, n + j, k, D.at(i, j)[k] - D.at(j, i)[k]);
            }
    return out;
}

/// (𝒜, L) as a representation of the commutator algebra.
inline LinearRep left_multiplication_rep(const StructureTable& A) { return induced_malcev_reps(regular_bimodule(A)).first; }

/// Σ (e_i ⊗ ε_i - ε_i ⊗ e_i) on [𝒜] ⋉_{L*} 𝒜*.
inline TwoTensor canonical_r(const StructureTable& A)
{
    return build_r_T(Matrix::identity(A.dim()), left_multiplication_rep(A));
}

/// Σ (e_i ⊗ ε_i + ε_i ⊗ e_i) on 𝒜 ⋉_{L*,0} 𝒜*.
inline TwoTensor canonical_s(const StructureTable& A)
{
    return build_s_T(Matrix::identity(A.dim()), left_regular_bimodule(A));
}

/// x·y = T(ρ(x) T^{-1}(y)) for an invertible O-operator T.
inline StructureTable pre_malcev_from_T(const LinearMap& T, const LinearRep& R)
{
    validate(R);
    const auto& A = R.algebra;
    detail::check_map_shape(T, A.dim(), R.space_dim());
    if (!T.is_square())
        throw precondition_failed(T.cols() > T.rows()
                                      ? "map is not injective; a surjective but non-injective map needs a quotient "
                                        "choice and is not supported"
                                      : "map is not surjective, so it induces no product on the whole algebra");
    CheckResult o = check_o_operator(T, R);
    if (!o.holds)
        throw precondition_failed("map is not an O-operator for this representation (residual at " +
                                  o.witness->arguments + " is " +
                                  render_combination(o.witness->residual.col(0), A.basis()) + ")");
    Matrix Tinv;
    try {
        Tinv = inverse(T);
    } catch (const not_invertible& e) {
        throw not_invertible(std::string("map is not invertible: ") + e.what());
    }
    const std::size_t n = A.dim();
    std::vector<Matrix> left;
    for (std::size_t i = 0; i < n; ++i)
        left.push_back(T * R.action[i] * Tinv);
    return StructureTable::from_products(A.basis(), AlgebraKind::general, A.ring(),
                                         [&](std::size_t i, std::size_t j) { return left[i].col(j); });
}

struct StarProduct {
    StructureTable table;
    CheckResult o_operator;
};

/// v ∗ w = ρ(T(v))w on V; built even when T is not an O-operator, with that verdict attached.
inline StarProduct star_product(const LinearMap& T, const LinearRep& R)
{
    validate(R);
    detail::check_map_shape(T, R.algebra.dim(), R.space_dim());
    const std::size_t m = R.space_dim();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < m; ++i)
        ops.push_back(rho(R, T.col(i)));
    auto table = StructureTable::from_products(R.space_names, AlgebraKind::general, R.algebra.ring(),
                                               [&](std::size_t i, std::size_t j) { return ops[i].col(j); });
    return StarProduct{std::move(table), check_o_operator(T, R)};
}

struct CompatibleStructure {
    StructureTable table;
    LinearMap T;
    CheckResult compatibility; // B(x·y, z) = -B(y, xz)
};

/// The compatible pre-Malcev structure of a symplectic form: T = (B^T)^{-1}
/// is an O-operator for the coadjoint representation and x·y = T ad*_x T^{-1} y.
inline CompatibleStructure pre_malcev_from_symplectic(const BilinearForm& B)
{
    detail::check_form(B);
    const auto& A = B.algebra;
    detail::require_anticommutative(A, "a symplectic form");
    AxiomReport sym = check_symplectic(B);
    for (const auto& c : sym.checks)
        if (!c.holds)
            throw precondition_failed("form is not symplectic: " + c.name + " fails" +
                                      (c.note.empty() ? std::string() : " (" + c.note + ")"));
    if (!classify_nondegeneracy(B.matrix).holds())
        throw not_invertible("form determinant " + determinant(B.matrix).render() +
                             " is not a unit; instantiate the parameters first");
    Matrix Tinv = B.matrix.transpose();
    Matrix T = inverse(Tinv);
    StructureTable table = pre_malcev_from_T(T, coadjoint_rep(A));
    auto e = detail::basis_vectors(A.dim());
    CheckResult compat = passed("compatibility");
    for (std::size_t i = 0; i < A.dim() && compat.holds; ++i)
        for (std::size_t j = 0; j < A.dim() && compat.holds; ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                Scalar s = form_value(B.matrix, multiply(table, e[i], e[j]), e[k]) +
                           form_value(B.matrix, e[j], multiply(A, e[i], e[k]));
                if (!s.is_zero()) {
                    std::vector<std::size_t> idx{i, j, k};
                    compat = failed("compatibility", Witness{idx, render_tuple(idx, A.basis()), Matrix::column({s})});
                    break;
                }
            }
    return CompatibleStructure{std::move(table), std::move(T), std::move(compat)};
}

/// Bimodule (𝒜*, L* - R*, 0).
inline Bimodule dual_difference_bimodule(const StructureTable& A)
{
    Bimodule D = dual_bimodule(regular_bimodule(A));
    for (auto& M : D.right)
        M = Matrix(M.rows(), M.cols());
    return D;
}

struct FormOperatorEquivalence {
    bool form_identity = false;
    bool o_operator = false;
    AxiomReport report;
    bool agree() const { return form_identity == o_operator; }
};

/// Compares a bilinear identity of B(x, y) = <T^{-1}(x), y> with the
/// matching O-operator membership of T. Variants:
///   1: B(x·y, z) = -B(y, x·z - z·x)                      vs  T ∈ O(𝒜*, L*-R*, 0)
///   2: B(x·y, z) = -B(y, x·z) + B(y, z·x) + B(x, z·y)     vs  T ∈ O(𝒜*, L*-R*, -R*)
///   3: B(xy, z) = B(x, y·z) - B(y, x·z)                  vs  T ∈ O_[𝒜](𝒜*, L*)
inline FormOperatorEquivalence form_operator_equivalence(const StructureTable& A, const LinearMap& T, int variant)
{
    if (variant < 1 || variant > 3)
        throw input_error("variant must be 1, 2 or 3");
    detail::check_map_shape(T, A.dim(), A.dim());
    Matrix M = inverse(T).transpose();
    StructureTable C = commutator_algebra(A);
    auto dot = [&](const Vector& a, const Vector& b) { return multiply(A, a, b); };
    auto B = [&](const Vector& a, const Vector& b) { return form_value(M, a, b); };
    BilinearForm form{A, M};
    CheckResult identity = detail::check_form_triples(form, "bilinear-identity", [&](const Vector& x, const Vector& y,
                                                                                     const Vector& z) {
        switch (variant) {
        case 1:
            return B(dot(x, y), z) + B(y, dot(x, z) - dot(z, x));
        case 2:
            return B(dot(x, y), z) + B(y, dot(x, z)) - B(y, dot(z, x)) - B(x, dot(z, y));
        default:
            return B(multiply(C, x, y), z) - B(x, dot(y, z)) + B(y, dot(x, z));
        }
    });
    CheckResult member;
    switch (variant) {
    case 1:
        member = check_pm_o_operator(T, dual_difference_bimodule(A));
        break;
    case 2:
        member = check_pm_o_operator(T, dual_bimodule(regular_bimodule(A)));
        break;
    default:
        member = check_o_operator(T, dual_rep(left_multiplication_rep(A)));
        break;
    }
    member.name = "o-operator-membership";
    FormOperatorEquivalence out;
    out.form_identity = identity.holds;
    out.o_operator = member.holds;
    out.report.checks.push_back(std::move(identity));
    out.report.checks.push_back(std::move(member));
    if (out.agree())
        out.report.checks.push_back(passed("equivalence"));
    else
        out.report.checks.push_back(failed("equivalence", Witness{{}, "", Matrix()},
                                           "bilinear identity and O-operator membership disagree"));
    return out;
}

/// Exhaustive search over matrices whose free entries (mask true) range over
/// `values`, in lexicographic order of the row-major free entries.
inline std::vector<LinearMap> grid_search_o_operators(const LinearRep& R, const std::vector<Rational>& values,
                                                      const std::vector<std::vector<bool>>& mask,
                                                      std::size_t budget = 1'000'000)
{
    validate(R);
    const std::size_t n = R.algebra.dim(), m = R.space_dim();
    if (mask.size() != n)
        throw input_error("mask must have one row per algebra basis element");
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask[i].size() != m)
            throw input_error("mask rows must have one entry per module basis element");
        for (std::size_t j = 0; j < m; ++j)
            if (mask[i][j])
                free.emplace_back(i, j);
    }
    std::vector<LinearMap> found;
    if (values.empty())
        return found;
    mpz_class count = 1;
    for (std::size_t f = 0; f < free.size(); ++f)
        count *= static_cast<unsigned long>(values.size());
    if (count > budget)
        throw input_error("search space has " + count.get_str() + " candidates, over the budget of " +
                          std::to_string(budget));
    std::vector<std::size_t> digit(free.size(), 0);
    for (;;) {
        Matrix T(n, m);
        for (std::size_t f = 0; f < free.size(); ++f)
            T(free[f].first, free[f].second) = values[digit[f]];
        if (check_o_operator(T, R).holds)
            found.push_back(std::move(T));
        std::size_t p = free.size();
        while (p > 0) {
            --p;
            if (++digit[p] < values.size())
                break;
            digit[p] = 0;
            if (p == 0)
                return found;
        }
        if (free.empty())
            return found;
    }
}

} // namespace malcev
