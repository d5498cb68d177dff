#pragma once

/// \file differential.hpp
/// Engine residuals compared against the brute-force oracle, tuple by tuple.

#include "malcev/oracle.hpp"

#include <string>

namespace malcev::differential {

struct Comparison {
    std::string kind;
    bool identical = true;
    std::string mismatch; // first differing position, if any
};

namespace detail {

inline Comparison same(std::string kind) { return Comparison{std::move(kind), true, {}}; }

inline Comparison differ(std::string kind, std::string where, const std::string& engine, const std::string& oracle)
{
    return Comparison{std::move(kind), false, where + ": engine " + engine + ", oracle " + oracle};
}

inline std::string show(const Vector& v)
{
    return render_matrix(Matrix::column(v));
}

template <std::size_t Arity, class Engine, class Oracle>
Comparison compare_tuples(const StructureTable& A, std::string kind, Engine&& engine, Oracle&& oracle)
{
    const std::size_t n = A.dim();
    auto e = malcev::detail::basis_vectors(n);
    Comparison out = same(kind);
    malcev::detail::for_each_tuple<Arity>(n, [&](const std::array<std::size_t, Arity>& idx) {
        auto [a, b] = [&]<std::size_t... I>(std::index_sequence<I...>) {
            return std::pair(engine(e[idx[I]]...), oracle(e[idx[I]]...));
        }(std::make_index_sequence<Arity>{});
        if (a == b)
            return true;
        auto where = render_tuple(malcev::detail::to_vector(idx), A.basis());
        if constexpr (std::is_same_v<decltype(a), Vector>)
            out = differ(kind, where, show(a), show(b));
        else
            out = differ(kind, where, render_matrix(a), render_matrix(b));
        return false;
    });
    return out;
}

inline Comparison compare_three(const ThreeTensor& engine, const ThreeTensor& oracle, const StructureTable& A,
                                 std::string kind)
{
    if (engine == oracle)
        return same(std::move(kind));
    for (std::size_t i = 0; i < engine.dim(); ++i)
        for (std::size_t j = 0; j < engine.dim(); ++j)
            for (std::size_t k = 0; k < engine.dim(); ++k)
                if (engine.at(i, j, k) != oracle.at(i, j, k))
                    return differ(std::move(kind), render_tuple({i, j, k}, A.basis()), engine.at(i, j, k).render(),
                                  oracle.at(i, j, k).render());
    return differ(std::move(kind), "dimension", std::to_string(engine.dim()), std::to_string(oracle.dim()));
}

inline Comparison compare_pairs(const PairResiduals& engine, const PairResiduals& oracle,
                                const std::vector<std::string>& names, std::string kind)
{
    for (std::size_t j = 0; j < engine.source_dim; ++j)
        for (std::size_t k = 0; k < engine.source_dim; ++k)
            if (engine.at(j, k) != oracle.at(j, k))
                return differ(std::move(kind), render_tuple({j, k}, names), show(engine.at(j, k)),
                              show(oracle.at(j, k)));
    return same(std::move(kind));
}

} // namespace detail

/// The Malcev residual on basis triples and on the polarized first slot.
inline Comparison malcev(const StructureTable& A)
{
    oracle::Dense c(A);
    Comparison out = detail::compare_tuples<3>(
        A, "malcev", [&](auto&... v) { return malcev_residual(A, v...); },
        [&](auto&... v) { return oracle::malcev(c, v...); });
    if (!out.identical)
        return out;
    auto e = malcev::detail::basis_vectors(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i + 1; j < A.dim(); ++j)
            for (std::size_t b = 0; b < A.dim(); ++b)
                for (std::size_t d = 0; d < A.dim(); ++d) {
                    Vector x = e[i] + e[j];
                    Vector u = malcev_residual(A, x, e[b], e[d]), w = oracle::malcev(c, x, e[b], e[d]);
                    if (u != w)
                        return detail::differ("malcev",
                                              "(" + A.basis()[i] + "+" + A.basis()[j] + ", " + A.basis()[b] + ", " +
                                                  A.basis()[d] + ")",
                                              detail::show(u), detail::show(w));
                }
    return out;
}

inline Comparison sagle(const StructureTable& A)
{
    oracle::Dense c(A);
    return detail::compare_tuples<4>(
        A, "sagle", [&](auto&... v) { return sagle_residual(A, v...); },
        [&](auto&... v) { return oracle::sagle(c, v...); });
}

inline Comparison jacobi(const StructureTable& A)
{
    oracle::Dense c(A);
    return detail::compare_tuples<3>(
        A, "jacobi", [&](auto&... v) { return jacobi_residual(A, v...); },
        [&](auto&... v) { return oracle::jacobi(c, v...); });
}

inline Comparison pre_malcev(const StructureTable& A)
{
    oracle::Dense c(A);
    return detail::compare_tuples<4>(
        A, "pre-malcev", [&](auto&... v) { return pre_malcev_residual(A, v...); },
        [&](auto&... v) { return oracle::pre_malcev(c, v...); });
}

inline Comparison rep(const LinearRep& R)
{
    return detail::compare_tuples<3>(
        R.algebra, "representation", [&](auto&... v) { return rep_residual(R, v...); },
        [&](auto&... v) { return oracle::rep(R, v...); });
}

inline Comparison bimodule(const Bimodule& B)
{
    const std::size_t n = B.algebra.dim();
    auto e = malcev::detail::basis_vectors(n);
    Comparison out = detail::same("bimodule");
    malcev::detail::for_each_tuple<3>(n, [&](const std::array<std::size_t, 3>& idx) {
        auto engine = bimodule_residuals(B, e[idx[0]], e[idx[1]], e[idx[2]]);
        auto brute = oracle::bimodule(B, e[idx[0]], e[idx[1]], e[idx[2]]);
        for (std::size_t a = 0; a < 4; ++a)
            if (engine[a] != brute[a]) {
                out = detail::differ("bimodule-" + std::to_string(a + 1),
                                     render_tuple(malcev::detail::to_vector(idx), B.algebra.basis()),
                                     render_matrix(engine[a]), render_matrix(brute[a]));
                return false;
            }
        return true;
    });
    return out;
}

inline Comparison cybe(const TwoTensor& r)
{
    return detail::compare_three(cybe_residual(r), oracle::cybe(r), r.algebra, "cybe");
}

inline Comparison pm_cybe(const TwoTensor& r)
{
    return detail::compare_three(pm_cybe_residual(r), oracle::pm_cybe(r), r.algebra, "pm-cybe");
}

inline Comparison o_operator(const LinearMap& T, const LinearRep& R)
{
    return detail::compare_pairs(o_residual(T, R), oracle::o_operator(T, R), R.space_names, "o-operator");
}

inline Comparison pm_o_operator(const LinearMap& T, const Bimodule& B)
{
    return detail::compare_pairs(pm_o_residual(T, B), oracle::pm_o_operator(T, B), B.space_names, "pm-o-operator");
}

namespace detail {

template <class Engine, class Oracle>
Comparison compare_form(const BilinearForm& B, std::string kind, Engine&& engine, Oracle&& oracle)
{
    const std::size_t n = B.algebra.dim();
    auto e = malcev::detail::basis_vectors(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar a = engine(e[i], e[j], e[k]), b = oracle(i, j, k);
                if (a != b)
                    return differ(std::move(kind), render_tuple({i, j, k}, B.algebra.basis()), a.render(), b.render());
            }
    return same(std::move(kind));
}

} // namespace detail

inline Comparison invariant(const BilinearForm& B)
{
    const auto& A = B.algebra;
    return detail::compare_form(
        B, "invariant",
        [&](const Vector& x, const Vector& y, const Vector& z) {
            return form_value(B.matrix, multiply(A, x, y), z) - form_value(B.matrix, x, multiply(A, y, z));
        },
        [&](std::size_t i, std::size_t j, std::size_t k) { return oracle::invariant(B, i, j, k); });
}

inline Comparison cyclic(const BilinearForm& B)
{
    const auto& A = B.algebra;
    return detail::compare_form(
        B, "cyclic",
        [&](const Vector& x, const Vector& y, const Vector& z) {
            return form_value(B.matrix, multiply(A, x, y), z) + form_value(B.matrix, multiply(A, y, z), x) +
                   form_value(B.matrix, multiply(A, z, x), y);
        },
        [&](std::size_t i, std::size_t j, std::size_t k) { return oracle::cyclic(B, i, j, k); });
}

} // namespace malcev::differential
