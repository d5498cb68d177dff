#pragma once

// Fixture access and seeded random generators shared by the test binaries.

#include "malcev/differential.hpp"
#include "malcev/io.hpp"

#include <random>
#include <string>
#include <vector>

#ifndef MALCEV_FIXTURE_DIR
#define MALCEV_FIXTURE_DIR "fixtures"
#endif

namespace malcev::testing {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(MALCEV_FIXTURE_DIR) / name; }

inline io::json fixture_json(const std::string& name) { return io::read_json(fixture(name)); }

inline StructureTable load_algebra(const std::string& name)
{
    return io::algebra_from_json(fixture_json(name + ".alg.json"), name);
}

inline LinearMap load_map(const std::string& name) { return io::map_from_json(fixture_json(name + ".map.json"), name); }

/// Tensor and form fixtures carry their algebra inline.
inline TwoTensor load_tensor(const std::string& name)
{
    auto doc = fixture_json(name + ".r.json");
    return io::tensor_from_json(doc, io::algebra_from_json(doc["algebra"], name), name);
}

inline BilinearForm load_form(const std::string& name)
{
    auto doc = fixture_json(name + ".form.json");
    return io::form_from_json(doc, io::algebra_from_json(doc["algebra"], name), name);
}

inline LinearRep load_sl2_rep() { return io::rep_from_json(fixture_json("sl2_v.rep.json"), load_algebra("sl2"), "sl2_v"); }

inline Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

inline Scalar poly(const std::string& text, const Ring& ring) { return Scalar::parse(text, ring); }

// ---------------------------------------------------------------------------
// Generators. Every generator takes the engine by reference so a test's
// sequence is reproducible from its seed.

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Scalar small(Rng& rng, long lo = -2, long hi = 2) { return q(uniform(rng, lo, hi)); }

inline Rational small_rational(Rng& rng)
{
    return Rational(uniform(rng, -6, 6), uniform(rng, 1, 4));
}

/// A Laurent polynomial with up to three terms, exponents in [-2, 2].
inline Scalar laurent(Rng& rng, const Ring& ring)
{
    Scalar out;
    long terms = uniform(rng, 0, 3);
    for (long t = 0; t < terms; ++t) {
        Scalar term(small_rational(rng));
        for (const auto& name : ring.names())
            if (long e = uniform(rng, -2, 2); e != 0)
                term *= Scalar::parse(name + "^" + std::to_string(e), ring);
        out += term;
    }
    return out;
}

inline Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, double density = 0.6, long lo = -2, long hi = 2)
{
    Matrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng, density))
                M(i, j) = small(rng, lo, hi);
    return M;
}

inline Matrix random_skew(Rng& rng, std::size_t n, double density = 0.6)
{
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng, density)) {
                M(i, j) = small(rng);
                M(j, i) = -M(i, j);
            }
    return M;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, double density = 0.6)
{
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (coin(rng, density)) {
                M(i, j) = small(rng);
                M(j, i) = M(i, j);
            }
    return M;
}

inline Matrix random_invertible(Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix M = random_matrix(rng, n, n, 0.7);
        if (!determinant(M).is_zero())
            return M;
    }
}

inline StructureTable random_anticommutative(Rng& rng, std::size_t n, double density = 0.4)
{
    StructureTable A = StructureTable::zero(n, AlgebraKind::anticommutative);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (coin(rng, density))
                    A.add(i, j, k, small(rng));
    return A;
}

inline StructureTable random_general(Rng& rng, std::size_t n, double density = 0.3)
{
    StructureTable A = StructureTable::zero(n, AlgebraKind::general);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (coin(rng, density))
                    A.add(i, j, k, small(rng));
    return A;
}

/// e_0 acting on the abelian ideal span(e_1..e_{n-1}) by a random derivation:
/// always a Lie algebra.
inline StructureTable random_lie(Rng& rng, std::size_t n)
{
    StructureTable A = StructureTable::zero(n, AlgebraKind::anticommutative);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t k = 1; k < n; ++k)
            if (coin(rng, 0.5))
                A.add(0, j, k, small(rng));
    return A;
}

/// Flips the sign of one nonzero structure constant (and its mirror).
inline StructureTable perturb(Rng& rng, const StructureTable& A)
{
    std::vector<std::array<std::size_t, 3>> nz;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (A.kind() == AlgebraKind::anticommutative && i >= j)
                continue;
            for (const auto& [k, c] : A.product(i, j))
                nz.push_back({i, j, k});
        }
    StructureTable B = StructureTable::zero(A.dim(), A.kind()).with_basis(A.basis());
    if (nz.empty())
        return B;
    auto pick = nz[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nz.size()) - 1))];
    for (const auto& [i, j, k] : nz) {
        Scalar c = A.constant(i, j, k);
        B.add(i, j, k, (std::array<std::size_t, 3>{i, j, k} == pick) ? -c : c);
    }
    return B;
}

inline LinearRep random_rep(Rng& rng, const StructureTable& A, std::size_t m, double density = 0.4)
{
    LinearRep R{A, default_basis(m, "v"), {}};
    for (std::size_t i = 0; i < A.dim(); ++i)
        R.action.push_back(random_matrix(rng, m, m, density, -1, 1));
    return R;
}

inline Bimodule random_bimodule(Rng& rng, const StructureTable& A, std::size_t m, double density = 0.3)
{
    Bimodule B{A, default_basis(m, "v"), {}, {}};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        B.left.push_back(random_matrix(rng, m, m, density, -1, 1));
        B.right.push_back(random_matrix(rng, m, m, density, -1, 1));
    }
    return B;
}

/// Negates one nonzero entry of one action matrix.
inline LinearRep perturb(Rng& rng, LinearRep R)
{
    std::vector<std::array<std::size_t, 3>> nz;
    for (std::size_t i = 0; i < R.action.size(); ++i)
        for (std::size_t a = 0; a < R.space_dim(); ++a)
            for (std::size_t b = 0; b < R.space_dim(); ++b)
                if (!R.action[i](a, b).is_zero())
                    nz.push_back({i, a, b});
    if (!nz.empty()) {
        auto [i, a, b] = nz[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nz.size()) - 1))];
        R.action[i](a, b) = -R.action[i](a, b);
    }
    return R;
}

inline Bimodule perturb(Rng& rng, Bimodule B)
{
    std::vector<std::array<std::size_t, 4>> nz;
    for (std::size_t side = 0; side < 2; ++side) {
        auto& mats = side ? B.right : B.left;
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t a = 0; a < B.space_dim(); ++a)
                for (std::size_t b = 0; b < B.space_dim(); ++b)
                    if (!mats[i](a, b).is_zero())
                        nz.push_back({side, i, a, b});
    }
    if (!nz.empty()) {
        auto [side, i, a, b] = nz[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nz.size()) - 1))];
        auto& M = (side ? B.right : B.left)[i];
        M(a, b) = -M(a, b);
    }
    return B;
}

} // namespace malcev::testing
