#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace malcev;
using namespace malcev::testing;

TEST_CASE("determinant and inverse over the rationals", "[matrix]")
{
    Matrix M = Matrix::from_rows({{q(2), q(1)}, {q(7), q(4)}});
    CHECK(determinant(M) == q(1));
    Matrix I = inverse(M);
    CHECK(M * I == Matrix::identity(2));
    CHECK(I * M == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})), not_invertible);
}

TEST_CASE("parametric inverse needs a unit determinant", "[matrix]")
{
    Ring r{std::vector<std::string>{"a", "k"}};
    Matrix M = Matrix::from_rows({{poly("k", r), poly("a", r)}, {q(0), poly("k^-1", r)}});
    CHECK(determinant(M) == q(1));
    CHECK(M * inverse(M) == Matrix::identity(2));
    Matrix N = Matrix::from_rows({{poly("a", r), q(1)}, {q(1), q(1)}});
    CHECK(determinant(N) == poly("a - 1", r));
    CHECK_THROWS_WITH(inverse(N), Catch::Matchers::ContainsSubstring("instantiate"));
}

TEST_CASE("non-degeneracy classification", "[matrix]")
{
    Ring r{std::vector<std::string>{"a"}};
    CHECK(classify_nondegeneracy(Matrix(2, 2)).status == NonDegeneracy::Status::degenerate);
    CHECK(classify_nondegeneracy(Matrix::identity(3)).status == NonDegeneracy::Status::nondegenerate);
    NonDegeneracy g = classify_nondegeneracy(Matrix::from_rows({{poly("a", r), q(1)}, {q(1), q(1)}}));
    CHECK(g.status == NonDegeneracy::Status::generic);
    CHECK(g.describe() == "generically non-degenerate: condition = a - 1 != 0");
}

TEST_CASE("random invertible matrices invert exactly", "[matrix][property]")
{
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
        Matrix M = random_invertible(rng, n);
        CHECK(M * inverse(M) == Matrix::identity(n));
        CHECK(determinant(M.transpose()) == determinant(M));
        Matrix N = random_matrix(rng, n, n);
        CHECK(determinant(M * N) == determinant(M) * determinant(N));
    }
}

TEST_CASE("skew and symmetric predicates", "[matrix]")
{
    Rng rng(22);
    Matrix S = random_skew(rng, 4);
    CHECK(is_skew(S));
    CHECK(is_symmetric(random_symmetric(rng, 4)));
    CHECK(is_skew(Matrix(3, 3)));
    CHECK(is_symmetric(Matrix(3, 3)));
    CHECK_FALSE(is_skew(Matrix::identity(2)));
}
