#include "ordhyp/error.hpp"
#include "ordhyp/exact_linalg.hpp"

#include <doctest.h>

#include <random>

using namespace ordhyp;

namespace {

Matrix ints(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long v : r)
            row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return Matrix::from_rows(out);
}

bool annihilates(const Matrix& m, const std::vector<Rational>& h)
{
    const auto image = m.apply(h);
    return std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; });
}

// Naive Gaussian elimination over Q, used as an independent rank oracle.
std::size_t naive_rank(Matrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t k = 0; k < m.cols(); ++k)
            std::swap(m(p, k), m(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k)
                m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range)
{
    std::uniform_int_distribution<int> dist(-range, range);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(dist(rng), 1 + std::abs(dist(rng)));
    return m;
}

} // namespace

TEST_CASE("parse and format rationals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("+2/-4") == Rational(-1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix::identity(4)) == 4);
    Matrix cube(8, 4);
    for (std::size_t i = 0; i < 8; ++i) {
        cube(i, 0) = (i & 4) ? -1 : 1;
        cube(i, 1) = (i & 2) ? -1 : 1;
        cube(i, 2) = (i & 1) ? -1 : 1;
        cube(i, 3) = 1;
    }
    CHECK(rank(cube) == 4);
    CHECK(rank(ints({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == 2);
    CHECK(rank(ints({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("nullspace examples")
{
    const auto a = ints({{1, 0, 0}, {0, 1, 0}});
    const auto h = nullspace_vector(a);
    CHECK(h[0] == 0);
    CHECK(h[1] == 0);
    CHECK(h[2] != 0);

    const auto b = ints({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    const auto g = nullspace_vector(b);
    REQUIRE(g.size() == 4);
    CHECK(annihilates(b, g));
    // Hand solution (1,1,1,-1).
    const Rational s = g[0];
    CHECK(g[1] == s);
    CHECK(g[2] == s);
    CHECK(g[3] == -s);

    try {
        nullspace_vector(ints({{1, 0, 0}, {2, 0, 0}}));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
    }
    try {
        nullspace_vector(ints({{1, 0, 0}}));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant(Matrix::identity(5)) == 1);
    CHECK(determinant(ints({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(ints({{2, 3}, {4, 6}})) == 0);
    CHECK(determinant(ints({{1, 2, 3}, {0, 4, 5}, {1, 0, 6}})) == 22);
}

TEST_CASE("rank properties on random matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 5;
        const std::size_t cols = 1 + (trial / 5) % 6;
        // Small ranges produce rank-deficient matrices often.
        const auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 4);
        const auto r = rank(m);
        CHECK(r == naive_rank(m));
        CHECK(r == rank(m.transpose()));
        Matrix p = random_matrix(rng, rows, rows, 5);
        if (determinant(p) != 0)
            CHECK(rank(p * m) == r);
        if (cols == rows + 1 && r == rows)
            CHECK(annihilates(m, nullspace_vector(m)));
    }
}

TEST_CASE("integer kernels")
{
    std::vector<Integer> rows = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1};
    std::vector<Integer> h;
    REQUIRE(detail::integer_nullspace(rows, 3, 4, h));
    CHECK(h[0] * -1 == h[3]);
    CHECK(detail::integer_rank(rows, 3, 4) == 3);
    std::vector<Integer> deficient = {1, 2, 3, 2, 4, 6};
    CHECK_FALSE(detail::integer_nullspace(deficient, 2, 3, h));
}

TEST_CASE("binomial")
{
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(16, 7) == 11440);
    CHECK(binomial(3, 5) == 0);
}
