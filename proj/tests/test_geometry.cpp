#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"
#include "ordhyp/geometry.hpp"
#include "ordhyp/incidence.hpp"
#include "ordhyp/random.hpp"

#include <doctest.h>

#include <random>

using namespace ordhyp;

namespace {

std::vector<Integer> zs(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

Hyperplane plane(std::initializer_list<long> v)
{
    return Hyperplane(zs(v));
}

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("canonicalize examples")
{
    const std::vector<Rational> a = {Rational(1, 2), Rational(-1, 3), Rational(0)};
    CHECK(canonicalize(a) == zs({3, -2, 0}));
    CHECK(canonicalize(zs({-2, -4, -6})) == zs({1, 2, 3}));
    CHECK(canonicalize(zs({0, 0, 5})) == zs({0, 0, 1}));
    CHECK(kind_of([] { canonicalize(zs({0, 0, 0})); }) == ErrorKind::ZeroVector);
}

TEST_CASE("canonicalize is idempotent and scale invariant")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> v(4);
        for (auto& x : v)
            x = Rational(dist(rng), 1 + std::abs(dist(rng)));
        if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
            continue;
        const auto c = canonicalize(v);
        CHECK(canonicalize(c) == c);
        Rational lambda(dist(rng) == 0 ? 7 : dist(rng), 1 + std::abs(dist(rng)));
        if (lambda == 0)
            lambda = -3;
        std::vector<Rational> scaled;
        for (const auto& x : v)
            scaled.push_back(x * lambda);
        CHECK(canonicalize(scaled) == c);
    }
}

TEST_CASE("incidence examples")
{
    CHECK(incident(plane({0, 0, 1}), make_point({1, 5, 0})));
    CHECK_FALSE(incident(plane({0, 0, 1}), make_point({0, 0, 1})));
    CHECK(incident(plane({1, 1, 1, -1}), make_point({1, 0, 0, 1})));
    CHECK(kind_of([] { incident(plane({0, 0, 1}), make_point({1, 0, 0, 1})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("spanning hyperplane")
{
    const std::vector<ProjectivePoint> a = {make_point({1, 0, 0}), make_point({0, 1, 0})};
    CHECK(spanning_hyperplane(a) == plane({0, 0, 1}));
    const std::vector<ProjectivePoint> b = {make_point({1, 0, 0, 1}), make_point({0, 1, 0, 1}),
                                            make_point({0, 0, 1, 1})};
    CHECK(spanning_hyperplane(b) == plane({1, 1, 1, -1}));
    const std::vector<ProjectivePoint> collinear = {make_point({1, 0, 0, 1}), make_point({0, 1, 0, 1}),
                                                    make_point({1, 1, 0, 2})};
    CHECK(kind_of([&] { spanning_hyperplane(collinear); }) == ErrorKind::Degenerate);
}

TEST_CASE("general position report")
{
    const auto c = validate_general_position(cube());
    CHECK(c.full_span);
    CHECK(c.general_position);

    Configuration flat(3,
                       {make_point({1, 0, 0, 0}), make_point({0, 1, 0, 0}), make_point({0, 0, 1, 0}),
                        make_point({1, 1, 1, 0}), make_point({1, 2, 3, 0})});
    CHECK_FALSE(validate_general_position(flat).full_span);

    Configuration line(3, {make_point({1, 0, 0, 0}), make_point({0, 1, 0, 0}), make_point({1, 1, 0, 0}),
                           make_point({0, 0, 1, 0}), make_point({0, 0, 0, 1})});
    const auto r = validate_general_position(line);
    CHECK(r.full_span);
    CHECK_FALSE(r.general_position);
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("configuration rejects duplicates")
{
    try {
        Configuration(2, {make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({-2, 0, 0})});
        FAIL("expected DuplicatePoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicatePoint);
        CHECK(e.witness() == std::vector<std::size_t>{0, 2});
    }
}

TEST_CASE("transforms")
{
    const auto c = cube();
    CHECK(transform(c, ProjectiveMap(Matrix::identity(4))) == c);

    Matrix diag = Matrix::identity(4);
    diag(0, 0) = 2;
    const auto stretched = transform(c, ProjectiveMap(diag));
    for (const auto& p : stretched.points()) {
        CHECK(abs(p[0]) == 2);
        CHECK(abs(p[1]) == 1);
        CHECK(abs(p[2]) == 1);
        CHECK(abs(p[3]) == 1);
    }
    CHECK(secant_profile(stretched) == secant_profile(c));

    Matrix swap(4, 4);
    swap(0, 2) = swap(1, 0) = swap(2, 1) = swap(3, 3) = 1;
    const auto t = trivial_example(8, 3);
    CHECK(secant_profile(transform(t, ProjectiveMap(swap))).tau == secant_profile(t).tau);

    CHECK(kind_of([] { ProjectiveMap(Matrix(4, 4)); }) == ErrorKind::SingularMap);
}

TEST_CASE("random maps preserve the profile of prisms and trivial examples")
{
    std::mt19937_64 rng(11);
    const auto t = trivial_example(9, 4);
    const auto base = secant_profile(t).tau;
    for (int k = 0; k < 5; ++k)
        CHECK(secant_profile(transform(t, random_projective_map(rng, 4))).tau == base);
    const auto c = cube().without(3);
    for (int k = 0; k < 5; ++k)
        CHECK(secant_profile(transform(c, random_projective_map(rng, 3))).tau == secant_profile(c).tau);
}

TEST_CASE("projection from a point")
{
    const auto c = cube();
    const auto cp = secant_profile(c, {.validate = true, .keep_hyperplanes = true});
    const auto per = per_point_ordinary(cp);
    for (std::size_t x = 0; x < c.size(); ++x) {
        const auto s = project_from_point(c, x);
        CHECK(s.dim() == 2);
        CHECK(s.size() == 7);
        CHECK(secant_profile(s).ordinary() == per[x]);
    }

    const auto t = trivial_example(9, 4);
    const auto tp = per_point_ordinary(t);
    for (std::size_t x = 0; x < t.size(); ++x)
        CHECK(secant_profile(project_from_point(t, x)).ordinary() == tp[x]);

    CHECK(kind_of([] { project_from_point(broken_fano(), 0); }) == ErrorKind::UnsupportedDimension);
    CHECK(kind_of([&] { project_from_point(c, 8); }) == ErrorKind::IndexOutOfRange);

    Configuration through_x(3, {make_point({1, 0, 0, 0}), make_point({0, 1, 0, 0}), make_point({1, 1, 0, 0}),
                                make_point({0, 0, 1, 0}), make_point({0, 0, 0, 1})});
    CHECK(kind_of([&] { project_from_point(through_x, 0); }) == ErrorKind::DuplicateProjection);
}

TEST_CASE("without and permuted keep order")
{
    const auto c = cube();
    const auto w = c.without(2);
    CHECK(w.size() == 7);
    CHECK(w[2] == c[3]);
    const std::vector<std::size_t> order = {7, 6, 5, 4, 3, 2, 1, 0};
    CHECK(c.permuted(order)[0] == c[7]);
}
