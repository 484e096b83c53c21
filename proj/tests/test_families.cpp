#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace ordhyp;

namespace {

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

TEST_CASE("polygon formula")
{
    CHECK(polygon_formula(12) == 6);
    CHECK(polygon_formula(13) == 9);
    CHECK(polygon_formula(11) == 6);
    CHECK(polygon_formula(9) == 6);
    CHECK(kind_of([] { polygon_formula(7); }) == ErrorKind::UnsupportedSize);
}

TEST_CASE("polygon constructions")
{
    CHECK(combinatorial_ordinary_count(polygon_model(12)).ordinary() == 6);
    CHECK(combinatorial_ordinary_count(polygon_model(9)).ordinary() == 6);
    CHECK(combinatorial_ordinary_count(polygon_model(11)).ordinary() == 6);
    for (std::size_t n = 8; n <= 24; ++n) {
        const auto model = polygon_model(n);
        const auto pts = polygon_points(n);
        CHECK(model.size() == n);
        CHECK(pts.size() == n);
        CHECK(combinatorial_ordinary_count(model).tau == secant_profile_numeric(pts).tau);
    }
    // X_12: the 6 affine points lie on a circle, 6 directions at infinity.
    const auto x12 = polygon_points(12);
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(x12.points[j][2] == 1.0);
        CHECK(x12.points[6 + j][2] == 0.0);
        CHECK(std::hypot(x12.points[j][0], x12.points[j][1]) == doctest::Approx(1.0));
    }
    CHECK(kind_of([] { polygon_model(6); }) == ErrorKind::UnsupportedSize);
}

TEST_CASE("prism formula")
{
    CHECK(prism_formula(12) == 24);
    CHECK(prism_formula(10) == 20);
    CHECK(prism_formula(11) == 31);
    CHECK(prism_formula(9) == 22);
    CHECK(prism_formula(16) == 48);
    CHECK(kind_of([] { prism_formula(5); }) == ErrorKind::UnsupportedSize);
}

TEST_CASE("prism constructions")
{
    CHECK(combinatorial_ordinary_count(prism_model(10)).ordinary() == 20);
    CHECK(combinatorial_ordinary_count(prism_model(12)).ordinary() == 24);
    CHECK(combinatorial_ordinary_count(prism_model(9)).ordinary() == 22);
    // Two m-secant planes of the polygons.
    CHECK(combinatorial_ordinary_count(prism_model(12)).tau_at(6) == 2);
    for (std::size_t n = 8; n <= 18; ++n)
        CHECK(combinatorial_ordinary_count(prism_model(n)).tau == secant_profile_numeric(prism_points(n)).tau);
    for (std::size_t x = 0; x < 12; ++x)
        CHECK(secant_profile_numeric(prism_points(11, x)).ordinary() == 31);
    CHECK(kind_of([] { prism_model(9, 10); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("trivial example")
{
    CHECK(secant_profile(trivial_example(8, 4)).ordinary() == 35);
    CHECK(secant_profile(trivial_example(9, 4)).ordinary() == 56);
    CHECK(secant_profile(trivial_example(6, 4)).ordinary() == 10);
    const auto t = trivial_example(7, 3);
    CHECK(validate_general_position(t).ok());
    CHECK(secant_profile(t).tau_at(6) == 1);
    for (std::size_t d = 2; d <= 6; ++d)
        CHECK(trivial_formula(static_cast<std::int64_t>(d + 4), static_cast<std::int64_t>(d)) ==
              static_cast<std::int64_t>(secant_profile(trivial_example(d + 4, d)).ordinary()));
    CHECK(kind_of([] { trivial_example(4, 3); }) == ErrorKind::UnsupportedSize);
}

TEST_CASE("cube and broken Fano")
{
    CHECK(cube().size() == 8);
    CHECK(secant_profile(cube()).ordinary() == 8);
    CHECK(secant_profile(broken_fano()).ordinary() == 3);
    CHECK(broken_fano() == project_from_point(cube(), 0));
    CHECK(secant_profile(cube().without(5)).tau_at(3) == 11);
}

TEST_CASE("d+3 construction")
{
    const auto p3 = secant_profile(dplus3_odd(3));
    CHECK(p3.tau_at(3) == 8);
    CHECK(p3.tau_at(4) == 3);
    CHECK(secant_profile(dplus3_odd(5)).ordinary() == 32);
    CHECK(secant_profile(dplus3_odd(7)).ordinary() == 80);
    CHECK(dplus3_odd_formula(7) == 80);
    CHECK(secant_profile(dplus3_odd(5, {Rational(5), Rational(-2, 3)})).ordinary() == 32);
    CHECK(kind_of([] { dplus3_odd(4); }) == ErrorKind::NotOdd);
    CHECK(kind_of([] { dplus3_odd(5, {Rational(2), Rational(2)}); }) == ErrorKind::AlphasNotDistinct);
}

TEST_CASE("construct dispatch")
{
    CHECK(std::get<CombinatorialModel>(construct({"polygon", 12, 2, {}, Backend::Combinatorial})).size() == 12);
    CHECK(std::get<NumericConfiguration>(construct({"prism", 10, 3, {}, Backend::Float})).size() == 10);
    CHECK(std::get<Configuration>(construct({"trivial", 8, 4, {}, Backend::Exact})).size() == 8);
    CHECK(std::get<Configuration>(construct({"cube", 7, 3, 2, Backend::Exact})).size() == 7);
    CHECK(std::get<Configuration>(construct({"cube", 7, 0, {}, Backend::Exact})).size() == 7);
    CHECK(kind_of([] { construct({"cube", 8, 3, 9, Backend::Exact}); }) == ErrorKind::UnsupportedSize);
    CHECK(std::get<NumericConfiguration>(construct({"cube", 8, 3, {}, Backend::Float})).size() == 8);
    CHECK(kind_of([] { construct({"polygon", 12, 2, {}, Backend::Exact}); }) == ErrorKind::UnsupportedBackend);
    CHECK(kind_of([] { construct({"polygon", 12, 3, {}, Backend::Float}); }) == ErrorKind::UnsupportedDimension);
    CHECK(kind_of([] { construct({"dplus3_odd", 7, 3, {}, Backend::Exact}); }) == ErrorKind::UnsupportedSize);
    CHECK(kind_of([] { construct({"nope", 8, 3, {}, Backend::Exact}); }) == ErrorKind::ParseError);
    CHECK(parse_backend("comb") == Backend::Combinatorial);
    CHECK(parse_backend("float") == Backend::Float);
    CHECK_FALSE(parse_backend("double").has_value());
}
