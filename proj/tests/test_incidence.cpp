#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"
#include "ordhyp/incidence.hpp"
#include "ordhyp/random.hpp"

#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

using namespace ordhyp;

namespace {

// Oracle: determinant by cofactor expansion in plain integers.
long long det(const std::vector<std::vector<long long>>& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    long long out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        out += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
    }
    return out;
}

// Oracle secant profile: for each d-subset, the hyperplane through it is the
// set of points p with det(subset, p) == 0.
std::map<std::size_t, std::uint64_t> brute_profile(const std::vector<std::vector<long long>>& pts, std::size_t d)
{
    std::set<std::vector<std::size_t>> planes;
    for_each_combination(pts.size(), d, [&](std::span<const std::size_t> s) {
        std::vector<std::size_t> on;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            std::vector<std::vector<long long>> m;
            for (auto i : s)
                m.push_back(pts[i]);
            m.push_back(pts[p]);
            if (det(m) == 0)
                on.push_back(p);
        }
        planes.insert(on);
    });
    std::map<std::size_t, std::uint64_t> tau;
    for (const auto& p : planes)
        ++tau[p.size()];
    return tau;
}

std::vector<std::vector<long long>> as_ints(const Configuration& c)
{
    std::vector<std::vector<long long>> out;
    for (const auto& p : c.points()) {
        std::vector<long long> row;
        for (const auto& x : p.coords())
            row.push_back(x.get_si());
        out.push_back(row);
    }
    return out;
}

SecantProfile profile(std::size_t n, std::size_t d, std::map<std::size_t, std::uint64_t> tau)
{
    SecantProfile p;
    p.n = n;
    p.d = d;
    p.tau = std::move(tau);
    return p;
}

} // namespace

TEST_CASE("cube profile against a determinant oracle")
{
    const auto c = cube();
    const auto p = secant_profile(c);
    CHECK(p.ordinary() == 8);
    CHECK(p.tau_at(4) == 12);
    CHECK(p.tau == brute_profile(as_ints(c), 3));
    CHECK(check_trivcount(p));
    CHECK(check_bettercount(p));
    CHECK(check_ints(c).ok);
}

TEST_CASE("named examples")
{
    const auto minus = secant_profile(cube().without(0));
    CHECK(minus.tau_at(3) == 11);
    CHECK(minus.tau_at(4) == 6);
    CHECK(minus.tau_at(5) == 0);
    CHECK(minus.tau_at(6) == 0);
    CHECK(secant_profile(trivial_example(8, 4)).ordinary() == 35);
    CHECK(secant_profile(broken_fano()).ordinary() == 3);
}

TEST_CASE("random configurations against the oracle")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 25; ++k) {
        const std::size_t d = 2 + k % 3;
        const std::size_t n = 6 + k % 4;
        const auto c = random_general_position(rng, n, d);
        CHECK(secant_profile(c).tau == brute_profile(as_ints(c), d));
    }
}

TEST_CASE("per-point counts")
{
    const auto cube_counts = per_point_ordinary(cube());
    CHECK(cube_counts == std::vector<std::uint64_t>(8, 3));

    for (std::size_t d = 2; d <= 5; ++d) {
        const auto t = trivial_example(d + 4, d);
        const auto counts = per_point_ordinary(t);
        CHECK(counts[0] == secant_profile(t).ordinary());
    }

    const auto prism = combinatorial_ordinary_count(prism_model(10), true);
    const auto pc = per_point_ordinary(prism);
    CHECK(std::adjacent_find(pc.begin(), pc.end(), std::not_equal_to<>()) == pc.end());
    CHECK(std::accumulate(pc.begin(), pc.end(), std::uint64_t{0}) == 3 * prism.ordinary());

    CHECK_THROWS_AS(per_point_ordinary(secant_profile(cube())), Error);
}

TEST_CASE("trivcount examples")
{
    CHECK(check_trivcount(profile(8, 3, {{3, 8}, {4, 12}})));
    CHECK(check_trivcount(profile(7, 3, {{3, 35}})));
    CHECK_FALSE(check_trivcount(profile(8, 3, {{3, 8}, {4, 11}})));
}

TEST_CASE("bettercount examples")
{
    CHECK(check_bettercount(profile(8, 3, {{3, 8}, {4, 12}})));
    CHECK(check_bettercount(profile(8, 4, {{5, 9}})));
    CHECK_FALSE(check_bettercount(profile(8, 4, {{5, 10}})));
}

TEST_CASE("ints check")
{
    CHECK(check_ints(cube()).ok);
    for (std::size_t d = 2; d <= 4; ++d)
        for (std::size_t n = d + 2; n <= d + 5; ++n)
            CHECK(check_ints(trivial_example(n, d)).ok);
}

TEST_CASE("degenerate input")
{
    // In PG(2) any two distinct points span a line, so a collinear triple is
    // still in general position.
    Configuration line(2, {make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({1, 1, 0}),
                           make_point({0, 0, 1})});
    CHECK(secant_profile(line).tau_at(3) == 1);

    Configuration plane3(3, {make_point({1, 0, 0, 0}), make_point({0, 1, 0, 0}), make_point({1, 1, 0, 0}),
                             make_point({0, 0, 1, 0}), make_point({0, 0, 0, 1})});
    try {
        secant_profile(plane3);
        FAIL("expected Degenerate");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
        CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
    }
    ProfileOptions skip;
    skip.validate = false;
    const auto q = secant_profile(plane3, skip);
    CHECK(q.degenerate_subsets == std::vector<Block>{{0, 1, 2}});
    CHECK(secant_profile_serial(plane3, skip) == q);
}

TEST_CASE("thread count does not change output")
{
    std::mt19937_64 rng(9);
    const auto c = random_general_position(rng, 11, 3);
    ProfileOptions opt;
    opt.keep_hyperplanes = true;
    opt.threads = 1;
    const auto one = secant_profile(c, opt);
    for (int t : {2, 3, 7}) {
        opt.threads = t;
        CHECK(secant_profile(c, opt) == one);
        CHECK(per_point_ordinary(c, t) == per_point_ordinary(one));
    }
    CHECK(secant_profile_serial(c, opt) == one);
    const auto nc = prism_points(14);
    const auto base = secant_profile_numeric(nc, kDefaultEps, true, 1);
    for (int t : {2, 5})
        CHECK(secant_profile_numeric(nc, kDefaultEps, true, t) == base);
}

TEST_CASE("numeric backend")
{
    CHECK(secant_profile_numeric(polygon_points(12)).ordinary() == 6);
    CHECK(secant_profile_numeric(prism_points(10)).ordinary() == 20);
    CHECK(secant_profile_numeric(prism_points(16)).ordinary() == 48);
    CHECK(secant_profile_numeric(to_numeric(cube())).tau == secant_profile(cube()).tau);

    NumericConfiguration bad;
    bad.dim = 3;
    bad.points = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1e-12, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    try {
        secant_profile_numeric(bad);
        FAIL("expected IllConditioned");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IllConditioned);
        CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
    }
    NumericConfiguration twins;
    twins.dim = 2;
    twins.points = {{1, 0, 0}, {0, 1, 0}, {1, 1e-12, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(secant_profile_numeric(twins), Error);
    const auto scan = scan_residues(polygon_points(80));
    CHECK(scan.max_incident < kDefaultEps / 10);
    CHECK(scan.min_separated > kDefaultEps * 10);
}

TEST_CASE("eps override from the environment")
{
    CHECK(default_eps() == kDefaultEps);
    setenv("ORDHYP_EPS", "1e-9", 1);
    CHECK(default_eps() == doctest::Approx(1e-9));
    setenv("ORDHYP_EPS", "garbage", 1);
    CHECK(default_eps() == kDefaultEps);
    unsetenv("ORDHYP_EPS");
}
