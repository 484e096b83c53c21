#include "ordhyp/random.hpp"

#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"

#include <algorithm>
#include <numeric>

namespace ordhyp {

namespace {

Rational small_rational(std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    // Mostly integers, occasionally halves and quarters.
    const int q = den(rng) <= 3 ? 1 : 2;
    return Rational(num(rng), q);
}

// True when p together with every (d-1)-subset of `pts` has rank d.
bool keeps_general_position(const std::vector<ProjectivePoint>& pts, const ProjectivePoint& p, std::size_t d)
{
    const std::size_t cols = d + 1;
    bool ok = true;
    std::vector<Integer> rows(d * cols);
    for_each_combination(pts.size(), d - 1, [&](std::span<const std::size_t> subset) {
        if (!ok)
            return;
        for (std::size_t r = 0; r + 1 < d; ++r)
            std::copy(pts[subset[r]].coords().begin(), pts[subset[r]].coords().end(), rows.begin() + r * cols);
        std::copy(p.coords().begin(), p.coords().end(), rows.begin() + (d - 1) * cols);
        ok = detail::integer_rank(rows, d, cols) == d;
    });
    return ok;
}

} // namespace

Configuration random_general_position(std::mt19937_64& rng, std::size_t n, std::size_t d)
{
    const int range = d <= 2 ? 2 : 3;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<ProjectivePoint> pts;
        int misses = 0;
        while (pts.size() < n && misses < 2000) {
            std::vector<Rational> v(d + 1);
            for (auto& x : v)
                x = small_rational(rng, range);
            if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; })) {
                ++misses;
                continue;
            }
            ProjectivePoint p{std::span<const Rational>(v)};
            if (std::find(pts.begin(), pts.end(), p) != pts.end() || !keeps_general_position(pts, p, d)) {
                ++misses;
                continue;
            }
            pts.push_back(std::move(p));
        }
        if (pts.size() < n)
            continue;
        Configuration c(d, std::move(pts), "random n=" + std::to_string(n) + " d=" + std::to_string(d));
        if (validate_general_position(c).ok())
            return c;
    }
    throw Error(ErrorKind::Degenerate, "could not sample a general-position configuration");
}

ProjectiveMap random_projective_map(std::mt19937_64& rng, std::size_t d)
{
    while (true) {
        Matrix m(d + 1, d + 1);
        for (std::size_t r = 0; r <= d; ++r)
            for (std::size_t c = 0; c <= d; ++c)
                m(r, c) = small_rational(rng, 3);
        if (sgn(determinant(m)) != 0)
            return ProjectiveMap(std::move(m));
    }
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace ordhyp
