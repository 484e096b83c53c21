#include "ordhyp/geometry.hpp"

#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"

#include <algorithm>
#include <map>

namespace ordhyp {

std::vector<Integer> canonicalize(std::vector<Integer> v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(g) == 0)
        throw Error(ErrorKind::ZeroVector, "cannot canonicalize the zero vector");
    const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (sgn(*lead) < 0)
        g = -g;
    for (auto& x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

std::vector<Integer> canonicalize(std::span<const Rational> v)
{
    Integer lcm = 1;
    for (const auto& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        scaled[i] = v[i].get_num() * (lcm / v[i].get_den());
    return canonicalize(std::move(scaled));
}

ProjectivePoint make_point(std::initializer_list<long> coords)
{
    std::vector<Integer> v;
    v.reserve(coords.size());
    for (long x : coords)
        v.emplace_back(x);
    return ProjectivePoint(std::move(v));
}

bool incident(const Hyperplane& h, const ProjectivePoint& p)
{
    if (h.size() != p.size())
        throw Error(ErrorKind::DimensionMismatch, "hyperplane and point live in different spaces");
    Integer dot = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        mpz_addmul(dot.get_mpz_t(), h[i].get_mpz_t(), p[i].get_mpz_t());
    return sgn(dot) == 0;
}

Hyperplane spanning_hyperplane(std::span<const ProjectivePoint> points)
{
    if (points.empty())
        throw Error(ErrorKind::DimensionMismatch, "no points given");
    const std::size_t cols = points.front().size();
    if (points.size() + 1 != cols)
        throw Error(ErrorKind::DimensionMismatch, "need exactly d points in PG(d)");
    std::vector<Integer> rows;
    rows.reserve(points.size() * cols);
    for (const auto& p : points) {
        if (p.size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "points of mixed dimension");
        rows.insert(rows.end(), p.coords().begin(), p.coords().end());
    }
    std::vector<Integer> h;
    if (!detail::integer_nullspace(std::move(rows), points.size(), cols, h))
        throw Error(ErrorKind::Degenerate, "points do not span a hyperplane");
    return Hyperplane(std::move(h));
}

Configuration::Configuration(std::size_t dim, std::vector<ProjectivePoint> points, std::string label)
    : dim_(dim)
    , points_(std::move(points))
    , label_(std::move(label))
{
    if (dim_ < 2)
        throw Error(ErrorKind::UnsupportedDimension, "configurations live in PG(d) with d >= 2");
    std::map<ProjectivePoint, std::size_t> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != dim_ + 1)
            throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has wrong length", {i});
        const auto [it, inserted] = seen.emplace(points_[i], i);
        if (!inserted)
            throw Error(ErrorKind::DuplicatePoint,
                        "points " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide",
                        {it->second, i});
    }
}

Configuration Configuration::without(std::size_t index) const
{
    if (index >= points_.size())
        throw Error(ErrorKind::IndexOutOfRange, "no point " + std::to_string(index));
    auto pts = points_;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
    return Configuration(dim_, std::move(pts), label_ + " minus point " + std::to_string(index));
}

Configuration Configuration::permuted(std::span<const std::size_t> order) const
{
    if (order.size() != points_.size())
        throw Error(ErrorKind::DimensionMismatch, "permutation length differs from point count");
    std::vector<ProjectivePoint> pts;
    pts.reserve(order.size());
    for (std::size_t i : order) {
        if (i >= points_.size())
            throw Error(ErrorKind::IndexOutOfRange, "permutation entry out of range");
        pts.push_back(points_[i]);
    }
    return Configuration(dim_, std::move(pts), label_);
}

GeneralPositionReport validate_general_position(const Configuration& c)
{
    GeneralPositionReport report;
    const std::size_t d = c.dim();
    const std::size_t cols = d + 1;
    if (c.size() == 0)
        return report;

    std::vector<Integer> all;
    all.reserve(c.size() * cols);
    for (const auto& p : c.points())
        all.insert(all.end(), p.coords().begin(), p.coords().end());
    report.full_span = detail::integer_rank(all, c.size(), cols) == cols;

    report.general_position = true;
    if (c.size() < d)
        return report;
    std::vector<Integer> rows(d * cols);
    for_each_combination(c.size(), d, [&](std::span<const std::size_t> subset) {
        if (!report.general_position)
            return;
        for (std::size_t r = 0; r < d; ++r)
            std::copy(c[subset[r]].coords().begin(), c[subset[r]].coords().end(), rows.begin() + r * cols);
        if (detail::integer_rank(rows, d, cols) < d) {
            report.general_position = false;
            report.witness.assign(subset.begin(), subset.end());
        }
    });
    return report;
}

ProjectiveMap::ProjectiveMap(Matrix matrix)
    : matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2)
        throw Error(ErrorKind::DimensionMismatch, "projective map needs a square matrix");
    if (sgn(determinant(matrix_)) == 0)
        throw Error(ErrorKind::SingularMap, "matrix is not invertible");
}

ProjectivePoint ProjectiveMap::operator()(const ProjectivePoint& p) const
{
    if (p.size() != matrix_.cols())
        throw Error(ErrorKind::DimensionMismatch, "map and point dimensions differ");
    std::vector<Rational> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        v[i] = Rational(p[i]);
    const auto image = matrix_.apply(v);
    return ProjectivePoint(std::span<const Rational>(image));
}

Configuration transform(const Configuration& c, const ProjectiveMap& m)
{
    if (m.dim() != c.dim())
        throw Error(ErrorKind::DimensionMismatch, "map and configuration dimensions differ");
    std::vector<ProjectivePoint> pts;
    pts.reserve(c.size());
    for (const auto& p : c.points())
        pts.push_back(m(p));
    return Configuration(c.dim(), std::move(pts), c.label() + " (transformed)");
}

Configuration project_from_point(const Configuration& c, std::size_t index)
{
    if (c.dim() < 3)
        throw Error(ErrorKind::UnsupportedDimension, "projection needs d >= 3");
    if (index >= c.size())
        throw Error(ErrorKind::IndexOutOfRange, "no point " + std::to_string(index), {index});

    const auto& x = c[index].coords();
    const std::size_t k = static_cast<std::size_t>(
        std::find_if(x.begin(), x.end(), [](const Integer& v) { return sgn(v) != 0; }) - x.begin());

    std::vector<ProjectivePoint> out;
    out.reserve(c.size() - 1);
    std::map<ProjectivePoint, std::size_t> seen;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == index)
            continue;
        const auto& y = c[i].coords();
        // x_k * y - y_k * x is the same projective point as y - (y_k/x_k) x.
        std::vector<Integer> image;
        image.reserve(y.size() - 1);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (j != k)
                image.push_back(x[k] * y[j] - y[k] * x[j]);
        if (std::all_of(image.begin(), image.end(), [](const Integer& v) { return sgn(v) == 0; }))
            throw Error(ErrorKind::DuplicateProjection, "point coincides with the centre", {index, i});
        ProjectivePoint p(std::move(image));
        const auto [it, inserted] = seen.emplace(p, i);
        if (!inserted)
            throw Error(ErrorKind::DuplicateProjection,
                        "points " + std::to_string(it->second) + " and " + std::to_string(i) +
                            " are collinear with the centre",
                        {index, it->second, i});
        out.push_back(std::move(p));
    }
    return Configuration(c.dim() - 1, std::move(out), c.label() + " projected from point " + std::to_string(index));
}

} // namespace ordhyp
