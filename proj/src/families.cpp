#include "ordhyp/families.hpp"

#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

namespace ordhyp {

namespace {

void require_family_size(std::size_t n, const char* family)
{
    if (n < 8)
        throw Error(ErrorKind::UnsupportedSize, std::string(family) + " examples need n >= 8");
}

using SpanRule = std::function<Block(std::span<const std::size_t>)>;

// Builds the blocks of the sub-configuration `present` of a larger structure
// whose spans are given by `rule` (in full-structure ids). In general
// position, the hyperplanes spanned by a subset are exactly the original
// hyperplanes keeping at least d of its points.
CombinatorialModel build_model(std::size_t dim, const std::vector<std::string>& full_labels,
                               const std::vector<std::size_t>& present, const SpanRule& rule, std::string label)
{
    CombinatorialModel model;
    model.dim = dim;
    model.label = std::move(label);
    std::vector<std::size_t> position(full_labels.size(), full_labels.size());
    for (std::size_t i = 0; i < present.size(); ++i) {
        position[present[i]] = i;
        model.labels.push_back(full_labels[present[i]]);
    }

    std::set<Block> blocks;
    std::vector<std::size_t> ids(dim);
    for_each_combination(present.size(), dim, [&](std::span<const std::size_t> subset) {
        for (std::size_t k = 0; k < dim; ++k)
            ids[k] = present[subset[k]];
        Block block;
        for (std::size_t id : rule(ids))
            if (position[id] < present.size())
                block.push_back(position[id]);
        std::sort(block.begin(), block.end());
        blocks.insert(std::move(block));
    });
    model.blocks.assign(blocks.begin(), blocks.end());
    return model;
}

struct PolygonShape {
    std::size_t m = 0;
    bool centre = false;
    bool drop_infinity_zero = false;
};

PolygonShape polygon_shape(std::size_t n)
{
    require_family_size(n, "polygon");
    if (n % 2 == 0)
        return {n / 2, false, false};
    if (n % 4 == 1)
        return {(n - 1) / 2, true, false};
    return {(n + 1) / 2, false, true};
}

std::size_t prism_deleted(std::size_t n, std::optional<std::size_t> deleted)
{
    const std::size_t full = n + 1;
    const std::size_t index = deleted.value_or(full / 2);
    if (index >= full)
        throw Error(ErrorKind::IndexOutOfRange, "deleted point index out of range", {index});
    return index;
}

} // namespace

std::int64_t polygon_formula(std::int64_t n)
{
    if (n < 8)
        throw Error(ErrorKind::UnsupportedSize, "polygon examples need n >= 8");
    if (n % 2 == 0)
        return n / 2;
    if (n % 4 == 1)
        return (3 * n - 3) / 4;
    return (3 * n - 9) / 4;
}

NumericConfiguration polygon_points(std::size_t n)
{
    const auto shape = polygon_shape(n);
    const double m = static_cast<double>(shape.m);
    const double pi = std::numbers::pi;
    NumericConfiguration c;
    c.dim = 2;
    c.label = "polygon " + std::to_string(n);
    for (std::size_t j = 0; j < shape.m; ++j)
        c.points.push_back({std::cos(2 * pi * j / m), std::sin(2 * pi * j / m), 1.0});
    for (std::size_t k = 0; k < shape.m; ++k) {
        if (k == 0 && shape.drop_infinity_zero)
            continue;
        c.points.push_back({-std::sin(pi * k / m), std::cos(pi * k / m), 0.0});
    }
    if (shape.centre)
        c.points.push_back({0.0, 0.0, 1.0});
    return c;
}

CombinatorialModel polygon_model(std::size_t n)
{
    const auto shape = polygon_shape(n);
    const std::size_t m = shape.m;
    const std::size_t centre = 2 * m;
    auto is_affine = [m](std::size_t id) { return id < m; };
    auto is_infinite = [m](std::size_t id) { return id >= m && id < 2 * m; };
    auto affine = [](std::size_t i) { return i; };
    auto infinite = [m](std::size_t k) { return m + k % m; };
    // Centre, A_i and A_{i+m/2} share a diameter; its direction is
    // I_{2i+m/2} by the chord rule.
    auto diameter = [&](std::size_t i) {
        const std::size_t j = (i + m / 2) % m;
        return Block{centre, affine(i), affine(j), infinite(i + j)};
    };
    auto chord = [&](std::size_t i, std::size_t j) {
        Block b{affine(i), affine(j), infinite(i + j)};
        if (shape.centre && (j + m - i) % m == m / 2)
            b.push_back(centre);
        return b;
    };

    const SpanRule rule = [&](std::span<const std::size_t> ids) -> Block {
        std::size_t p = ids[0];
        std::size_t q = ids[1];
        if (p > q)
            std::swap(p, q);
        if (is_infinite(p) && is_infinite(q)) {
            Block b;
            for (std::size_t k = 0; k < m; ++k)
                b.push_back(infinite(k));
            return b;
        }
        if (is_affine(p) && is_affine(q))
            return chord(p, q);
        if (is_affine(p) && is_infinite(q)) {
            const std::size_t k = q - m;
            if (k == (2 * p) % m)
                return {p, q}; // tangent at A_p
            return chord(p, (k + m - p) % m);
        }
        // p is affine or infinite, q is the centre.
        if (is_affine(p))
            return diameter(p);
        const std::size_t k = p - m;
        for (std::size_t i = 0; i < m; ++i)
            if ((2 * i + m / 2) % m == k)
                return diameter(i);
        return {p, q};
    };

    std::vector<std::string> labels;
    for (std::size_t j = 0; j < m; ++j)
        labels.push_back("A" + std::to_string(j));
    for (std::size_t k = 0; k < m; ++k)
        labels.push_back("I" + std::to_string(k));
    labels.push_back("O");

    std::vector<std::size_t> present;
    for (std::size_t id = 0; id < 2 * m; ++id)
        if (!(shape.drop_infinity_zero && id == m))
            present.push_back(id);
    if (shape.centre)
        present.push_back(centre);
    return build_model(2, labels, present, rule, "polygon " + std::to_string(n));
}

std::int64_t prism_formula(std::int64_t n)
{
    if (n < 8)
        throw Error(ErrorKind::UnsupportedSize, "prism examples need n >= 8");
    switch (n % 4) {
    case 0: return n * n / 4 - n;
    case 2: return n * n / 4 - n / 2;
    case 1: return (3 * n * n - 8 * n + 5) / 8;
    default: return (3 * n * n - 12 * n + 17) / 8;
    }
}

NumericConfiguration prism_points(std::size_t n, std::optional<std::size_t> deleted)
{
    require_family_size(n, "prism");
    const std::size_t m = (n + 1) / 2;
    const std::size_t drop = n % 2 == 1 ? prism_deleted(n, deleted) : 2 * m;
    const double pi = std::numbers::pi;
    NumericConfiguration c;
    c.dim = 3;
    c.label = "prism " + std::to_string(n);
    for (std::size_t id = 0; id < 2 * m; ++id) {
        if (id == drop)
            continue;
        const double angle = 2 * pi * static_cast<double>(id % m) / static_cast<double>(m);
        const bool top = id < m;
        c.points.push_back({std::cos(angle), std::sin(angle), top ? 1.0 : 0.0, top ? 0.0 : 1.0});
    }
    return c;
}

CombinatorialModel prism_model(std::size_t n, std::optional<std::size_t> deleted)
{
    require_family_size(n, "prism");
    const std::size_t m = (n + 1) / 2;
    const std::size_t drop = n % 2 == 1 ? prism_deleted(n, deleted) : 2 * m;

    const SpanRule rule = [m](std::span<const std::size_t> ids) -> Block {
        std::vector<std::size_t> top;
        std::vector<std::size_t> bottom;
        for (std::size_t id : ids)
            (id < m ? top : bottom).push_back(id < m ? id : id - m);
        Block b;
        if (bottom.empty() || top.empty()) {
            const std::size_t offset = bottom.empty() ? 0 : m;
            for (std::size_t j = 0; j < m; ++j)
                b.push_back(offset + j);
            return b;
        }
        if (top.size() == 2) {
            const std::size_t k = bottom[0];
            const std::size_t l = (top[0] + top[1] + m - k) % m;
            b = {top[0], top[1], m + k};
            if (l != k)
                b.push_back(m + l);
            return b;
        }
        const std::size_t i = top[0];
        const std::size_t j = (bottom[0] + bottom[1] + m - i) % m;
        b = {i, m + bottom[0], m + bottom[1]};
        if (j != i)
            b.push_back(j);
        return b;
    };

    std::vector<std::string> labels;
    for (std::size_t j = 0; j < m; ++j)
        labels.push_back("T" + std::to_string(j));
    for (std::size_t j = 0; j < m; ++j)
        labels.push_back("B" + std::to_string(j));
    std::vector<std::size_t> present;
    for (std::size_t id = 0; id < 2 * m; ++id)
        if (id != drop)
            present.push_back(id);
    return build_model(3, labels, present, rule, "prism " + std::to_string(n));
}

SecantProfile combinatorial_ordinary_count(const CombinatorialModel& model, bool keep_blocks)
{
    return profile_from_blocks(model.size(), model.dim, model.blocks, keep_blocks);
}

Configuration trivial_example(std::size_t n, std::size_t d, std::vector<Rational> params)
{
    if (d < 2 || n < d + 2)
        throw Error(ErrorKind::UnsupportedSize, "trivial example needs d >= 2 and n >= d + 2");
    if (params.empty())
        for (std::size_t t = 0; t + 1 < n; ++t)
            params.emplace_back(static_cast<long>(t));
    if (params.size() != n - 1)
        throw Error(ErrorKind::UnsupportedSize, "trivial example needs n - 1 curve parameters");

    std::vector<ProjectivePoint> pts;
    std::vector<Rational> apex(d + 1);
    apex[0] = 1;
    pts.emplace_back(std::span<const Rational>(apex));
    for (const auto& t : params) {
        std::vector<Rational> v(d + 1);
        Rational power = 1;
        for (std::size_t j = 1; j <= d; ++j) {
            v[j] = power;
            power *= t;
        }
        pts.emplace_back(std::span<const Rational>(v));
    }
    return Configuration(d, std::move(pts), "trivial n=" + std::to_string(n) + " d=" + std::to_string(d));
}

std::int64_t trivial_formula(std::int64_t n, std::int64_t d)
{
    return static_cast<std::int64_t>(choose(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(d - 1)));
}

Configuration cube()
{
    std::vector<ProjectivePoint> pts;
    for (long x : {1, -1})
        for (long y : {1, -1})
            for (long z : {1, -1})
                pts.push_back(make_point({x, y, z, 1}));
    return Configuration(3, std::move(pts), "cube");
}

Configuration broken_fano()
{
    const auto projected = project_from_point(cube(), 0);
    return Configuration(2, projected.points(), "broken_fano");
}

Configuration dplus3_odd(std::size_t d, std::vector<Rational> alphas)
{
    if (d < 3 || d % 2 == 0)
        throw Error(ErrorKind::NotOdd, "construction needs odd d >= 3");
    const std::size_t half = (d - 1) / 2;
    if (alphas.empty())
        for (std::size_t t = 1; t <= half; ++t)
            alphas.emplace_back(static_cast<long>(t));
    if (alphas.size() != half)
        throw Error(ErrorKind::UnsupportedSize, "need (d-1)/2 alphas");
    auto sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::AlphasNotDistinct, "alphas must be distinct");

    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Integer> e(d + 1, 0);
        e[i] = 1;
        pts.emplace_back(std::move(e));
    }
    std::vector<Rational> u(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i)
        u[i] = 1;
    pts.emplace_back(std::span<const Rational>(u));
    std::vector<Rational> v(d + 1, 0);
    for (std::size_t t = 0; t < half; ++t) {
        v[2 * t] = alphas[t];
        v[2 * t + 1] = alphas[t];
    }
    v[d] = 1;
    pts.emplace_back(std::span<const Rational>(v));
    return Configuration(d, std::move(pts), "dplus3_odd d=" + std::to_string(d));
}

std::int64_t dplus3_odd_formula(std::int64_t d)
{
    return (d + 3) * (d + 1) * (d - 1) / 6;
}

std::optional<Backend> parse_backend(std::string_view name)
{
    if (name == "exact")
        return Backend::Exact;
    if (name == "float")
        return Backend::Float;
    if (name == "comb")
        return Backend::Combinatorial;
    return std::nullopt;
}

std::string_view to_string(Backend backend)
{
    switch (backend) {
    case Backend::Exact: return "exact";
    case Backend::Float: return "float";
    case Backend::Combinatorial: return "comb";
    }
    return "exact";
}

Construction construct(const FamilySpec& spec)
{
    const auto& f = spec.family;
    // d == 0 and n == 0 mean "not given" for families that fix them.
    auto require_dim = [&](std::size_t d) {
        if (spec.d != 0 && spec.d != d)
            throw Error(ErrorKind::UnsupportedDimension, f + " lives in PG(" + std::to_string(d) + ")");
    };
    auto require_size = [&](std::size_t n) {
        if (spec.n != 0 && spec.n != n)
            throw Error(ErrorKind::UnsupportedSize, f + " has " + std::to_string(n) + " points");
    };
    if (f == "polygon" || f == "prism") {
        const bool polygon = f == "polygon";
        require_dim(polygon ? 2 : 3);
        switch (spec.backend) {
        case Backend::Float:
            return polygon ? polygon_points(spec.n) : prism_points(spec.n, spec.variant);
        case Backend::Combinatorial:
            return polygon ? polygon_model(spec.n) : prism_model(spec.n, spec.variant);
        case Backend::Exact:
            throw Error(ErrorKind::UnsupportedBackend, f + " has irrational coordinates; use float or comb");
        }
    }

    Configuration exact;
    if (f == "trivial") {
        exact = trivial_example(spec.n, spec.d);
    } else if (f == "cube") {
        require_dim(3);
        const bool minus = spec.variant.has_value() || spec.n == 7;
        require_size(minus ? 7 : 8);
        if (minus && spec.variant && *spec.variant >= 8)
            throw Error(ErrorKind::IndexOutOfRange, "cube has vertices 0..7", {*spec.variant});
        exact = minus ? cube().without(spec.variant.value_or(0)) : cube();
    } else if (f == "broken_fano") {
        require_dim(2);
        require_size(7);
        exact = broken_fano();
    } else if (f == "dplus3_odd") {
        if (spec.d == 0)
            throw Error(ErrorKind::UnsupportedDimension, "dplus3_odd needs d");
        require_size(spec.d + 3);
        exact = dplus3_odd(spec.d);
    } else {
        throw Error(ErrorKind::ParseError, "unknown family '" + f + "'");
    }
    switch (spec.backend) {
    case Backend::Exact: return exact;
    case Backend::Float: return to_numeric(exact);
    case Backend::Combinatorial: break;
    }
    throw Error(ErrorKind::UnsupportedBackend, f + " has no combinatorial model");
}

} // namespace ordhyp
