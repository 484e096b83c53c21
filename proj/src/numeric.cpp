#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"
#include "ordhyp/incidence.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <string>

namespace ordhyp {

namespace {

using Vec = Eigen::VectorXd;

struct Candidate {
    std::uint64_t rank = 0;
    Vec plane;
};

std::vector<Vec> unit_points(const NumericConfiguration& c)
{
    std::vector<Vec> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& p = c.points[i];
        if (p.size() != c.dim + 1)
            throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has wrong length", {i});
        Vec v = Eigen::Map<const Vec>(p.data(), static_cast<Eigen::Index>(p.size()));
        const double norm = v.norm();
        if (!(norm > 0.0))
            throw Error(ErrorKind::ZeroVector, "point " + std::to_string(i) + " is zero", {i});
        out.push_back(v / norm);
    }
    return out;
}

void check_distinct(const std::vector<Vec>& pts, double eps)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::min((pts[i] - pts[j]).norm(), (pts[i] + pts[j]).norm()) <= eps)
                throw Error(ErrorKind::DuplicatePoint,
                            "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide within tolerance",
                            {i, j});
}

// Sign-free distance between unit vectors.
double projective_distance(const Vec& a, const Vec& b)
{
    return std::min((a - b).norm(), (a + b).norm());
}

void normalise_sign(Vec& h)
{
    const double cutoff = 1e-6;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        if (std::abs(h[i]) > cutoff) {
            if (h[i] < 0)
                h = -h;
            return;
        }
    }
}

struct SpanResult {
    std::map<Block, Candidate> planes;
};

// Hyperplanes of every d-subset in [begin, end), keyed by incident set.
SpanResult span_range(const std::vector<Vec>& pts, std::size_t d, std::uint64_t begin, std::uint64_t end,
                      double eps)
{
    SpanResult out;
    const std::size_t n = pts.size();
    const double confirm_tol = std::sqrt(eps);
    std::vector<std::size_t> subset(d);
    unrank_combination(n, begin, subset);
    Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d + 1));
    for (std::uint64_t r = begin; r < end; ++r) {
        for (std::size_t k = 0; k < d; ++k)
            a.row(static_cast<Eigen::Index>(k)) = pts[subset[k]].transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
        const double smallest = svd.singularValues()(static_cast<Eigen::Index>(d - 1));
        if (!(smallest > eps))
            throw Error(ErrorKind::IllConditioned,
                        "d-subset has smallest singular value " + std::to_string(smallest),
                        Block(subset.begin(), subset.end()));
        Vec h = svd.matrixV().col(static_cast<Eigen::Index>(d));
        h.normalize();
        normalise_sign(h);

        Block block;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(h.dot(pts[i])) <= eps)
                block.push_back(i);

        const auto [it, inserted] = out.planes.try_emplace(block, Candidate{r, h});
        if (!inserted && projective_distance(it->second.plane, h) > confirm_tol)
            throw Error(ErrorKind::IllConditioned, "two distinct hyperplanes share an incident set", block);
        next_combination(n, subset);
    }
    return out;
}

SpanResult span_all(const std::vector<Vec>& pts, std::size_t d, double eps, int threads)
{
    const std::uint64_t total = choose(pts.size(), d);
    const int workers = threads > 0 ? threads : omp_get_max_threads();
    std::vector<SpanResult> local(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
    {
        const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
        const auto team = static_cast<std::uint64_t>(omp_get_num_threads());
        const std::uint64_t begin = total * t / team;
        const std::uint64_t end = total * (t + 1) / team;
        try {
            if (begin < end)
                local[t] = span_range(pts, d, begin, end, eps);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SpanResult merged;
    const double confirm_tol = std::sqrt(eps);
    for (auto& part : local) {
        for (auto& [block, cand] : part.planes) {
            auto [it, inserted] = merged.planes.try_emplace(block, cand);
            if (inserted)
                continue;
            if (projective_distance(it->second.plane, cand.plane) > confirm_tol)
                throw Error(ErrorKind::IllConditioned, "two distinct hyperplanes share an incident set", block);
            if (cand.rank < it->second.rank)
                it->second = cand;
        }
    }
    return merged;
}

} // namespace

double default_eps()
{
    if (const char* env = std::getenv("ORDHYP_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0)
            return v;
    }
    return kDefaultEps;
}

NumericConfiguration to_numeric(const Configuration& c)
{
    NumericConfiguration out;
    out.dim = c.dim();
    out.label = c.label();
    out.points.reserve(c.size());
    for (const auto& p : c.points()) {
        std::vector<double> v;
        v.reserve(p.size());
        for (const auto& x : p.coords())
            v.push_back(x.get_d());
        out.points.push_back(std::move(v));
    }
    return out;
}

SecantProfile secant_profile_numeric(const NumericConfiguration& c, double eps, bool keep_hyperplanes, int threads)
{
    if (c.dim < 2)
        throw Error(ErrorKind::UnsupportedDimension, "configurations live in PG(d) with d >= 2");
    const auto pts = unit_points(c);
    check_distinct(pts, eps);
    auto spans = span_all(pts, c.dim, eps, threads);

    SecantProfile p;
    p.n = c.size();
    p.d = c.dim;
    for (auto& [block, cand] : spans.planes) {
        ++p.tau[block.size()];
        if (keep_hyperplanes) {
            p.blocks.push_back(block);
            p.numeric_planes.emplace_back(cand.plane.data(), cand.plane.data() + cand.plane.size());
        }
    }
    return p;
}

ResidueScan scan_residues(const NumericConfiguration& c, double eps, int threads)
{
    const auto profile = secant_profile_numeric(c, eps, true, threads);
    const auto pts = unit_points(c);
    ResidueScan scan;
    for (const auto& plane : profile.numeric_planes) {
        const Eigen::Map<const Vec> h(plane.data(), static_cast<Eigen::Index>(plane.size()));
        for (const auto& p : pts) {
            const double r = std::abs(h.dot(p));
            if (r <= eps)
                scan.max_incident = std::max(scan.max_incident, r);
            else
                scan.min_separated = std::min(scan.min_separated, r);
        }
    }
    return scan;
}

} // namespace ordhyp
