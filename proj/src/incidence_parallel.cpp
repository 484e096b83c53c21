#include "incidence_detail.hpp"

#include "ordhyp/combinatorics.hpp"

#include <omp.h>

#include <algorithm>

namespace ordhyp {

namespace {

int worker_count(int requested)
{
    return requested > 0 ? requested : omp_get_max_threads();
}

} // namespace

SecantProfile secant_profile(const Configuration& c, const ProfileOptions& options)
{
    if (options.validate)
        detail::require_general_position(c);
    const std::size_t n = c.size();
    const std::size_t d = c.dim();
    const std::uint64_t total = choose(n, d);
    const int workers = worker_count(options.threads);

    std::vector<std::vector<Hyperplane>> local_planes(static_cast<std::size_t>(workers));
    std::vector<std::vector<Block>> local_degenerate(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
    {
        const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
        const auto team = static_cast<std::uint64_t>(omp_get_num_threads());
        const std::uint64_t begin = total * t / team;
        const std::uint64_t end = total * (t + 1) / team;
        auto& planes = local_planes[t];
        auto& degenerate = local_degenerate[t];
        if (begin < end) {
            std::vector<std::size_t> subset(d);
            unrank_combination(n, begin, subset);
            std::vector<Integer> rows;
            std::vector<Integer> h;
            for (std::uint64_t r = begin; r < end; ++r) {
                detail::gather_rows(c, subset, rows);
                if (detail::integer_nullspace(rows, d, d + 1, h))
                    planes.emplace_back(h);
                else
                    degenerate.emplace_back(subset.begin(), subset.end());
                next_combination(n, subset);
            }
            std::sort(planes.begin(), planes.end());
            planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
        }
    }

    // Thread ranges are contiguous in rank order, so concatenating the
    // degenerate lists keeps them lexicographic.
    std::vector<Hyperplane> planes;
    std::vector<Block> degenerate;
    for (std::size_t t = 0; t < local_planes.size(); ++t) {
        planes.insert(planes.end(), std::make_move_iterator(local_planes[t].begin()),
                      std::make_move_iterator(local_planes[t].end()));
        degenerate.insert(degenerate.end(), std::make_move_iterator(local_degenerate[t].begin()),
                          std::make_move_iterator(local_degenerate[t].end()));
    }
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

    std::vector<Block> blocks(planes.size());
    const auto count = static_cast<std::ptrdiff_t>(planes.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 32)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        blocks[static_cast<std::size_t>(i)] = detail::incident_points(c, planes[static_cast<std::size_t>(i)]);

    return detail::assemble_exact(c, std::move(planes), std::move(blocks), std::move(degenerate),
                                  options.keep_hyperplanes);
}

std::vector<std::uint64_t> per_point_ordinary(const Configuration& c, int threads)
{
    ProfileOptions options;
    options.keep_hyperplanes = true;
    options.threads = threads;
    return per_point_ordinary(secant_profile(c, options));
}

} // namespace ordhyp
