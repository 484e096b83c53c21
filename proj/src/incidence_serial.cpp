#include "incidence_detail.hpp"

#include "ordhyp/combinatorics.hpp"

#include <map>

namespace ordhyp {

SecantProfile secant_profile_serial(const Configuration& c, const ProfileOptions& options)
{
    if (options.validate)
        detail::require_general_position(c);
    const std::size_t d = c.dim();

    std::map<Hyperplane, Block> found;
    std::vector<Block> degenerate;
    std::vector<Integer> rows;
    std::vector<Integer> h;
    for_each_combination(c.size(), d, [&](std::span<const std::size_t> subset) {
        detail::gather_rows(c, subset, rows);
        if (!detail::integer_nullspace(rows, d, d + 1, h)) {
            degenerate.emplace_back(subset.begin(), subset.end());
            return;
        }
        found.try_emplace(Hyperplane(h));
    });
    for (auto& [plane, block] : found)
        block = detail::incident_points(c, plane);

    std::vector<Hyperplane> planes;
    std::vector<Block> blocks;
    planes.reserve(found.size());
    blocks.reserve(found.size());
    for (auto& [plane, block] : found) {
        planes.push_back(plane);
        blocks.push_back(std::move(block));
    }
    return detail::assemble_exact(c, std::move(planes), std::move(blocks), std::move(degenerate),
                                  options.keep_hyperplanes);
}

} // namespace ordhyp
