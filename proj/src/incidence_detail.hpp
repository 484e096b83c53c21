#pragma once

// Shared pieces of the exact incidence kernels.

#include "ordhyp/incidence.hpp"

#include <span>
#include <vector>

namespace ordhyp::detail {

/// Throws Error{Degenerate} unless c spans PG(d) with all d-subsets of rank d.
void require_general_position(const Configuration& c);

/// Copies the coordinates of the indexed points into a row-major buffer.
void gather_rows(const Configuration& c, std::span<const std::size_t> subset, std::vector<Integer>& rows);

Block incident_points(const Configuration& c, const Hyperplane& h);

/// Builds the profile from sorted distinct hyperplanes and their blocks.
SecantProfile assemble_exact(const Configuration& c, std::vector<Hyperplane> planes, std::vector<Block> blocks,
                             std::vector<Block> degenerate, bool keep_hyperplanes);

} // namespace ordhyp::detail
