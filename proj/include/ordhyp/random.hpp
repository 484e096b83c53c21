#pragma once

#include "ordhyp/geometry.hpp"

#include <random>
#include <vector>

namespace ordhyp {

/// n points of PG(d) with small rational coordinates, built incrementally so
/// that every d-subset has rank d, and retried until the set spans PG(d).
/// Small coordinates make collinear/coplanar coincidences (secants) common.
Configuration random_general_position(std::mt19937_64& rng, std::size_t n, std::size_t d);

/// Random invertible (d+1) x (d+1) map with small rational entries.
ProjectiveMap random_projective_map(std::mt19937_64& rng, std::size_t d);

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n);

} // namespace ordhyp
