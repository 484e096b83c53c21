#pragma once

#include "ordhyp/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ordhyp {

using Block = std::vector<std::size_t>;

/// Counts of i-secant hyperplanes, i.e. hyperplanes meeting the point set in
/// exactly i points, for d <= i <= n-1. Only nonzero counts are stored.
struct SecantProfile {
    std::size_t n = 0;
    std::size_t d = 0;
    std::map<std::size_t, std::uint64_t> tau;

    /// Incident point sets, one per distinct hyperplane (filled on request).
    /// Exact path: ordered by canonical coefficient vector, with `planes`
    /// parallel. Numeric and combinatorial paths: ordered by block.
    std::vector<Block> blocks;
    std::vector<Hyperplane> planes;
    std::vector<std::vector<double>> numeric_planes;

    /// d-subsets that failed to span (only when validation was skipped).
    std::vector<Block> degenerate_subsets;

    std::uint64_t tau_at(std::size_t i) const
    {
        const auto it = tau.find(i);
        return it == tau.end() ? 0 : it->second;
    }
    std::uint64_t ordinary() const { return tau_at(d); }
    std::uint64_t hyperplane_count() const;

    friend bool operator==(const SecantProfile&, const SecantProfile&) = default;
};

struct ProfileOptions {
    /// Run validate_general_position first and throw Error{Degenerate} on
    /// failure. When false, degenerate subsets are recorded and skipped.
    bool validate = true;
    bool keep_hyperplanes = false;
    /// OpenMP worker count; 0 uses the runtime default.
    int threads = 0;
};

/// Exact secant profile. Enumerates the C(n,d) d-subsets across OpenMP
/// workers, merges canonical hyperplanes, then tests every point against
/// every distinct hyperplane. Output does not depend on the worker count.
SecantProfile secant_profile(const Configuration& c, const ProfileOptions& options = {});

/// Single-threaded reference kernel for secant_profile, kept for
/// cross-checking and benchmarking.
SecantProfile secant_profile_serial(const Configuration& c, const ProfileOptions& options = {});

/// Number of ordinary hyperplanes through each point. Sums to d * ordinary.
std::vector<std::uint64_t> per_point_ordinary(const SecantProfile& p);
std::vector<std::uint64_t> per_point_ordinary(const Configuration& c, int threads = 0);

/// Tally of blocks by size, for index-arithmetic models.
SecantProfile profile_from_blocks(std::size_t n, std::size_t d, std::vector<Block> blocks, bool keep_blocks);

/// sum_{i=d}^{n-1} C(i,d) tau_i == C(n,d).
bool check_trivcount(const SecantProfile& p);

/// sum_{i=1}^{n-d-1} (n-d-i) C(d+i, i-1) tau_{d+i} <= C(n, d+2).
bool check_bettercount(const SecantProfile& p);

struct IntsReport {
    bool ok = true;
    /// The (d+2)-subset with two or more (d+1)-subsets in a hyperplane.
    std::vector<std::size_t> witness;
};

/// For every (d+2)-subset spanning the whole space, at most one of its
/// (d+1)-subsets lies in a hyperplane. Exhaustive rank computations; does not
/// use the profile machinery.
IntsReport check_ints(const Configuration& c);

// ---------------------------------------------------------------------------
// Floating point backend for configurations with irrational coordinates.

inline constexpr double kDefaultEps = 1e-7;

/// Default tolerance, overridable through the ORDHYP_EPS environment variable.
double default_eps();

struct NumericConfiguration {
    std::size_t dim = 0;
    std::vector<std::vector<double>> points;
    std::string label;

    std::size_t size() const noexcept { return points.size(); }
};

NumericConfiguration to_numeric(const Configuration& c);

/// Tolerance-based secant profile. Points and hyperplanes are unit
/// normalised; p lies on h iff |h.p| <= eps. Every d-subset must have smallest
/// singular value > eps, otherwise Error{IllConditioned} names the subset.
/// Hyperplanes are merged by their incident point set and confirmed pairwise
/// on coefficients.
SecantProfile secant_profile_numeric(const NumericConfiguration& c, double eps = kDefaultEps,
                                     bool keep_hyperplanes = false, int threads = 0);

struct ResidueScan {
    /// Largest |h.p| among residues classified as incident.
    double max_incident = 0.0;
    /// Smallest |h.p| among residues classified as non-incident.
    double min_separated = 1.0;
};

/// All point-hyperplane residues over the spanned hyperplanes, split at eps.
ResidueScan scan_residues(const NumericConfiguration& c, double eps = kDefaultEps, int threads = 0);

} // namespace ordhyp
