#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordhyp {

enum class BoundKind { Lower, Upper, Exact };

std::string_view to_string(BoundKind kind);

/// A bound on e_d(n), the least number of ordinary hyperplanes of an n-point
/// set in PG(d) in general position, with enough detail to recompute it.
struct BoundResult {
    std::int64_t n = 0;
    std::int64_t d = 0;
    BoundKind kind = BoundKind::Lower;
    std::int64_t value = 0;
    /// cs, smalls, ip, project2, registry, best, polygon, prism, trivial,
    /// dplus3_odd, standard.
    std::string method;
    std::string note;
    /// Sub-results the value was derived from.
    std::vector<BoundResult> inputs;
    /// IP optimum: tau_i for d+1 <= i <= n-1 (tau_d is the value).
    std::map<std::int64_t, std::int64_t> witness;
};

/// Recomputes `r.value` from its method and trace. Sub-results are replayed
/// recursively. Throws Error{VerificationFailure} when the trace is not
/// self-consistent.
std::int64_t replay(const BoundResult& r);

// -- Known values ----------------------------------------------------------------

struct RegistryEntry {
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    std::string citation;
    /// Family name of an exact construction attaining `upper`, if any.
    std::string witness_family;
};

/// Results whose proofs are bespoke case analyses and are not re-derived.
class KnownValuesRegistry {
public:
    static const KnownValuesRegistry& instance();

    const RegistryEntry* find(std::int64_t n, std::int64_t d) const;
    const std::map<std::pair<std::int64_t, std::int64_t>, RegistryEntry>& entries() const { return entries_; }

private:
    KnownValuesRegistry();
    std::map<std::pair<std::int64_t, std::int64_t>, RegistryEntry> entries_;
};

// -- Individual lower bounds --------------------------------------------------------

/// ceil(6n/13) for n != 7; the registry value for n = 7.
BoundResult csima_sawyer_bound(std::int64_t n);

/// ceil(C(n,d) - (d+1)/(d+2) C(n,d+1)), clamped at zero.
BoundResult smalls_bound(std::int64_t n, std::int64_t d);

inline constexpr std::int64_t kIpMaxGap = 12;

/// Minimum of tau_d over nonnegative integer profiles satisfying the
/// (d+1)-tuple count equality and the (d+2)-subset extension inequality.
/// Exhaustive depth-first search with branch and bound. Throws
/// Error{SearchTooLarge} when n - d > kIpMaxGap.
BoundResult ip_bound(std::int64_t n, std::int64_t d);

using LowerOracle = std::function<BoundResult(std::int64_t, std::int64_t)>;

/// ceil(n/d * oracle(n-1, d-1)). d >= 3.
BoundResult projection_lower(std::int64_t n, std::int64_t d, const LowerOracle& oracle);

/// Projection recursion down to the plane, based on Csima-Sawyer.
BoundResult projection_chain_cs(std::int64_t n, std::int64_t d);

// -- Combined bounds -----------------------------------------------------------

inline constexpr std::int64_t kMaxN = 60;

/// Which lower-bound derivation the table follows.
enum class TableProfile {
    /// The classical derivation of the small-values table: registry,
    /// closed forms for n <= d+3, the integer program at (8,4) and (9,5),
    /// and one projection step from the (n-1, d-1) cell.
    Standard,
    /// The strongest bound available from every implemented method.
    Best,
};

/// Memoised best lower/upper bounds. Every upper bound coming from a
/// construction is certified by running the incidence engine on it; a
/// disagreement with the closed form throws Error{VerificationFailure}.
class BoundCalculator {
public:
    BoundResult best_lower(std::int64_t n, std::int64_t d);
    BoundResult standard_lower(std::int64_t n, std::int64_t d);
    BoundResult best_upper(std::int64_t n, std::int64_t d);

    /// Overrides a construction's closed form, for fault injection in tests.
    void override_formula(const std::string& family, std::function<std::int64_t(std::int64_t, std::int64_t)> f);

private:
    std::int64_t certified(const std::string& family, std::int64_t n, std::int64_t d);
    std::int64_t formula(const std::string& family, std::int64_t n, std::int64_t d) const;

    std::recursive_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, BoundResult> lower_;
    std::map<std::pair<std::int64_t, std::int64_t>, BoundResult> standard_;
    std::map<std::pair<std::int64_t, std::int64_t>, BoundResult> upper_;
    std::map<std::tuple<std::string, std::int64_t, std::int64_t>, std::int64_t> certified_;
    std::map<std::string, std::function<std::int64_t(std::int64_t, std::int64_t)>> overrides_;
};

// -- Table ------------------------------------------------------------------------

struct TableCell {
    std::int64_t n = 0;
    std::int64_t d = 0;
    bool shown = false;
    BoundResult lower;
    BoundResult upper;
    /// "v", "lower...upper" or ".".
    std::string text;
};

struct Table {
    std::int64_t n_min = 4;
    std::int64_t n_max = 13;
    std::int64_t d_min = 2;
    std::int64_t d_max = 7;
    TableProfile profile = TableProfile::Standard;
    std::vector<TableCell> cells; // row-major by n, then d

    const TableCell& at(std::int64_t n, std::int64_t d) const;
};

/// Standard profile: cells with n < d+2, and the cells with d >= 6, n >= 11
/// that the reference table leaves open, render as ".". Best profile fills every
/// cell with n >= d+2.
Table generate_table(BoundCalculator& calc, std::int64_t n_max = 13, std::int64_t d_max = 7,
                     TableProfile profile = TableProfile::Standard);

std::string render_markdown(const Table& t);
std::string render_csv(const Table& t);
std::string render_json(const Table& t);

/// Collapses every run of two or more dots to "..." and trims whitespace,
/// so "14..22" and "14...22" compare equal.
std::string normalize_cell(std::string_view text);

} // namespace ordhyp
