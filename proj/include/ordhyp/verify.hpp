#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordhyp {

/// One reproduced claim: what was computed against what was expected.
struct Claim {
    int criterion = 0;
    std::string group;
    std::string reference;
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct VerifyOptions {
    /// Run a single group (see verification_groups()); all when empty.
    std::optional<std::string> only;
    std::uint64_t seed = 1;
    int threads = 0;
    std::size_t property_configs = 200;
    std::size_t agreement_configs = 20;
    /// Replacement closed forms keyed by family name (polygon, prism,
    /// trivial, dplus3_odd); used to check that a wrong formula is caught.
    std::map<std::string, std::function<std::int64_t(std::int64_t, std::int64_t)>> formula_overrides;
};

/// Group names in criterion order: cube, cube_minus_vertex, polygon, prism,
/// trivial, dplus3, ip, table, properties, agreement.
const std::vector<std::string>& verification_groups();

std::vector<Claim> run_verification(const VerifyOptions& options = {});

/// The reference small-values table, rows n = 4..13, columns d = 2..7.
const std::vector<std::vector<std::string>>& reference_table();

} // namespace ordhyp
