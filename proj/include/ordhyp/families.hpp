#pragma once

#include "ordhyp/geometry.hpp"
#include "ordhyp/incidence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ordhyp {

/// Incidence structure of a configuration derived by index arithmetic
/// rather than coordinates: the point labels and the block (incident point
/// set) of every spanned hyperplane.
struct CombinatorialModel {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<Block> blocks;
    std::string label;

    std::size_t size() const noexcept { return labels.size(); }
};

// -- Regular polygon examples in PG(2) --------------------------------------
//
// X_{2m}: m points A_j = (cos 2pi j/m, sin 2pi j/m, 1) on a circle and m
// directions I_k = (-sin pi k/m, cos pi k/m, 0) at infinity. The chord A_i A_j
// meets the line at infinity in I_{i+j mod m}. Odd n adds the centre
// (n = 1 mod 4) or drops I_0 = (0,1,0) (n = 3 mod 4). Points are ordered
// A_0..A_{m-1}, I_0..I_{m-1}, centre.

/// Ordinary-line count of the polygon example with n points. n >= 8.
std::int64_t polygon_formula(std::int64_t n);
NumericConfiguration polygon_points(std::size_t n);
CombinatorialModel polygon_model(std::size_t n);

// -- Prism examples in PG(3) --------------------------------------------------
//
// P_{2m}: T_j = (cos 2pi j/m, sin 2pi j/m, 1, 0) and B_j = (..., 0, 1). The
// plane T_i T_j B_k contains B_l iff i + j = k + l (mod m). Odd n uses
// P_{n+1} minus one point; `deleted` indexes P_{n+1} (T ring 0..m-1, B ring
// m..2m-1) and defaults to B_0.

std::int64_t prism_formula(std::int64_t n);
NumericConfiguration prism_points(std::size_t n, std::optional<std::size_t> deleted = std::nullopt);
CombinatorialModel prism_model(std::size_t n, std::optional<std::size_t> deleted = std::nullopt);

/// Profile of a combinatorial model.
SecantProfile combinatorial_ordinary_count(const CombinatorialModel& model, bool keep_blocks = false);

// -- Exact families ------------------------------------------------------------

/// Apex (1,0,...,0) plus the n-1 moment-curve points (0,1,t,...,t^{d-1})
/// for t in `params` (default 0..n-2). Spans C(n-1,d-1) ordinary hyperplanes.
Configuration trivial_example(std::size_t n, std::size_t d, std::vector<Rational> params = {});

/// The eight vertices (+-1,+-1,+-1,1) of a cube in PG(3), last sign fastest.
Configuration cube();

/// The cube projected from vertex 0: seven points of PG(2), three ordinary lines.
Configuration broken_fano();

/// d+3 points for odd d: the basis u_1..u_{d+1}, u = u_1 + ... + u_d and
/// v = a_1 (u_1 + u_2) + ... + a_{(d-1)/2} (u_{d-2} + u_{d-1}) + u_{d+1}.
/// Spans (d+3)(d+1)(d-1)/6 ordinary hyperplanes. Default alphas 1..(d-1)/2.
Configuration dplus3_odd(std::size_t d, std::vector<Rational> alphas = {});

std::int64_t trivial_formula(std::int64_t n, std::int64_t d);
std::int64_t dplus3_odd_formula(std::int64_t d);

// -- Uniform construction entry point --------------------------------------------

enum class Backend { Exact, Float, Combinatorial };

std::optional<Backend> parse_backend(std::string_view name);
std::string_view to_string(Backend backend);

struct FamilySpec {
    std::string family;
    std::size_t n = 0;
    std::size_t d = 0;
    /// Deleted-point selector (odd prism, cube minus a vertex).
    std::optional<std::size_t> variant;
    Backend backend = Backend::Exact;
};

using Construction = std::variant<Configuration, NumericConfiguration, CombinatorialModel>;

/// Families: polygon, prism, trivial, cube, broken_fano, dplus3_odd.
Construction construct(const FamilySpec& spec);

} // namespace ordhyp
