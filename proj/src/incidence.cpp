#include "incidence_detail.hpp"

#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"

#include <algorithm>

namespace ordhyp {

namespace detail {

void require_general_position(const Configuration& c)
{
    const auto report = validate_general_position(c);
    if (!report.full_span)
        throw Error(ErrorKind::Degenerate, "configuration '" + c.label() + "' lies in a hyperplane");
    if (!report.general_position)
        throw Error(ErrorKind::Degenerate, "configuration '" + c.label() + "' has a d-subset not spanning a hyperplane",
                    report.witness);
}

void gather_rows(const Configuration& c, std::span<const std::size_t> subset, std::vector<Integer>& rows)
{
    const std::size_t cols = c.dim() + 1;
    rows.resize(subset.size() * cols);
    for (std::size_t r = 0; r < subset.size(); ++r)
        std::copy(c[subset[r]].coords().begin(), c[subset[r]].coords().end(), rows.begin() + r * cols);
}

Block incident_points(const Configuration& c, const Hyperplane& h)
{
    Block out;
    Integer dot;
    for (std::size_t i = 0; i < c.size(); ++i) {
        dot = 0;
        const auto& p = c[i].coords();
        for (std::size_t j = 0; j < p.size(); ++j)
            mpz_addmul(dot.get_mpz_t(), h[j].get_mpz_t(), p[j].get_mpz_t());
        if (sgn(dot) == 0)
            out.push_back(i);
    }
    return out;
}

SecantProfile assemble_exact(const Configuration& c, std::vector<Hyperplane> planes, std::vector<Block> blocks,
                             std::vector<Block> degenerate, bool keep_hyperplanes)
{
    SecantProfile p;
    p.n = c.size();
    p.d = c.dim();
    for (const auto& b : blocks)
        ++p.tau[b.size()];
    if (keep_hyperplanes) {
        p.planes = std::move(planes);
        p.blocks = std::move(blocks);
    }
    p.degenerate_subsets = std::move(degenerate);
    return p;
}

} // namespace detail

std::uint64_t SecantProfile::hyperplane_count() const
{
    std::uint64_t total = 0;
    for (const auto& [i, count] : tau)
        total += count;
    return total;
}

SecantProfile profile_from_blocks(std::size_t n, std::size_t d, std::vector<Block> blocks, bool keep_blocks)
{
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    SecantProfile p;
    p.n = n;
    p.d = d;
    for (const auto& b : blocks)
        ++p.tau[b.size()];
    if (keep_blocks)
        p.blocks = std::move(blocks);
    return p;
}

std::vector<std::uint64_t> per_point_ordinary(const SecantProfile& p)
{
    if (p.blocks.empty() && p.hyperplane_count() != 0)
        throw Error(ErrorKind::DimensionMismatch, "profile was computed without its hyperplane list");
    std::vector<std::uint64_t> counts(p.n, 0);
    for (const auto& b : p.blocks)
        if (b.size() == p.d)
            for (std::size_t i : b)
                ++counts[i];
    return counts;
}

bool check_trivcount(const SecantProfile& p)
{
    Integer lhs = 0;
    for (const auto& [i, count] : p.tau)
        lhs += binomial(i, p.d) * Integer(static_cast<unsigned long>(count));
    return lhs == binomial(p.n, p.d);
}

bool check_bettercount(const SecantProfile& p)
{
    Integer lhs = 0;
    for (const auto& [size, count] : p.tau) {
        if (size <= p.d || size >= p.n)
            continue;
        const std::size_t i = size - p.d;
        lhs += Integer(static_cast<unsigned long>(p.n - p.d - i)) * binomial(p.d + i, i - 1) *
               Integer(static_cast<unsigned long>(count));
    }
    return lhs <= binomial(p.n, p.d + 2);
}

IntsReport check_ints(const Configuration& c)
{
    IntsReport report;
    const std::size_t d = c.dim();
    const std::size_t cols = d + 1;
    if (c.size() < d + 2)
        return report;
    std::vector<Integer> rows;
    std::vector<std::size_t> sub(d + 1);
    for_each_combination(c.size(), d + 2, [&](std::span<const std::size_t> t) {
        if (!report.ok)
            return;
        detail::gather_rows(c, t, rows);
        if (detail::integer_rank(rows, d + 2, cols) < cols)
            return;
        int in_hyperplane = 0;
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            for (std::size_t j = 0, k = 0; j < t.size(); ++j)
                if (j != skip)
                    sub[k++] = t[j];
            detail::gather_rows(c, sub, rows);
            if (detail::integer_rank(rows, d + 1, cols) <= d)
                ++in_hyperplane;
        }
        if (in_hyperplane > 1) {
            report.ok = false;
            report.witness.assign(t.begin(), t.end());
        }
    });
    return report;
}

} // namespace ordhyp
