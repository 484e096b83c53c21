#include "ordhyp/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace ordhyp {

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

void unrank_combination(std::size_t n, std::uint64_t rank, std::span<std::size_t> out)
{
    const std::size_t k = out.size();
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t v = next; v < n; ++v) {
            const std::uint64_t block = choose(n - v - 1, k - pos - 1);
            if (rank < block) {
                out[pos] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
}

bool next_combination(std::size_t n, std::span<std::size_t> subset)
{
    const std::size_t k = subset.size();
    if (k == 0)
        return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (subset[i] < n - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace ordhyp
