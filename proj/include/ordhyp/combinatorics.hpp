#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ordhyp {

/// C(n, k) in 64 bits. Throws std::overflow_error when it does not fit.
std::uint64_t choose(std::uint64_t n, std::uint64_t k);

/// The rank-th k-subset of {0..n-1} in lexicographic order.
void unrank_combination(std::size_t n, std::uint64_t rank, std::span<std::size_t> out);

/// Advances to the next k-subset in lexicographic order; false past the last.
bool next_combination(std::size_t n, std::span<std::size_t> subset);

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n)
        return;
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i)
        subset[i] = i;
    do {
        fn(std::span<const std::size_t>(subset));
    } while (next_combination(n, subset));
}

} // namespace ordhyp
