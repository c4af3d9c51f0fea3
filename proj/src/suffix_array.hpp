#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rep2d::detail {

/// Suffix array of an integer text by prefix doubling with counting sorts.
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text);

/// Kasai et al.: lcp[r] = lcp(text[sa[r-1]..], text[sa[r]..]); lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> text,
                                     std::span<const std::uint32_t> sa);

/// result[k] = number of distinct length-k factors over a collection of
/// strings, for k in [1..max_len]; result[0] is unused.
std::vector<std::uint64_t> distinct_factor_counts(
    std::span<const std::span<const std::uint32_t>> strings, std::size_t max_len);

}  // namespace rep2d::detail
