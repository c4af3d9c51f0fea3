#include "suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace rep2d::detail {

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  std::vector<std::uint32_t> rank(n);
  {
    std::vector<std::uint32_t> values(text.begin(), text.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = static_cast<std::uint32_t>(
          std::lower_bound(values.begin(), values.end(), text[i]) - values.begin());
    }
  }
  std::size_t classes = *std::max_element(rank.begin(), rank.end()) + 1;

  std::vector<std::uint32_t> count(std::max(n, classes) + 1);
  std::vector<std::uint32_t> order(n);
  std::vector<std::uint32_t> next(n);

  std::iota(order.begin(), order.end(), 0U);
  for (std::size_t k = 0;; k = (k == 0 ? 1 : 2 * k)) {
    if (k > 0) {
      // Order by the second key: suffixes without a partner come first.
      std::size_t p = 0;
      for (std::size_t i = n - std::min(n, k); i < n; ++i) order[p++] = static_cast<std::uint32_t>(i);
      for (std::uint32_t s : sa) {
        if (s >= k) order[p++] = static_cast<std::uint32_t>(s - k);
      }
    }
    std::fill(count.begin(), count.begin() + classes + 1, 0U);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::uint32_t s : order) sa[count[rank[s]]++] = s;

    auto second = [&](std::uint32_t s) -> std::int64_t {
      return s + k < n ? static_cast<std::int64_t>(rank[s + k]) : -1;
    };
    next[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const bool same = rank[sa[r]] == rank[sa[r - 1]] &&
                        (k == 0 || second(sa[r]) == second(sa[r - 1]));
      next[sa[r]] = next[sa[r - 1]] + (same ? 0 : 1);
    }
    rank.swap(next);
    classes = rank[sa[n - 1]] + 1;
    if (classes == n) break;
  }
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> text,
                                     std::span<const std::uint32_t> sa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> inverse(n);
  for (std::size_t r = 0; r < n; ++r) inverse[sa[r]] = static_cast<std::uint32_t>(r);
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inverse[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[inverse[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[inverse[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

std::vector<std::uint64_t> distinct_factor_counts(
    std::span<const std::span<const std::uint32_t>> strings, std::size_t max_len) {
  std::vector<std::uint64_t> result(max_len + 1, 0);
  if (strings.empty() || max_len == 0) return result;

  // Separators get the smallest codes and are pairwise distinct, so no
  // common prefix runs across a string boundary.
  const auto separators = static_cast<std::uint32_t>(strings.size());
  std::vector<std::uint32_t> text;
  std::size_t total = 0;
  for (auto s : strings) total += s.size() + 1;
  text.reserve(total);
  std::uint32_t sep = 0;
  for (auto s : strings) {
    for (std::uint32_t v : s) text.push_back(v + separators);
    text.push_back(sep++);
  }

  const auto sa = suffix_array(text);
  const auto lcp = lcp_array(text, sa);

  std::vector<std::uint64_t> at_least(max_len + 2, 0);
  for (std::size_t r = 1; r < lcp.size(); ++r) {
    ++at_least[std::min<std::size_t>(lcp[r], max_len + 1)];
  }
  for (std::size_t k = max_len + 1; k-- > 1;) at_least[k] += at_least[k + 1];

  for (std::size_t k = 1; k <= max_len; ++k) {
    std::uint64_t starts = 0;
    for (auto s : strings) {
      if (s.size() >= k) starts += s.size() - k + 1;
    }
    result[k] = starts - at_least[k];
  }
  return result;
}

}  // namespace rep2d::detail
