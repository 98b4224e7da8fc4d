#pragma once

// Test-only reference that builds greedy delays straight from the definition
// d_{s_i+j} = B(d_1^{s_i+j-1}; i+1) + 1, where B is found by enumerating
// every subset of the delays. Shares no code with the library.

#include <cstdint>
#include <numeric>
#include <vector>

namespace fdl::testing {

// Largest B with every t in [0, B] a sum of at most terms distinct delays.
inline std::int64_t representable_by_subsets(const std::vector<std::int64_t>& delays, int terms) {
    const std::size_t n = delays.size();
    std::int64_t total = std::accumulate(delays.begin(), delays.end(), std::int64_t{0});
    std::vector<bool> hit(static_cast<std::size_t>(total) + 2, false);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > terms) continue;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) sum += delays[i];
        }
        hit[static_cast<std::size_t>(sum)] = true;
    }
    std::int64_t b = 0;
    while (hit[static_cast<std::size_t>(b + 1)]) ++b;
    return b;
}

inline std::vector<std::int64_t> greedy_by_definition(const std::vector<int>& profile) {
    std::vector<std::int64_t> delays;
    for (std::size_t block = 0; block < profile.size(); ++block) {
        for (int j = 0; j < profile[block]; ++j) {
            delays.push_back(representable_by_subsets(delays, static_cast<int>(block) + 1) + 1);
        }
    }
    return delays;
}

// Binomial coefficient by Pascal's triangle.
inline std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(r)];
}

}  // namespace fdl::testing
