#include "fdl/construction.hpp"

#include "fdl/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace fdl {

namespace {

void require_top_level(const Profile& n) {
    if (n.at(1) < 2) {
        throw DomainError("profile " + n.to_string() + " is not in N_{M,k}: first part must be at least 2");
    }
}

}  // namespace

Construction build_construction(const Profile& n) {
    require_top_level(n);
    Construction c{n, {}, {0}, {}};
    c.delays.reserve(static_cast<std::size_t>(n.total()));

    for (int j = 1; j <= n.at(1); ++j) {
        c.delays.emplace_back(j);
    }
    c.block_bounds.push_back(n.at(1));
    BigInt bound = c.delays.back();
    c.block_B.push_back(bound);

    for (int i = 1; i < n.size(); ++i) {
        const BigInt last = c.delays.back();  // d_{s_i}
        const BigInt step = bound + 1;
        for (int j = 1; j <= n.at(i + 1); ++j) {
            c.delays.push_back(2 * last + (j - 1) * step);
        }
        c.block_bounds.push_back(c.block_bounds.back() + n.at(i + 1));
        bound += c.delays.back();
        c.block_B.push_back(bound);
    }
    return c;
}

BigInt max_representable(const Profile& n) {
    require_top_level(n);
    BigInt last = n.at(1);
    BigInt bound = last;
    for (int i = 2; i <= n.size(); ++i) {
        last = 2 * last + (n.at(i) - 1) * (bound + 1);
        bound += last;
    }
    return bound;
}

BigInt prefix_B(const Profile& n, int block, int offset) {
    require_top_level(n);
    if (block < 0 || block > n.size() - 1) {
        throw IndexError("block index " + std::to_string(block) + " outside [0, " +
                         std::to_string(n.size() - 1) + "]");
    }
    if (offset < 1 || offset > n.at(block + 1)) {
        throw IndexError("offset " + std::to_string(offset) + " outside [1, " +
                         std::to_string(n.at(block + 1)) + "] for block " + std::to_string(block));
    }
    if (block == 0) {
        return offset;
    }
    BigInt last = n.at(1);
    BigInt bound = last;
    for (int i = 2; i <= block; ++i) {
        last = 2 * last + (n.at(i) - 1) * (bound + 1);
        bound += last;
    }
    const BigInt delay = 2 * last + (offset - 1) * (bound + 1);
    return delay + bound;
}

long long subset_sum_B(std::span<const BigInt> delays, int max_terms, long long max_span) {
    if (delays.empty() || max_terms < 1) {
        throw DomainError("subset-sum bound needs a non-empty delay list and at least one term");
    }
    std::vector<long long> values;
    values.reserve(delays.size());
    for (const BigInt& d : delays) {
        if (d < 1 || d > max_span) {
            throw DomainError("delay " + to_decimal(d) + " outside [1, " + std::to_string(max_span) + "]");
        }
        values.push_back(d.convert_to<long long>());
    }
    if (std::set<long long>(values.begin(), values.end()).size() != values.size()) {
        throw DomainError("delays must be distinct");
    }

    // Only the max_terms largest delays matter for the reachable range.
    std::vector<long long> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long span = 0;
    for (std::size_t i = 0; i < sorted.size() && i < static_cast<std::size_t>(max_terms); ++i) {
        span += sorted[i];
    }
    if (span > max_span) {
        throw DomainError("reachable range " + std::to_string(span) + " exceeds " + std::to_string(max_span));
    }

    // fewest[s]: fewest distinct delays summing to s (0/1 knapsack).
    constexpr int unreachable = std::numeric_limits<int>::max();
    std::vector<int> fewest(static_cast<std::size_t>(span) + 1, unreachable);
    fewest[0] = 0;
    for (long long d : values) {
        for (long long s = span; s >= d; --s) {
            const int via = fewest[static_cast<std::size_t>(s - d)];
            if (via != unreachable && via + 1 < fewest[static_cast<std::size_t>(s)]) {
                fewest[static_cast<std::size_t>(s)] = via + 1;
            }
        }
    }
    long long b = 0;
    while (b + 1 <= span && fewest[static_cast<std::size_t>(b + 1)] <= max_terms) {
        ++b;
    }
    return b;
}

}  // namespace fdl
