#pragma once

#include "fdl/bigint.hpp"
#include "fdl/profile.hpp"

#include <span>
#include <vector>

namespace fdl {

/// Greedy fiber-delay-line construction driven by a profile n_1^k in N_{M,k}.
///
/// Fibers are grouped into k consecutive blocks of n_1, ..., n_k fibers. The
/// first block holds delays 1..n_1; every later fiber gets one more than the
/// largest integer representable so far with one more recirculation:
///
///   d_{s_i + j} = 2 d_{s_i} + (j - 1) (d_{s_1} + ... + d_{s_i} + 1)
///
/// and the bound after block i is B_i = d_{s_1} + ... + d_{s_i}.
struct Construction {
    Profile profile;
    std::vector<BigInt> delays;    // d_1 .. d_M
    std::vector<int> block_bounds; // s_0 = 0, s_1, ..., s_k
    std::vector<BigInt> block_B;   // B(d_1^{s_i}; i) for i = 1..k

    int fibers() const noexcept { return static_cast<int>(delays.size()); }
    int recirculations() const noexcept { return profile.size(); }
    /// d_j, 1-based.
    const BigInt& delay(int j) const { return delays.at(static_cast<std::size_t>(j - 1)); }
    const BigInt& max_representable() const { return block_B.back(); }
};

/// Throws DomainError when n is not in N_{M,k} (first part below 2).
Construction build_construction(const Profile& n);

/// B(d_1^M; k) of the greedy construction for n, without materialising the delays.
BigInt max_representable(const Profile& n);

/// B(d_1^{s_i + j}; i + 1). For block == 0 this is simply offset (1 <= offset <= n_1);
/// otherwise 1 <= block <= k - 1 and 1 <= offset <= n_{block+1}.
BigInt prefix_B(const Profile& n, int block, int offset);

/// Largest B such that every integer in [0, B] is a sum of at most
/// max_terms distinct entries of delays. Brute-force dynamic program that
/// knows nothing about the greedy structure; returns 0 when 1 is unreachable.
/// Throws DomainError if the delays are not distinct positive values or the
/// reachable range exceeds max_span.
long long subset_sum_B(std::span<const BigInt> delays, int max_terms, long long max_span = 50'000'000);

}  // namespace fdl
