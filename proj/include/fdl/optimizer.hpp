#pragma once

#include "fdl/bigint.hpp"
#include "fdl/euclid.hpp"
#include "fdl/profile.hpp"

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

namespace fdl {

/// How many optimal profiles exist, as determined by gcd(M, k).
enum class OptimumCount { ExactlyOne, ExactlyTwo, AtMostTwo };

std::string_view to_string(OptimumCount c);

/// Output of the Euclid-driven design procedure.
struct DesignResult {
    EuclidTrace trace;
    Profile candidate_n;                  // built from (q_N, ..., q_N)
    std::optional<Profile> candidate_m;   // built from the perturbed seed; absent iff gcd == 1
    OptimumCount classification;
    BigInt b_value;
    std::optional<BigInt> b_value_m;

    /// Intermediate sequences, index 0 holds level 1 and index N-1 holds level N.
    std::vector<Profile> levels_n;
    std::vector<Profile> levels_m;

    /// Candidates in fixed order: n first, then m when present.
    std::vector<Profile> candidates() const;
};

/// Lifts a level-h sequence down to level 1, alternating pre-sequence
/// transforms: level i is produced with L when i is odd and with R when i is
/// even. Returns the chain [level h, level h-1, ..., level 1].
std::vector<Profile> lift_chain(const EuclidTrace& trace, int level, const Profile& seq);

/// Level-1 (N_{M,k}) image of a level-h sequence.
Profile lift_to_top(const EuclidTrace& trace, int level, const Profile& seq);

/// Throws DomainError on an invalid instance.
DesignResult design(int m, int k);

OptimumCount predicted_count(int m, int k);

/// Orders two profiles of the same instance by their representable bound.
/// Throws DomainError when they belong to different (M, k).
std::strong_ordering compare_profiles(const Profile& a, const Profile& b);

}  // namespace fdl
