#pragma once

#include "fdl/bigint.hpp"
#include "fdl/euclid.hpp"
#include "fdl/profile.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fdl {

/// Exhaustive argmax of B over N_{M,k}.
struct OptimalSet {
    int m;
    int k;
    BigInt best_B;
    std::vector<Profile> argmax;  // lexicographic order
    long long space_size;

    bool contains(const Profile& p) const;
};

inline constexpr int default_brute_cap = 22;

/// Enumerates N_{M,k} and keeps every profile attaining the largest B.
/// Work is split by first part across `workers` threads; the result does
/// not depend on the worker count. Throws CapExceeded when m > cap.
OptimalSet brute_force_optimal(int m, int k, int cap = default_brute_cap, int workers = 1);

/// Block-wise differences between two constructions of the same instance:
/// alpha_i = d_{s_i} - d'_{s'_i} (i = 1..k), beta_i = B_i - B'_i (i = 0..k).
struct StageDiff {
    std::vector<BigInt> alpha;  // alpha[0] is alpha_1
    std::vector<BigInt> beta;   // beta[0] is beta_0 = 0

    const BigInt& total() const { return beta.back(); }
};

StageDiff stagewise_diff(const Profile& a, const Profile& b);

/// Which clause of a pairwise comparison lemma applies at swap point a.
enum class RuleCase { Boundary, InnerMirrorLess, InnerMirrorGreater, FullMirror };

enum class Verdict { ConfirmsGreater, ConfirmsLess, ConfirmsEqual, Violated };

std::string_view to_string(RuleCase c);
std::string_view to_string(Verdict v);
std::string_view ordering_name(std::strong_ordering o);

/// One executed pairwise-comparison check. `predicted` and `observed` order
/// the original sequence against the swapped one after lifting both to level 1.
struct RuleCheck {
    int m;
    int k;
    int level;
    int a;
    std::string case_name;
    std::strong_ordering predicted;
    std::strong_ordering observed;
    Verdict verdict;
    Profile original;
    Profile swapped;

    bool ok() const { return verdict != Verdict::Violated; }
    /// "(M,k) h=.. a=.. case=.. predicted=.. observed=.. OK|FAIL"
    std::string report_line() const;
};

/// Comparison rule A at an odd level: n_a - n_{a+1} = 1, move one unit right.
/// Throws DomainError when the lemma's preconditions do not hold.
RuleCheck check_comparison_rule_A(const EuclidTrace& trace, int level, const Profile& n, int a);
/// Level-1 form; (M, k) is taken from the profile.
RuleCheck check_comparison_rule_A(const Profile& n, int a);

/// Comparison rule B at an even level: n_a - n_{a+1} = 1, move one unit right.
RuleCheck check_comparison_rule_B(const EuclidTrace& trace, int level, const Profile& n, int a);
/// Level-2 form for the instance (m, k).
RuleCheck check_comparison_rule_B(int m, int k, const Profile& n, int a);

/// Adjacent-gap lemmas (|n_a - n_{a+1}| >= 2); the odd or even form is
/// chosen from the level's parity.
RuleCheck check_adjacent_gap(const EuclidTrace& trace, int level, const Profile& n, int a);

/// Mirror scan around the pair (a, a+1) of a sequence of length r.
/// Returns the clause and, for the inner cases, the first differing offset j.
std::pair<RuleCase, int> classify_swap_point(const Profile& n, int a);

}  // namespace fdl
