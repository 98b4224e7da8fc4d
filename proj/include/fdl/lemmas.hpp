#pragma once

#include "fdl/oracle.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fdl {

/// Tally of one property sweep. A sweep that checked nothing is not a pass.
struct SweepSummary {
    explicit SweepSummary(std::string sweep_name = {}) : name(std::move(sweep_name)) {}

    std::string name;
    long long checked = 0;
    long long violations = 0;
    std::vector<std::string> failures;  // first few, for diagnostics

    bool ok() const { return checked > 0 && violations == 0; }
    void record(bool passed, const std::string& detail);
};

using CaseSink = std::function<void(const RuleCheck&)>;

inline constexpr std::uint64_t default_seed = 0;

/// Every (n, a) with n_a - n_{a+1} = 1 over N_{M,k}(h) for each odd h in
/// levels, over all 2 <= M <= max_m.
SweepSummary sweep_comparison_rule_A(int max_m, std::span<const int> levels, const CaseSink& sink = {});

/// Same for even levels.
SweepSummary sweep_comparison_rule_B(int max_m, std::span<const int> levels, const CaseSink& sink = {});

/// Random adjacent-gap swaps (|n_a - n_{a+1}| >= 2) at levels of the given
/// parity (h <= 4), M drawn from [2, max_m].
SweepSummary sample_adjacent_gap(bool even_levels, int max_m, int samples, std::uint64_t seed,
                                 const CaseSink& sink = {});

/// d_{s_{i+1}} > B(d_1^{s_i}; i) + 1 for every profile with M <= max_m.
SweepSummary sweep_growth(int max_m);

/// Round trips L(L^I(n)) = n, L^I(L(m)) = m and the right-hand analogues
/// for every context with big <= max_big.
SweepSummary sweep_transform_inversions(int max_big);

/// Two-valued parts, raised first position, and the raised last position one
/// level down, on every brute-force optimum with M <= max_m.
SweepSummary sweep_optimum_structure(int max_m);

/// Brute-force argmax against the designed candidates for M <= max_m.
SweepSummary sweep_optimality(int max_m);

/// Equal B for the two candidates whenever gcd(M, k) = 2, M <= max_m.
SweepSummary sweep_gcd_two_equality(int max_m);

/// subset_sum_B against the closed form for M <= max_m, k <= max_k.
SweepSummary sweep_oracle_agreement(int max_m, int max_k);

/// beta_k = B(a) - B(b), beta_i = alpha_i + beta_{i-1}, and the doubling
/// recursion on common suffix blocks, for random pairs.
SweepSummary sample_stagewise(int max_m, int samples, std::uint64_t seed);

/// Outcome of comparing the exhaustive argmax with the designed candidates.
struct Agreement {
    bool agree;
    bool all_candidates_optimal;
};

Agreement judge_agreement(const OptimalSet& optimum, const std::vector<Profile>& candidates, int gcd);

}  // namespace fdl
