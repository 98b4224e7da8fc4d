#include "fdl/optimizer.hpp"

#include "fdl/construction.hpp"
#include "fdl/errors.hpp"

#include <algorithm>

namespace fdl {

std::string_view to_string(OptimumCount c) {
    switch (c) {
        case OptimumCount::ExactlyOne: return "ExactlyOne";
        case OptimumCount::ExactlyTwo: return "ExactlyTwo";
        case OptimumCount::AtMostTwo: return "AtMostTwo";
    }
    return "unknown";
}

std::vector<Profile> DesignResult::candidates() const {
    std::vector<Profile> out{candidate_n};
    if (candidate_m) {
        out.push_back(*candidate_m);
    }
    return out;
}

std::vector<Profile> lift_chain(const EuclidTrace& trace, int level, const Profile& seq) {
    if (level < 1 || level > trace.depth()) {
        throw IndexError("level " + std::to_string(level) + " outside [1, " + std::to_string(trace.depth()) + "]");
    }
    if (seq.size() != trace.remainder(level - 1) || seq.total() != trace.remainder(level - 2)) {
        throw ShapeError("level-" + std::to_string(level) + " sequence must have " +
                         std::to_string(trace.remainder(level - 1)) + " parts summing to " +
                         std::to_string(trace.remainder(level - 2)) + ", got " + seq.to_string());
    }
    std::vector<Profile> chain{seq};
    chain.reserve(static_cast<std::size_t>(level));
    for (int target = level - 1; target >= 1; --target) {
        const auto ctx = TransformContext::for_level(trace, target);
        chain.push_back(target % 2 == 1 ? left_presequence(chain.back(), ctx)
                                        : right_presequence(chain.back(), ctx));
    }
    if (level == 1 && seq.at(1) < 2) {
        throw DomainError("level-1 sequence " + seq.to_string() + " is not in N_{M,k}");
    }
    return chain;
}

Profile lift_to_top(const EuclidTrace& trace, int level, const Profile& seq) {
    auto chain = lift_chain(trace, level, seq);
    return Profile::top_level(chain.back().parts());
}

namespace {

std::vector<Profile> levels_from_seed(const EuclidTrace& trace, std::vector<int> seed) {
    const int depth = trace.depth();
    auto chain = lift_chain(trace, depth, Profile(std::move(seed), trace.remainder(depth - 2)));
    std::reverse(chain.begin(), chain.end());
    chain.front() = Profile::top_level(chain.front().parts());
    return chain;
}

}  // namespace

DesignResult design(int m, int k) {
    EuclidTrace trace(m, k);
    const int depth = trace.depth();
    const int q = trace.quotient(depth);
    const int width = trace.remainder(depth - 1);

    auto levels_n = levels_from_seed(trace, std::vector<int>(static_cast<std::size_t>(width), q));

    std::vector<Profile> levels_m;
    if (width >= 2) {
        std::vector<int> seed(static_cast<std::size_t>(width), q);
        // Odd depth raises the first entry, even depth the last one.
        if (trace.odd_depth()) {
            seed.front() = q + 1;
            seed.back() = q - 1;
        } else {
            seed.front() = q - 1;
            seed.back() = q + 1;
        }
        levels_m = levels_from_seed(trace, std::move(seed));
    }

    const Profile candidate_n = levels_n.front();
    BigInt b_value = max_representable(candidate_n);
    std::optional<Profile> candidate_m;
    std::optional<BigInt> b_value_m;
    if (!levels_m.empty()) {
        candidate_m = levels_m.front();
        b_value_m = max_representable(*candidate_m);
    }
    return DesignResult{std::move(trace),   candidate_n,           std::move(candidate_m),
                        predicted_count(m, k), std::move(b_value), std::move(b_value_m),
                        std::move(levels_n), std::move(levels_m)};
}

OptimumCount predicted_count(int m, int k) {
    const int g = EuclidTrace(m, k).gcd();
    if (g == 1) return OptimumCount::ExactlyOne;
    if (g == 2) return OptimumCount::ExactlyTwo;
    return OptimumCount::AtMostTwo;
}

std::strong_ordering compare_profiles(const Profile& a, const Profile& b) {
    if (a.total() != b.total() || a.size() != b.size()) {
        throw DomainError("cannot compare profiles of different instances: " + a.to_string() + " vs " +
                          b.to_string());
    }
    const BigInt ba = max_representable(a);
    const BigInt bb = max_representable(b);
    if (ba < bb) return std::strong_ordering::less;
    if (ba > bb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace fdl
