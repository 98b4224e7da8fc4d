#include "fdl/oracle.hpp"

#include "fdl/construction.hpp"
#include "fdl/errors.hpp"
#include "fdl/optimizer.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace fdl {

bool OptimalSet::contains(const Profile& p) const {
    return std::find(argmax.begin(), argmax.end(), p) != argmax.end();
}

namespace {

struct PartialOptimum {
    BigInt best = -1;
    std::vector<std::vector<int>> argmax;
    long long visited = 0;
};

PartialOptimum search_first_parts(int m, int k, int first_begin, int stride) {
    PartialOptimum out;
    for (int first = first_begin; first <= m - k + 1; first += stride) {
        ProfileEnumerator walk(m, k, first);
        while (walk.next()) {
            ++out.visited;
            const auto& parts = walk.current();
            // Closed-form recurrence inlined to avoid a Profile per visit.
            BigInt last = parts[0];
            BigInt bound = last;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                last = 2 * last + (parts[i] - 1) * (bound + 1);
                bound += last;
            }
            if (bound > out.best) {
                out.best = bound;
                out.argmax.clear();
                out.argmax.push_back(parts);
            } else if (bound == out.best) {
                out.argmax.push_back(parts);
            }
        }
    }
    return out;
}

}  // namespace

OptimalSet brute_force_optimal(int m, int k, int cap, int workers) {
    require_valid_instance(m, k);
    if (m > cap) {
        throw CapExceeded(m, cap);
    }
    workers = std::clamp(workers, 1, std::max(1, m - k));

    std::vector<PartialOptimum> partials;
    if (workers == 1) {
        partials.push_back(search_first_parts(m, k, 2, 1));
    } else {
        std::vector<std::future<PartialOptimum>> jobs;
        for (int w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, search_first_parts, m, k, 2 + w, workers));
        }
        for (auto& job : jobs) {
            partials.push_back(job.get());
        }
    }

    OptimalSet result{m, k, -1, {}, 0};
    for (const auto& part : partials) {
        result.space_size += part.visited;
        if (part.argmax.empty()) continue;
        if (part.best > result.best_B) {
            result.best_B = part.best;
            result.argmax.clear();
        }
        if (part.best == result.best_B) {
            for (const auto& parts : part.argmax) {
                result.argmax.emplace_back(parts, m, 2);
            }
        }
    }
    std::sort(result.argmax.begin(), result.argmax.end());
    return result;
}

StageDiff stagewise_diff(const Profile& a, const Profile& b) {
    if (a.total() != b.total() || a.size() != b.size()) {
        throw DomainError("stagewise difference needs profiles of the same instance: " + a.to_string() +
                          " vs " + b.to_string());
    }
    const Construction ca = build_construction(a);
    const Construction cb = build_construction(b);
    StageDiff diff;
    diff.beta.emplace_back(0);
    for (int i = 1; i <= a.size(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        diff.alpha.push_back(ca.delay(ca.block_bounds[idx]) - cb.delay(cb.block_bounds[idx]));
        diff.beta.push_back(ca.block_B[idx - 1] - cb.block_B[idx - 1]);
    }
    return diff;
}

std::string_view to_string(RuleCase c) {
    switch (c) {
        case RuleCase::Boundary: return "boundary";
        case RuleCase::InnerMirrorLess: return "inner_mirror_less";
        case RuleCase::InnerMirrorGreater: return "inner_mirror_greater";
        case RuleCase::FullMirror: return "full_mirror";
    }
    return "unknown";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::ConfirmsGreater: return "ConfirmsGreater";
        case Verdict::ConfirmsLess: return "ConfirmsLess";
        case Verdict::ConfirmsEqual: return "ConfirmsEqual";
        case Verdict::Violated: return "Violated";
    }
    return "unknown";
}

std::string_view ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "less";
    if (o == std::strong_ordering::greater) return "greater";
    return "equal";
}

std::string RuleCheck::report_line() const {
    std::ostringstream out;
    out << '(' << m << ',' << k << ") h=" << level << " a=" << a << " case=" << case_name
        << " predicted=" << ordering_name(predicted) << " observed=" << ordering_name(observed) << ' '
        << (ok() ? "OK" : "FAIL");
    return out.str();
}

std::pair<RuleCase, int> classify_swap_point(const Profile& n, int a) {
    const int r = n.size();
    if (a < 1 || a > r - 1) {
        throw IndexError("swap point " + std::to_string(a) + " outside [1, " + std::to_string(r - 1) + "]");
    }
    if (a == 1 || a == r - 1) {
        return {RuleCase::Boundary, 0};
    }
    const int reach = std::min(a - 1, r - a - 1);
    for (int j = 1; j <= reach; ++j) {
        const int left = n.at(a - j);
        const int right = n.at(a + 1 + j);
        if (left != right) {
            return {left < right ? RuleCase::InnerMirrorLess : RuleCase::InnerMirrorGreater, j};
        }
    }
    return {RuleCase::FullMirror, 0};
}

namespace {

void require_level_member(const EuclidTrace& trace, int level, const Profile& n) {
    if (level < 1 || level > trace.depth()) {
        throw DomainError("level " + std::to_string(level) + " outside [1, " + std::to_string(trace.depth()) + "]");
    }
    const int width = trace.remainder(level - 1);
    if (width < 2) {
        throw DomainError("level " + std::to_string(level) + " has a single entry; no pairwise comparison applies");
    }
    if (n.size() != width || n.total() != trace.remainder(level - 2)) {
        throw DomainError("sequence " + n.to_string() + " is not in N_{M,k}(" + std::to_string(level) + ")");
    }
    if (level == 1 && n.at(1) < 2) {
        throw DomainError("sequence " + n.to_string() + " is not in N_{M,k}");
    }
}

Profile shifted(const Profile& n, int a, int delta_a) {
    std::vector<int> parts = n.parts();
    parts[static_cast<std::size_t>(a - 1)] += delta_a;
    parts[static_cast<std::size_t>(a)] -= delta_a;
    return Profile(std::move(parts), n.total(), n.first_part_floor());
}

std::strong_ordering observe(const EuclidTrace& trace, int level, const Profile& n, const Profile& other) {
    return compare_profiles(lift_to_top(trace, level, n), lift_to_top(trace, level, other));
}

Verdict verdict_for(std::strong_ordering predicted, std::strong_ordering observed) {
    if (predicted != observed) return Verdict::Violated;
    if (observed == std::strong_ordering::greater) return Verdict::ConfirmsGreater;
    if (observed == std::strong_ordering::less) return Verdict::ConfirmsLess;
    return Verdict::ConfirmsEqual;
}

RuleCheck unit_transfer_check(const EuclidTrace& trace, int level, const Profile& n, int a, bool rule_a) {
    require_level_member(trace, level, n);
    if ((level % 2 == 1) != rule_a) {
        throw DomainError(std::string("comparison rule ") + (rule_a ? "A needs an odd" : "B needs an even") +
                          " level, got " + std::to_string(level));
    }
    const int r = n.size();
    if (a < 1 || a > r - 1) {
        throw DomainError("swap point " + std::to_string(a) + " outside [1, " + std::to_string(r - 1) + "]");
    }
    if (n.at(a) - n.at(a + 1) != 1) {
        throw DomainError("comparison rule needs n_a - n_{a+1} = 1 at a=" + std::to_string(a) + " in " +
                          n.to_string());
    }
    if (level == 1 && a == 1 && n.at(1) < 3) {
        throw DomainError("comparison rule at level 1 and a=1 needs n_1 >= 3");
    }
    const Profile swapped = shifted(n, a, -1);
    const auto [clause, j] = classify_swap_point(n, a);

    // Orientation of rule A; rule B flips every strict prediction and mirrors
    // the equality condition.
    std::strong_ordering predicted = std::strong_ordering::greater;
    const RuleCase weak_case = rule_a ? RuleCase::InnerMirrorGreater : RuleCase::InnerMirrorLess;
    if (clause == weak_case) {
        const bool equal = a - j == 1 && a + 1 + j == r &&
                           n.at(1) == n.at(r) + (rule_a ? 1 : -1);
        predicted = equal ? std::strong_ordering::equal
                          : (rule_a ? std::strong_ordering::less : std::strong_ordering::greater);
    } else {
        predicted = rule_a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const auto observed = observe(trace, level, n, swapped);
    return RuleCheck{trace.m(), trace.k(), level,    a,       std::string(to_string(clause)),
                     predicted, observed,  verdict_for(predicted, observed), n, swapped};
}

}  // namespace

RuleCheck check_comparison_rule_A(const EuclidTrace& trace, int level, const Profile& n, int a) {
    return unit_transfer_check(trace, level, n, a, true);
}

RuleCheck check_comparison_rule_A(const Profile& n, int a) {
    return check_comparison_rule_A(EuclidTrace(n.total(), n.size()), 1, n, a);
}

RuleCheck check_comparison_rule_B(const EuclidTrace& trace, int level, const Profile& n, int a) {
    return unit_transfer_check(trace, level, n, a, false);
}

RuleCheck check_comparison_rule_B(int m, int k, const Profile& n, int a) {
    return check_comparison_rule_B(EuclidTrace(m, k), 2, n, a);
}

RuleCheck check_adjacent_gap(const EuclidTrace& trace, int level, const Profile& n, int a) {
    require_level_member(trace, level, n);
    const int r = n.size();
    if (a < 1 || a > r - 1) {
        throw DomainError("swap point " + std::to_string(a) + " outside [1, " + std::to_string(r - 1) + "]");
    }
    const int gap = n.at(a) - n.at(a + 1);
    if (gap > -2 && gap < 2) {
        throw DomainError("adjacent-gap lemma needs |n_a - n_{a+1}| >= 2 at a=" + std::to_string(a) + " in " +
                          n.to_string());
    }
    const bool odd = level % 2 == 1;
    // Always move one unit towards the smaller neighbour.
    const Profile swapped = shifted(n, a, gap < 0 ? 1 : -1);

    // Odd levels: closing a rising gap is strict, closing a falling gap is weak.
    // Even levels: the other way round.
    const bool strict = odd ? gap <= -2 : gap >= 2;
    std::strong_ordering predicted = std::strong_ordering::less;
    std::string case_name = gap < 0 ? "gap_rising" : "gap_falling";
    if (!strict) {
        const bool equal = r == 2 && n.at(1) == n.at(2) + (odd ? 2 : -2);
        if (equal) predicted = std::strong_ordering::equal;
    }
    const auto observed = observe(trace, level, n, swapped);
    return RuleCheck{trace.m(), trace.k(), level,    a,       std::move(case_name),
                     predicted, observed,  verdict_for(predicted, observed), n, swapped};
}

}  // namespace fdl
