#include "fdl/profile.hpp"

#include "fdl/errors.hpp"
#include "fdl/euclid.hpp"

#include <charconv>
#include <numeric>

namespace fdl {

namespace {

std::string position_message(const char* what, int position) {
    return std::string(what) + " at position " + std::to_string(position);
}

// Rewrites parts into the lexicographic successor among compositions with the
// same length and sum, keeping parts[i] >= 1 and never touching positions
// below lowest_mutable. Returns false when no successor exists.
bool advance_composition(std::vector<int>& parts, std::size_t lowest_mutable) {
    const std::size_t k = parts.size();
    if (k < 2) {
        return false;
    }
    int tail = parts[k - 1];
    for (std::size_t i = k - 1; i-- > lowest_mutable;) {
        // tail = parts[i+1] + ... + parts[k-1]
        if (tail > static_cast<int>(k - 1 - i)) {
            ++parts[i];
            const int rest = tail - 1;
            for (std::size_t j = i + 1; j + 1 < k; ++j) {
                parts[j] = 1;
            }
            parts[k - 1] = rest - static_cast<int>(k - 2 - i);
            return true;
        }
        tail += parts[i];
    }
    return false;
}

}  // namespace

Profile::Profile(std::vector<int> parts, int context_total, int first_part_floor)
    : parts_(std::move(parts)), total_(context_total), floor_(first_part_floor) {
    if (parts_.empty()) {
        throw ShapeError("profile must have at least one part");
    }
    if (first_part_floor < 1 || first_part_floor > 2) {
        throw ShapeError("first-part floor must be 1 or 2");
    }
    long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw ShapeError(position_message("non-positive part", static_cast<int>(i + 1)));
        }
        sum += parts_[i];
    }
    if (sum != total_) {
        throw ShapeError("parts sum to " + std::to_string(sum) + " but the context requires " +
                         std::to_string(total_));
    }
    if (parts_.front() < floor_) {
        throw ShapeError("first part must be at least " + std::to_string(floor_));
    }
}

Profile Profile::top_level(std::vector<int> parts) {
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    try {
        return Profile(std::move(parts), total, 2);
    } catch (const ShapeError& e) {
        throw DomainError(std::string("not a member of N_{M,k}: ") + e.what());
    }
}

std::vector<int> Profile::parse_parts(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) {
        throw ShapeError("empty profile");
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw ShapeError("malformed profile entry '" + std::string(field) + "'");
        }
        if (value < 1) {
            throw ShapeError("profile entries must be positive, got " + std::to_string(value));
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return parts;
}

int Profile::at(int i) const {
    if (i < 1 || i > size()) {
        throw IndexError("profile position " + std::to_string(i) + " outside [1, " +
                         std::to_string(size()) + "]");
    }
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::string Profile::to_string() const { return join_parts(parts_); }

TransformContext TransformContext::of(int big, int small) {
    if (small < 1 || big <= small) {
        throw DomainError("transform context needs big > small >= 1, got big=" + std::to_string(big) +
                          ", small=" + std::to_string(small));
    }
    const TransformContext ctx{big, small, big / small, big % small};
    if (ctx.remainder == 0) {
        throw DomainError("transform context needs a non-zero remainder: " + std::to_string(small) +
                          " divides " + std::to_string(big));
    }
    return ctx;
}

TransformContext TransformContext::for_level(const EuclidTrace& trace, int level) {
    if (level < 1 || level >= trace.depth()) {
        throw IndexError("no lift into level " + std::to_string(level) + " for depth " +
                         std::to_string(trace.depth()));
    }
    return of(trace.remainder(level - 2), trace.remainder(level - 1));
}

namespace {

// Positions (1-based) of the (q+1)-parts of a two-valued sequence; throws on
// any part outside {q, q+1} or on a wrong count.
std::vector<int> raised_positions(const Profile& n, const TransformContext& ctx, const char* name) {
    if (n.size() != ctx.small) {
        throw ShapeError(std::string(name) + ": sequence has length " + std::to_string(n.size()) +
                         ", expected " + std::to_string(ctx.small));
    }
    std::vector<int> raised;
    for (int i = 1; i <= n.size(); ++i) {
        const int v = n.at(i);
        if (v == ctx.quotient + 1) {
            raised.push_back(i);
        } else if (v != ctx.quotient) {
            throw ShapeError(std::string(name) + ": part " + std::to_string(v) + " at position " +
                             std::to_string(i) + " is neither " + std::to_string(ctx.quotient) +
                             " nor " + std::to_string(ctx.quotient + 1));
        }
    }
    if (static_cast<int>(raised.size()) != ctx.remainder) {
        throw ShapeError(std::string(name) + ": expected " + std::to_string(ctx.remainder) +
                         " parts equal to " + std::to_string(ctx.quotient + 1) + ", found " +
                         std::to_string(raised.size()));
    }
    return raised;
}

void check_gap_sequence(const Profile& m, const TransformContext& ctx, const char* name) {
    if (m.size() != ctx.remainder) {
        throw ShapeError(std::string(name) + ": sequence has length " + std::to_string(m.size()) +
                         ", expected " + std::to_string(ctx.remainder));
    }
    if (m.total() != ctx.small) {
        throw ShapeError(std::string(name) + ": sequence sums to " + std::to_string(m.total()) +
                         ", expected " + std::to_string(ctx.small));
    }
}

}  // namespace

Profile left_imbedded(const Profile& n, const TransformContext& ctx) {
    const auto raised = raised_positions(n, ctx, "left-imbedded");
    if (raised.front() != 1) {
        throw ShapeError("left-imbedded: position 1 must carry " + std::to_string(ctx.quotient + 1));
    }
    std::vector<int> gaps;
    gaps.reserve(raised.size());
    for (std::size_t j = 0; j + 1 < raised.size(); ++j) {
        gaps.push_back(raised[j + 1] - raised[j]);
    }
    gaps.push_back(ctx.small - raised.back() + 1);
    return Profile(std::move(gaps), ctx.small);
}

Profile left_presequence(const Profile& m, const TransformContext& ctx) {
    check_gap_sequence(m, ctx, "left pre-sequence");
    std::vector<int> parts(static_cast<std::size_t>(ctx.small), ctx.quotient);
    int position = 1;
    for (int gap : m.parts()) {
        parts[static_cast<std::size_t>(position - 1)] = ctx.quotient + 1;
        position += gap;
    }
    return Profile(std::move(parts), ctx.big);
}

Profile right_imbedded(const Profile& n, const TransformContext& ctx) {
    const auto raised = raised_positions(n, ctx, "right-imbedded");
    if (raised.back() != ctx.small) {
        throw ShapeError("right-imbedded: position " + std::to_string(ctx.small) + " must carry " +
                         std::to_string(ctx.quotient + 1));
    }
    std::vector<int> runs;
    runs.reserve(raised.size());
    int previous = 0;
    for (int position : raised) {
        runs.push_back(position - previous);
        previous = position;
    }
    return Profile(std::move(runs), ctx.small);
}

Profile right_presequence(const Profile& m, const TransformContext& ctx) {
    check_gap_sequence(m, ctx, "right pre-sequence");
    std::vector<int> parts(static_cast<std::size_t>(ctx.small), ctx.quotient);
    int position = 0;
    for (int run : m.parts()) {
        position += run;
        parts[static_cast<std::size_t>(position - 1)] = ctx.quotient + 1;
    }
    return Profile(std::move(parts), ctx.big);
}

ProfileEnumerator::ProfileEnumerator(int m, int k) : m_(m), k_(k) { require_valid_instance(m, k); }

ProfileEnumerator::ProfileEnumerator(int m, int k, int first_part)
    : m_(m), k_(k), fixed_first_(first_part) {
    require_valid_instance(m, k);
}

bool ProfileEnumerator::next() {
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        // A single part must take every fiber.
        const int first = fixed_first_.value_or(k_ == 1 ? m_ : 2);
        const int rest = m_ - first;
        // The remaining k-1 parts need at least one fiber each.
        if (first < 2 || rest < k_ - 1 || (k_ == 1 && rest != 0)) {
            done_ = true;
            return false;
        }
        parts_.assign(static_cast<std::size_t>(k_), 1);
        parts_[0] = first;
        if (k_ > 1) {
            parts_.back() = rest - (k_ - 2);
        }
        return true;
    }
    if (!advance_composition(parts_, fixed_first_ ? 1 : 0)) {
        done_ = true;
        return false;
    }
    return true;
}

std::vector<Profile> enumerate_profiles(int m, int k) {
    std::vector<Profile> out;
    ProfileEnumerator walk(m, k);
    while (walk.next()) {
        out.emplace_back(walk.current(), m, 2);
    }
    return out;
}

std::vector<std::vector<int>> compositions(int total, int length) {
    std::vector<std::vector<int>> out;
    if (length < 1 || total < length) {
        return out;
    }
    std::vector<int> parts(static_cast<std::size_t>(length), 1);
    parts.back() = total - (length - 1);
    do {
        out.push_back(parts);
    } while (advance_composition(parts, 0));
    return out;
}

}  // namespace fdl
