#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdl {

class EuclidTrace;

/// A sequence of positive parts summing to a known total.
///
/// Profiles in N_{M,k} (the top level) carry a first-part floor of 2; the
/// intermediate level-h sequences use a floor of 1. Positions are 1-based in
/// every message this type produces.
class Profile {
public:
    Profile(std::vector<int> parts, int context_total, int first_part_floor = 1);

    /// Member of N_{M,k}: positive parts, first part >= 2, total = sum of parts.
    static Profile top_level(std::vector<int> parts);

    /// Parses "3,3,2,3,3,2". Throws ShapeError on malformed text.
    static std::vector<int> parse_parts(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return total_; }
    int first_part_floor() const noexcept { return floor_; }

    /// 1-based access, n_i.
    int at(int i) const;
    int operator[](std::size_t i) const { return parts_[i]; }

    std::string to_string() const;

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile& a, const Profile& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int total_;
    int floor_;
};

std::string join_parts(const std::vector<int>& parts);

/// Division context of a pre-sequence or imbedded-sequence transform:
/// big = quotient * small + remainder with 1 <= remainder < small.
struct TransformContext {
    int big;
    int small;
    int quotient;
    int remainder;

    /// Throws DomainError when small does not divide big with a non-zero remainder.
    static TransformContext of(int big, int small);

    /// Context that produces the level-h sequence from the level-(h+1) one:
    /// big = r_{h-2}, small = r_{h-1}. Requires 1 <= h < depth.
    static TransformContext for_level(const EuclidTrace& trace, int level);
};

/// L^I: gap lengths between consecutive (q+1)-parts, anchored at position 1.
Profile left_imbedded(const Profile& n, const TransformContext& ctx);
/// L: plants q+1 at positions 1 + m_1 + ... + m_{j-1}, q elsewhere.
Profile left_presequence(const Profile& m, const TransformContext& ctx);
/// R^I: run lengths ending at each (q+1)-part, the last one at position k.
Profile right_imbedded(const Profile& n, const TransformContext& ctx);
/// R: plants q+1 at positions m_1 + ... + m_j, q elsewhere.
Profile right_presequence(const Profile& m, const TransformContext& ctx);

/// Lexicographic enumeration of N_{M,k}: compositions of m into k positive
/// parts whose first part is at least 2. Yields C(m-2, k-1) profiles.
class ProfileEnumerator {
public:
    ProfileEnumerator(int m, int k);
    /// Restricts the walk to profiles with n_1 == first_part.
    ProfileEnumerator(int m, int k, int first_part);

    /// Advances to the next profile; false once the space is exhausted.
    bool next();
    const std::vector<int>& current() const noexcept { return parts_; }

private:
    int m_;
    int k_;
    std::optional<int> fixed_first_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> parts_;
};

std::vector<Profile> enumerate_profiles(int m, int k);

/// Compositions of total into length positive parts, lexicographic order.
std::vector<std::vector<int>> compositions(int total, int length);

}  // namespace fdl
