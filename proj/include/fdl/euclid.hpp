#pragma once

#include <cstdint>
#include <vector>

namespace fdl {

/// Remainder/quotient ladder of Euclid's algorithm on (M, k).
///
/// Indices follow the usual subscripts: remainder(-1) = M, remainder(0) = k,
/// remainder(i - 2) = quotient(i) * remainder(i - 1) + remainder(i), and the
/// ladder stops at remainder(depth()) = 0. The gcd is remainder(depth() - 1).
class EuclidTrace {
public:
    EuclidTrace(int m, int k);

    int m() const noexcept { return m_; }
    int k() const noexcept { return k_; }
    int depth() const noexcept { return static_cast<int>(quotients_.size()); }
    int gcd() const noexcept { return remainder(depth() - 1); }

    /// r_i for -1 <= i <= depth().
    int remainder(int i) const;
    /// q_i for 1 <= i <= depth().
    int quotient(int i) const;

    /// Stored as r_{-1}, r_0, ..., r_N.
    const std::vector<int>& remainders() const noexcept { return remainders_; }
    /// Stored as q_1, ..., q_N.
    const std::vector<int>& quotients() const noexcept { return quotients_; }

    bool odd_depth() const noexcept { return depth() % 2 == 1; }

private:
    int m_;
    int k_;
    std::vector<int> remainders_;
    std::vector<int> quotients_;
};

/// Throws DomainError unless m >= 2 and 1 <= k <= m - 1.
EuclidTrace euclid_trace(int m, int k);

}  // namespace fdl
