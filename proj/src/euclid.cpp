#include "fdl/euclid.hpp"

#include "fdl/errors.hpp"

#include <string>

namespace fdl {

void require_valid_instance(long long m, long long k) {
    if (m < 2) {
        throw DomainError("number of fibers must be at least 2, got " + std::to_string(m));
    }
    if (k < 1 || k > m - 1) {
        throw DomainError("number of recirculations must lie in [1, " + std::to_string(m - 1) +
                          "], got " + std::to_string(k));
    }
}

EuclidTrace::EuclidTrace(int m, int k) : m_(m), k_(k) {
    require_valid_instance(m, k);
    remainders_ = {m, k};
    while (remainders_.back() != 0) {
        const int a = remainders_[remainders_.size() - 2];
        const int b = remainders_.back();
        quotients_.push_back(a / b);
        remainders_.push_back(a % b);
    }
}

int EuclidTrace::remainder(int i) const {
    if (i < -1 || i > depth()) {
        throw IndexError("remainder index " + std::to_string(i) + " outside [-1, " +
                         std::to_string(depth()) + "]");
    }
    return remainders_[static_cast<std::size_t>(i + 1)];
}

int EuclidTrace::quotient(int i) const {
    if (i < 1 || i > depth()) {
        throw IndexError("quotient index " + std::to_string(i) + " outside [1, " +
                         std::to_string(depth()) + "]");
    }
    return quotients_[static_cast<std::size_t>(i - 1)];
}

EuclidTrace euclid_trace(int m, int k) { return EuclidTrace(m, k); }

}  // namespace fdl
