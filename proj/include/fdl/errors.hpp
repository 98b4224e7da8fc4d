#pragma once

#include <stdexcept>
#include <string>

namespace fdl {

/// Input outside the valid (M, k) domain, or a profile outside N_{M,k}.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A sequence does not have the shape a transform requires.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Block or offset index outside the permitted range.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Exhaustive search refused because the instance is larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int fibers, int cap)
        : std::runtime_error("exhaustive search over " + std::to_string(fibers) +
                             " fibers exceeds the cap of " + std::to_string(cap) +
                             "; rerun with a cap of at least " + std::to_string(fibers)),
          required_cap_(fibers) {}

    int required_cap() const noexcept { return required_cap_; }

private:
    int required_cap_;
};

/// Throws DomainError unless m >= 2 and 1 <= k <= m - 1.
void require_valid_instance(long long m, long long k);

}  // namespace fdl
