#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpsi {

/// An argument lies outside the mathematical domain of an operation
/// (t < 2, n < 2 where log log N_n must be positive, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A 1-based prime index past the end of a PrimeTable.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The sieve behind a computation is too small. `needed()` carries the
/// smallest sieve bound (or index) known to be required, 0 if unknown.
class CoverageError : public std::runtime_error {
public:
    CoverageError(const std::string& what, std::uint64_t needed = 0)
        : std::runtime_error(what), needed_(needed) {}

    std::uint64_t needed() const noexcept { return needed_; }

private:
    std::uint64_t needed_;
};

/// A requested scan exceeds its memory budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t max_segment)
        : std::runtime_error(what), max_segment_(max_segment) {}

    std::uint64_t max_segment() const noexcept { return max_segment_; }

private:
    std::uint64_t max_segment_;
};

}  // namespace dpsi
