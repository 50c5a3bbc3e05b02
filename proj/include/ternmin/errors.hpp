#pragma once

#include <stdexcept>
#include <string>

namespace ternmin {

/// A request exceeds a size or time budget (dense tables, brute-force sweeps).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what, double completed_fraction = 0.0)
        : std::runtime_error(what), completed_fraction_(completed_fraction) {}

    /// Fraction of the requested work finished before giving up.
    double completed_fraction() const noexcept { return completed_fraction_; }

private:
    double completed_fraction_;
};

/// An internal identity failed (inexact division, count mismatch). Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ternmin
