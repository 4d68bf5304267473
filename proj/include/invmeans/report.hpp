#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace invmeans {

using PositivePair = std::pair<double, double>;

/// Sampling setup shared by all scans. Grids are log-spaced.
struct ScanConfig {
    double lower = 1e-6;
    double upper = 1e6;
    int points_per_axis = 64;
    double rel_tol = 1e-11;
    std::uint64_t seed = 0;

    /// Throws ConfigError unless 0 < lower < upper and points_per_axis >= 8.
    void validate() const;
};

/// Outcome of a scan. `worst_violation` is signed: non-positive values mean
/// the property held with margin. `passed` iff worst_violation <= tolerance.
struct ScanReport {
    bool passed = true;
    double worst_violation = -std::numeric_limits<double>::infinity();
    std::vector<double> witness;
    std::size_t samples_checked = 0;
    /// Name of the property a failure refers to (check_flags), or a remark.
    std::string note;
};

} // namespace invmeans
