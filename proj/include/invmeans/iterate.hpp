#pragma once

// Iterates of a mean-type mapping (x, y) -> (K(x,y), L(x,y)).

#include <cstddef>
#include <vector>

#include "invmeans/complement.hpp"
#include "invmeans/report.hpp"

namespace invmeans {

struct IterationTrace {
    /// iterates[0] is the starting pair.
    std::vector<PositivePair> iterates;
    bool converged = false;
    /// Midpoint of the final pair; final_gap is its relative error bar.
    double limit = 0;
    std::size_t iterations = 0;
    /// |x_n - y_n| / max(x_n, y_n) of the final pair.
    double final_gap = 0;
    /// False if the relative gap ever increased along the trajectory.
    bool gap_monotone = true;
    /// log(g_n/g_{n-1}) / log(g_{n-1}/g_{n-2}) from the last three nonzero
    /// gaps: about 1 for linear, 2 for quadratic convergence. NaN if unknown.
    double order_estimate;
};

double relative_gap(double x, double y);

/// Applies the mapping until the relative gap drops to rel_stop or max_iter
/// steps were taken. Non-convergence is reported, not thrown.
IterationTrace iterate_pair(const MeanPair& pair, double x0, double y0, double rel_stop = 1e-14,
                            std::size_t max_iter = 200);

/// Checks that the target mean is constant along the trajectory:
/// |M(x_n,y_n) - M(x_0,y_0)| / M(x_0,y_0) <= rel_tol for every n.
ScanReport invariant_value_along_trajectory(const MeanPair& pair, const IterationTrace& trace,
                                            double rel_tol = 1e-10);

} // namespace invmeans
