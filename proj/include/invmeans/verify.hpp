#pragma once

// Sampling-based verification of mean properties and invariance.
//
// Every scan evaluates a deterministic sample set: a points_per_axis^2
// log-spaced grid over [lower, upper]^2, 10 * points_per_axis^2 log-uniform
// random pairs drawn from `seed`, and explicit probes at ratios 10^k,
// k = 1..12, centred on sqrt(lower * upper). Trace scans use the ratio range
// [lower/upper, upper/lower] instead. Violations are relative, so the same
// tolerance is meaningful across the whole domain. Evaluation failures
// (exceptions, non-finite values) count as infinite violations.

#include <span>
#include <vector>

#include "invmeans/complement.hpp"
#include "invmeans/means.hpp"
#include "invmeans/report.hpp"

namespace invmeans {

/// Grid, random and probe pairs for `cfg`, in scan order.
std::vector<PositivePair> scan_pairs(const ScanConfig& cfg);

/// `count` log-uniform random pairs over the config domain.
std::vector<PositivePair> random_pairs(const ScanConfig& cfg, std::size_t count);

/// Log-spaced trace abscissae over [lower/upper, upper/lower], x = 1 excluded.
std::vector<double> trace_points(const ScanConfig& cfg);

/// Signed relative excursion of v outside [min(x,y), max(x,y)].
double meanness_violation(double x, double y, double v);

/// min(x,y) <= F(x,y) <= max(x,y).
ScanReport check_meanness(const MeanFn& f, const ScanConfig& cfg = {});

/// 0 <= (m(x)-1)/(x-1) <= 1 for the trace m of a homogeneous F.
ScanReport check_trace_meanness(const MeanFn& f, const ScanConfig& cfg = {});

/// Non-decreasing trace on consecutive grid points; witness (x_i, x_{i+1}).
/// For symmetric homogeneous F this certifies that F is monotone.
ScanReport check_monotone_trace(const MeanFn& f, const ScanConfig& cfg = {});

/// (m(a) - m(b)) / m(b) for a < b: positive means the trace decreases.
double trace_decrease(const MeanFn& f, double a, double b);

/// |M(K,L) - M(x,y)| / M(x,y).
ScanReport check_invariance(const MeanPair& pair, const ScanConfig& cfg = {});

/// Both components of the pair are means. One pass over the samples.
ScanReport check_pair_meanness(const MeanPair& pair, const ScanConfig& cfg = {});

ScanReport check_symmetry(const MeanFn& f, const ScanConfig& cfg = {});
ScanReport check_homogeneity(const MeanFn& f, const ScanConfig& cfg = {});
/// Pair dominance: x1 <= x2, y1 <= y2 implies F(x1,y1) <= F(x2,y2).
ScanReport check_monotonicity(const MeanFn& f, const ScanConfig& cfg = {});
ScanReport check_strictness(const MeanFn& f, const ScanConfig& cfg = {});

/// Runs the checks for every declared flag in the order symmetric,
/// homogeneous, monotone, strict; stops at the first falsified one and names
/// it in `note`.
ScanReport check_flags(const MeanFn& f, const ScanConfig& cfg = {});

} // namespace invmeans
