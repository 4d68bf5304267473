#include "invmeans/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <tuple>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "report_builder.hpp"

namespace invmeans {

double relative_gap(double x, double y) { return std::fabs(x - y) / std::max(x, y); }

IterationTrace iterate_pair(const MeanPair& pair, double x0, double y0, double rel_stop,
                            std::size_t max_iter)
{
    if (!(x0 > 0 && y0 > 0 && std::isfinite(x0) && std::isfinite(y0)))
        throw ParameterError(fmt::format("starting pair ({}, {}) must be positive", x0, y0));
    if (!(rel_stop > 0 && rel_stop < 1))
        throw ParameterError(fmt::format("rel_stop = {} outside (0, 1)", rel_stop));
    if (max_iter < 1)
        throw ParameterError("max_iter must be at least 1");

    IterationTrace trace;
    trace.order_estimate = std::numeric_limits<double>::quiet_NaN();
    trace.iterates.emplace_back(x0, y0);
    std::vector<double> gaps{relative_gap(x0, y0)};

    double x = x0;
    double y = y0;
    trace.converged = gaps.back() <= rel_stop;
    while (!trace.converged && trace.iterations < max_iter) {
        std::tie(x, y) = pair.apply(x, y);
        ++trace.iterations;
        trace.iterates.emplace_back(x, y);
        const double gap = relative_gap(x, y);
        if (gap > gaps.back())
            trace.gap_monotone = false;
        gaps.push_back(gap);
        if (!std::isfinite(x) || !std::isfinite(y))
            break;
        trace.converged = gap <= rel_stop;
    }

    trace.final_gap = gaps.back();
    trace.limit = x / 2 + y / 2;

    std::vector<double> nonzero;
    std::copy_if(gaps.begin(), gaps.end(), std::back_inserter(nonzero),
                 [](double g) { return g > 0; });
    if (nonzero.size() >= 3) {
        const std::size_t n = nonzero.size() - 1;
        const double denom = std::log(nonzero[n - 1] / nonzero[n - 2]);
        if (denom != 0)
            trace.order_estimate = std::log(nonzero[n] / nonzero[n - 1]) / denom;
    }
    return trace;
}

ScanReport invariant_value_along_trajectory(const MeanPair& pair, const IterationTrace& trace,
                                            double rel_tol)
{
    detail::ReportBuilder builder;
    if (trace.iterates.empty())
        return std::move(builder).finish(rel_tol);
    const auto [x0, y0] = trace.iterates.front();
    const double reference = pair.target(x0, y0);
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        const auto [x, y] = trace.iterates[n];
        const double value = pair.target(x, y);
        builder.add(std::fabs(value - reference) / reference,
                    {static_cast<double>(n), x, y});
    }
    return std::move(builder).finish(rel_tol);
}

} // namespace invmeans
