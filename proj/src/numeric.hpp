#pragma once

#include <cmath>

namespace invmeans::detail {

/// x^t for x > 0, as exp(t log x).
inline double pow_pos(double x, double t) { return std::exp(t * std::log(x)); }

/// log(x/y) without the cancellation of log x - log y when x is close to y.
inline double log_ratio(double x, double y)
{
    if (x >= y) {
        const double q = (x - y) / y;
        return q < 1e15 ? std::log1p(q) : std::log(x) - std::log(y);
    }
    const double q = (y - x) / x;
    return q < 1e15 ? -std::log1p(q) : std::log(x) - std::log(y);
}

/// log(expm1(z) / z), the log of the divided difference of exp at (0, z).
inline double log_expm1_ratio(double z)
{
    const double az = std::fabs(z);
    if (az < 1e-5)
        return z / 2 + z * z / 24;
    if (z > 50)
        return z - std::log(z) + std::log1p(-std::exp(-z));
    if (z < -50)
        return std::log1p(-std::exp(z)) - std::log(-z);
    return std::log(std::expm1(z) / z);
}

} // namespace invmeans::detail
