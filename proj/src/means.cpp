#include "invmeans/means.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "numeric.hpp"

namespace invmeans {

using detail::log_expm1_ratio;
using detail::log_ratio;
using detail::pow_pos;

bool near_diagonal(double x, double y) noexcept
{
    return std::fabs(x - y) <= kNearDiagonalRel * std::max(x, y);
}

std::string format_number(double v) { return fmt::format("{}", v); }

MeanFn::MeanFn(std::string label, MeanFlags flags, Evaluator eval)
    : label_(std::move(label)), flags_(flags),
      eval_(std::make_shared<const Evaluator>(std::move(eval)))
{
}

MeanFn MeanFn::with_flags(MeanFlags flags) const
{
    MeanFn copy = *this;
    copy.flags_ = flags;
    return copy;
}

MeanFn MeanFn::with_label(std::string label) const
{
    MeanFn copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

TraceFn::TraceFn(std::string label, Evaluator eval)
    : label_(std::move(label)), eval_(std::make_shared<const Evaluator>(std::move(eval)))
{
}

StolarskyParams::StolarskyParams(double r, double s) : r_(r), s_(s)
{
    if (!std::isfinite(r) || !std::isfinite(s))
        throw ParameterError("stolarsky parameters must be finite");
    if (r == s)
        throw ParameterError(fmt::format("stolarsky parameters must differ (r = s = {})", r));
    if (r == 0 || s == 0)
        throw ParameterError("stolarsky parameters must be nonzero");
}

namespace {

constexpr MeanFlags kProjectionFlags{false, true, true, false};
constexpr MeanFlags kLatticeFlags{true, true, true, false};

// Symmetric means are evaluated on (max, min) so that swapping the
// arguments is bitwise exact.
std::pair<double, double> ordered(double x, double y)
{
    return x >= y ? std::pair{x, y} : std::pair{y, x};
}

// Second-order expansion about the midpoint: a * (1 + c * u^2), u = (x-y)/(x+y).
double midpoint_series(double hi, double lo, double c)
{
    const double a = (hi + lo) / 2;
    const double u = (hi - lo) / (hi + lo);
    return a * (1 + c * u * u);
}

double geometric_eval(double x, double y) { return std::sqrt(x) * std::sqrt(y); }

} // namespace

MeanFn arithmetic()
{
    return MeanFn("arithmetic", kAllFlags, [](double x, double y) { return x / 2 + y / 2; });
}

MeanFn geometric() { return MeanFn("geometric", kAllFlags, geometric_eval); }

MeanFn harmonic()
{
    return MeanFn("harmonic", kAllFlags, [](double x, double y) {
        const auto [hi, lo] = ordered(x, y);
        return 2 * lo * (hi / (hi + lo));
    });
}

MeanFn logarithmic()
{
    return MeanFn("logarithmic", kAllFlags, [](double x, double y) {
        if (x == y)
            return x;
        const auto [hi, lo] = ordered(x, y);
        if (near_diagonal(hi, lo))
            return midpoint_series(hi, lo, -1.0 / 3);
        return (hi - lo) / log_ratio(hi, lo);
    });
}

MeanFn minimum()
{
    return MeanFn("min", kLatticeFlags, [](double x, double y) { return std::min(x, y); });
}

MeanFn maximum()
{
    return MeanFn("max", kLatticeFlags, [](double x, double y) { return std::max(x, y); });
}

MeanFn proj1()
{
    return MeanFn("proj1", kProjectionFlags, [](double x, double) { return x; });
}

MeanFn proj2()
{
    return MeanFn("proj2", kProjectionFlags, [](double, double y) { return y; });
}

MeanFn power(double p)
{
    if (!std::isfinite(p))
        throw ParameterError("power mean exponent must be finite");
    std::string label = "power:" + format_number(p);
    if (p == 0)
        return MeanFn(std::move(label), kAllFlags, geometric_eval);
    return MeanFn(std::move(label), kAllFlags, [p](double x, double y) {
        if (x == y)
            return x;
        const auto [hi, lo] = ordered(x, y);
        // Factor out the argument whose p-th power dominates.
        if (p > 0)
            return hi * std::pow((1 + pow_pos(lo / hi, p)) / 2, 1 / p);
        return lo * std::pow((1 + pow_pos(hi / lo, p)) / 2, 1 / p);
    });
}

MeanFn stolarsky(const StolarskyParams& params)
{
    const double r = params.r();
    const double s = params.s();
    std::string label = "stolarsky:" + format_number(r) + ":" + format_number(s);
    // With l = log(hi/lo), (s/r)(hi^r - lo^r)/(hi^s - lo^s) = lo^(r-s) g(rl)/g(sl)
    // where g(z) = expm1(z)/z, so the whole mean is lo * exp((log g(rl) - log g(sl))/(r-s)).
    return MeanFn(std::move(label), kAllFlags, [r, s](double x, double y) {
        if (x == y)
            return x;
        const auto [hi, lo] = ordered(x, y);
        if (near_diagonal(hi, lo))
            return midpoint_series(hi, lo, (r + s - 3) / 6);
        const double l = log_ratio(hi, lo);
        return lo * std::exp((log_expm1_ratio(r * l) - log_expm1_ratio(s * l)) / (r - s));
    });
}

MeanFn classical(std::string_view name)
{
    if (name == "arithmetic")
        return arithmetic();
    if (name == "geometric")
        return geometric();
    if (name == "harmonic")
        return harmonic();
    if (name == "logarithmic")
        return logarithmic();
    if (name == "min")
        return minimum();
    if (name == "max")
        return maximum();
    if (name == "proj1")
        return proj1();
    if (name == "proj2")
        return proj2();
    if (name.starts_with("power:")) {
        const std::string_view text = name.substr(6);
        double p = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
        if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
            throw ConfigError(fmt::format("bad power mean exponent '{}'", text));
        return power(p);
    }
    throw ConfigError(fmt::format("unknown mean identifier '{}'", name));
}

std::vector<MeanFn> catalog()
{
    return {arithmetic(), geometric(), harmonic(), logarithmic(),
            minimum(),    maximum(),   proj1(),    proj2()};
}

TraceFn trace_of(const MeanFn& mean)
{
    if (!mean.flags().homogeneous)
        throw DomainError(fmt::format("trace of '{}' is undefined: mean is not homogeneous",
                                      mean.label()));
    return TraceFn("trace(" + mean.label() + ")", [mean](double x) { return mean(x, 1.0); });
}

} // namespace invmeans
