#include "invmeans/projective.hpp"

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "report_builder.hpp"

namespace invmeans {

ConeSet full_cone() { return {"full", [](double, double) { return true; }, false, true, true}; }

ConeSet empty_cone() { return {"empty", [](double, double) { return false; }, false, true, true}; }

ConeSet lower_cone()
{
    return {"lower", [](double x, double y) { return x < y; }, true, true, true};
}

ConeSet upper_cone()
{
    return {"upper", [](double x, double y) { return x > y; }, true, true, true};
}

ConeSet mixed_cone()
{
    return {"mixed", [](double x, double y) { return x + y < 2 ? x < y : x > y; }, true, false,
            false};
}

ConeSet builtin_cone(std::string_view name)
{
    if (name == "full")
        return full_cone();
    if (name == "empty")
        return empty_cone();
    if (name == "lower")
        return lower_cone();
    if (name == "upper")
        return upper_cone();
    if (name == "mixed")
        return mixed_cone();
    if (name.starts_with("co-"))
        return complement_cone(builtin_cone(name.substr(3)));
    throw ConfigError(fmt::format("unknown cone set '{}'", name));
}

std::vector<ConeSet> builtin_cones()
{
    return {full_cone(), empty_cone(), lower_cone(), upper_cone(), mixed_cone()};
}

MeanFn projective_mean(const ConeSet& cone)
{
    const MeanFlags flags{cone.declared_asymmetric, cone.declared_cone, cone.declared_monotone,
                          false};
    return MeanFn("proj:" + cone.label, flags, [membership = cone.membership](double x, double y) {
        if (x == y)
            return x;
        return membership(x, y) ? x : y;
    });
}

namespace {

std::string complement_label(const std::string& label)
{
    if (label == "full")
        return "empty";
    if (label == "empty")
        return "full";
    if (label == "lower")
        return "upper";
    if (label == "upper")
        return "lower";
    if (label.starts_with("co-"))
        return label.substr(3);
    return "co-" + label;
}

} // namespace

ConeSet complement_cone(const ConeSet& cone)
{
    ConeSet out = cone;
    out.label = complement_label(cone.label);
    out.membership = [membership = cone.membership](double x, double y) {
        return !membership(x, y);
    };
    return out;
}

ScanReport check_exchange_property(const ConeSet& cone, std::span<const PositivePair> samples)
{
    const MeanFn p = projective_mean(cone);
    const MeanFn q = projective_mean(complement_cone(cone));
    detail::ReportBuilder builder;
    for (const auto& [x, y] : samples) {
        const double a = p(x, y);
        const double b = q(x, y);
        const bool ok = (a == x && b == y) || (a == y && b == x);
        builder.add(ok ? 0.0 : 1.0, {x, y});
    }
    return std::move(builder).finish(0.0);
}

ScanReport check_asymmetry(const ConeSet& cone, std::span<const PositivePair> samples)
{
    detail::ReportBuilder builder;
    for (const auto& [x, y] : samples) {
        if (x == y)
            continue;
        const bool ok = cone.contains(x, y) != cone.contains(y, x);
        builder.add(ok ? 0.0 : 1.0, {x, y});
    }
    return std::move(builder).finish(0.0);
}

ScanReport check_cone(const ConeSet& cone, std::span<const PositivePair> samples,
                      std::span<const double> scales)
{
    detail::ReportBuilder builder;
    for (const auto& [x, y] : samples) {
        if (x == y)
            continue;
        for (const double lambda : scales) {
            const double lx = lambda * x;
            const double ly = lambda * y;
            const bool ok = cone.contains(x, y) == cone.contains(lx, ly);
            builder.add(ok ? 0.0 : 1.0, {x, y, lambda});
        }
    }
    return std::move(builder).finish(0.0);
}

} // namespace invmeans
