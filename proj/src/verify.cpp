#include "invmeans/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "report_builder.hpp"

namespace invmeans {

void ScanConfig::validate() const
{
    if (!(std::isfinite(lower) && std::isfinite(upper) && lower > 0 && lower < upper))
        throw ConfigError(fmt::format("scan domain [{}, {}] must satisfy 0 < lower < upper", lower,
                                      upper));
    if (points_per_axis < 8)
        throw ConfigError(fmt::format("points_per_axis = {} must be at least 8", points_per_axis));
    if (!(rel_tol >= 0))
        throw ConfigError("rel_tol must be non-negative");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kScales[] = {1e-3, 7.5, 1e3};
constexpr std::size_t kChunk = 2048;

std::vector<double> log_space(double lo, double hi, int n)
{
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

template <class F>
double safe_eval(const F& f, double x, double y) noexcept
{
    try {
        return f(x, y);
    } catch (...) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

// Visits items in fixed-size chunks, possibly on several threads, and merges
// the per-chunk reports in chunk order. The result does not depend on the
// number of workers.
template <class Item, class Visit>
ScanReport parallel_scan(std::span<const Item> items, const Visit& visit, double tolerance)
{
    const std::size_t chunks = (items.size() + kChunk - 1) / kChunk;
    std::vector<ScanReport> parts(chunks);
    auto run_chunk = [&](std::size_t c) {
        detail::ReportBuilder local;
        const std::size_t end = std::min(items.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i)
            visit(items[i], local);
        parts[c] = local.partial();
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++)
                    run_chunk(c);
            });
        for (auto& th : pool)
            th.join();
    }

    detail::ReportBuilder total;
    for (const auto& part : parts)
        total.merge(part);
    return std::move(total).finish(tolerance);
}

void require_homogeneous(const MeanFn& f, const char* who)
{
    if (!f.flags().homogeneous)
        throw DomainError(fmt::format("{}: '{}' is not flagged homogeneous", who, f.label()));
}

struct Dominance {
    double x1, y1, x2, y2;
};

} // namespace

std::vector<PositivePair> random_pairs(const ScanConfig& cfg, std::size_t count)
{
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(std::log(cfg.lower), std::log(cfg.upper));
    std::vector<PositivePair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = std::exp(u(rng));
        const double y = std::exp(u(rng));
        out.emplace_back(x, y);
    }
    return out;
}

std::vector<PositivePair> scan_pairs(const ScanConfig& cfg)
{
    cfg.validate();
    const auto axis = log_space(cfg.lower, cfg.upper, cfg.points_per_axis);
    const auto n = static_cast<std::size_t>(cfg.points_per_axis);
    std::vector<PositivePair> out;
    out.reserve(11 * n * n + 24);
    for (const double x : axis)
        for (const double y : axis)
            out.emplace_back(x, y);

    const auto random = random_pairs(cfg, 10 * n * n);
    out.insert(out.end(), random.begin(), random.end());

    const double centre = std::sqrt(cfg.lower) * std::sqrt(cfg.upper);
    for (int k = 1; k <= 12; ++k) {
        const double ratio = std::pow(10.0, k);
        if (ratio > cfg.upper / cfg.lower)
            break;
        const double hi = centre * std::sqrt(ratio);
        const double lo = centre / std::sqrt(ratio);
        out.emplace_back(hi, lo);
        out.emplace_back(lo, hi);
    }
    return out;
}

std::vector<double> trace_points(const ScanConfig& cfg)
{
    cfg.validate();
    const double span = cfg.upper / cfg.lower;
    auto points = log_space(1 / span, span, cfg.points_per_axis * cfg.points_per_axis);
    for (int k = 1; k <= 12 && std::pow(10.0, k) <= span; ++k) {
        points.push_back(std::pow(10.0, k));
        points.push_back(std::pow(10.0, -k));
    }
    std::erase(points, 1.0);
    return points;
}

double meanness_violation(double x, double y, double v)
{
    if (!std::isfinite(v))
        return kInf;
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    return std::max((lo - v) / lo, (v - hi) / hi);
}

ScanReport check_meanness(const MeanFn& f, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&f](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            out.add(meanness_violation(x, y, safe_eval(f, x, y)), {x, y});
        },
        cfg.rel_tol);
}

ScanReport check_pair_meanness(const MeanPair& pair, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&pair](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            double violation = kInf;
            try {
                const auto [k, l] = pair.apply(x, y);
                violation = std::max(meanness_violation(x, y, k), meanness_violation(x, y, l));
            } catch (...) {
            }
            out.add(violation, {x, y});
        },
        cfg.rel_tol);
}

ScanReport check_invariance(const MeanPair& pair, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&pair](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            double violation = kInf;
            try {
                const auto [k, l] = pair.apply(x, y);
                const double before = pair.target(x, y);
                const double after = pair.target(k, l);
                violation = std::fabs(after - before) / before;
            } catch (...) {
            }
            out.add(violation, {x, y});
        },
        cfg.rel_tol);
}

ScanReport check_trace_meanness(const MeanFn& f, const ScanConfig& cfg)
{
    require_homogeneous(f, "check_trace_meanness");
    const auto points = trace_points(cfg);
    return parallel_scan<double>(
        points,
        [&f](double x, detail::ReportBuilder& out) {
            const double m = safe_eval(f, x, 1.0);
            const double q = (m - 1) / (x - 1);
            out.add(std::isfinite(q) ? std::max(-q, q - 1) : kInf, {x, 1.0});
        },
        cfg.rel_tol);
}

double trace_decrease(const MeanFn& f, double a, double b)
{
    const double ma = safe_eval(f, a, 1.0);
    const double mb = safe_eval(f, b, 1.0);
    const double v = (ma - mb) / mb;
    return std::isfinite(v) ? v : kInf;
}

ScanReport check_monotone_trace(const MeanFn& f, const ScanConfig& cfg)
{
    require_homogeneous(f, "check_monotone_trace");
    cfg.validate();
    const double span = cfg.upper / cfg.lower;
    const auto grid = log_space(1 / span, span, cfg.points_per_axis * cfg.points_per_axis);
    std::vector<PositivePair> steps;
    steps.reserve(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        steps.emplace_back(grid[i], grid[i + 1]);
    auto report = parallel_scan<PositivePair>(
        steps,
        [&f](const PositivePair& s, detail::ReportBuilder& out) {
            out.add(trace_decrease(f, s.first, s.second), {s.first, s.second});
        },
        cfg.rel_tol);
    if (!f.flags().symmetric)
        report.note = "trace monotonicity does not certify monotonicity of a non-symmetric mean";
    return report;
}

ScanReport check_symmetry(const MeanFn& f, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&f](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            const double a = safe_eval(f, x, y);
            const double b = safe_eval(f, y, x);
            out.add(std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)), {x, y});
        },
        cfg.rel_tol);
}

ScanReport check_homogeneity(const MeanFn& f, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&f](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            const double base = safe_eval(f, x, y);
            for (const double lambda : kScales) {
                const double scaled = safe_eval(f, lambda * x, lambda * y);
                out.add(std::fabs(scaled - lambda * base) / (lambda * std::fabs(base)),
                        {x, y, lambda});
            }
        },
        cfg.rel_tol);
}

ScanReport check_monotonicity(const MeanFn& f, const ScanConfig& cfg)
{
    cfg.validate();
    const auto axis = log_space(cfg.lower, cfg.upper, cfg.points_per_axis);
    std::vector<Dominance> cases;
    for (std::size_t i = 0; i < axis.size(); ++i)
        for (std::size_t j = 0; j < axis.size(); ++j) {
            if (i + 1 < axis.size())
                cases.push_back({axis[i], axis[j], axis[i + 1], axis[j]});
            if (j + 1 < axis.size())
                cases.push_back({axis[i], axis[j], axis[i], axis[j + 1]});
        }
    const auto base = random_pairs(cfg, 10 * axis.size() * axis.size());
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> stretch(0.0, std::log(100.0));
    for (const auto& [x, y] : base)
        cases.push_back({x, y, x * std::exp(stretch(rng)), y * std::exp(stretch(rng))});

    return parallel_scan<Dominance>(
        cases,
        [&f](const Dominance& d, detail::ReportBuilder& out) {
            const double lower = safe_eval(f, d.x1, d.y1);
            const double upper = safe_eval(f, d.x2, d.y2);
            out.add((lower - upper) / upper, {d.x1, d.y1, d.x2, d.y2});
        },
        cfg.rel_tol);
}

ScanReport check_strictness(const MeanFn& f, const ScanConfig& cfg)
{
    const auto samples = scan_pairs(cfg);
    return parallel_scan<PositivePair>(
        samples,
        [&f](const PositivePair& p, detail::ReportBuilder& out) {
            const auto [x, y] = p;
            const double lo = std::min(x, y);
            const double hi = std::max(x, y);
            // Strictness is not observable in double precision next to the diagonal.
            if (hi <= lo * (1 + 1e-6))
                return;
            const double v = safe_eval(f, x, y);
            const bool inside = v > lo && v < hi;
            out.add(inside ? -std::min(v - lo, hi - v) / hi : 1.0, {x, y});
        },
        0.0);
}

ScanReport check_flags(const MeanFn& f, const ScanConfig& cfg)
{
    cfg.validate();
    const MeanFlags& flags = f.flags();
    detail::ReportBuilder combined;
    auto stage = [&](bool declared, const char* name, auto check) -> std::optional<ScanReport> {
        if (!declared)
            return std::nullopt;
        ScanReport r = check(f, cfg);
        if (!r.passed) {
            r.note = name;
            return r;
        }
        combined.merge(r);
        return std::nullopt;
    };
    if (auto r = stage(flags.symmetric, "symmetric", check_symmetry))
        return *r;
    if (auto r = stage(flags.homogeneous, "homogeneous", check_homogeneity))
        return *r;
    if (auto r = stage(flags.monotone, "monotone", check_monotonicity))
        return *r;
    // The strictness scan reports margins as non-positive values, which merge cleanly.
    if (auto r = stage(flags.strict, "strict", check_strictness))
        return *r;
    return std::move(combined).finish(cfg.rel_tol);
}

} // namespace invmeans
