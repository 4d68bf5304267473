#include "invmeans/multivar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "numeric.hpp"
#include "report_builder.hpp"

namespace invmeans {

using detail::pow_pos;

NaryMeanFn::NaryMeanFn(std::string label, std::size_t arity, Evaluator eval)
    : label_(std::move(label)), arity_(arity),
      eval_(std::make_shared<const Evaluator>(std::move(eval)))
{
    if (arity < 2)
        throw DomainError("n-ary means need at least two arguments");
}

double NaryMeanFn::operator()(std::span<const double> args) const
{
    if (args.size() != arity_)
        throw DomainError(fmt::format("'{}' expects {} arguments, got {}", label_, arity_,
                                      args.size()));
    return (*eval_)(args);
}

namespace {

bool all_equal(std::span<const double> v)
{
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

void check_arities(const NaryMeanFn& m, std::span<const NaryMeanFn> cs)
{
    if (cs.size() != m.arity())
        throw DomainError(fmt::format("{} inner means given for arity {}", cs.size(), m.arity()));
    for (const auto& c : cs)
        if (c.arity() != m.arity())
            throw DomainError(fmt::format("'{}' has arity {}, expected {}", c.label(), c.arity(),
                                          m.arity()));
}

void check_t(double t)
{
    if (!std::isfinite(t) || !(t > 0 && t < 1))
        throw ParameterError(fmt::format("t = {} outside (0, 1)", t));
}

// Powers C_i(v)^t and the scale M(v) / M(C_1^t, ..., C_n^t).
double powered_inner(const NaryMeanFn& m, std::span<const NaryMeanFn> cs, double t,
                     std::span<const double> v, std::vector<double>& powered)
{
    powered.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        powered[i] = pow_pos(cs[i](v), t);
    return m(v) / m(powered);
}

std::string tuple_label(const NaryMeanFn& m, std::span<const NaryMeanFn> cs, double t)
{
    std::string label = m.label() + "(";
    for (std::size_t i = 0; i < cs.size(); ++i)
        label += (i ? "," : "") + cs[i].label();
    return label + "):" + format_number(t);
}

} // namespace

NaryMeanFn nary_arithmetic(std::size_t n)
{
    return NaryMeanFn(fmt::format("arithmetic{}", n), n, [](std::span<const double> v) {
        if (all_equal(v))
            return v.front();
        return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    });
}

NaryMeanFn nary_geometric(std::size_t n)
{
    return NaryMeanFn(fmt::format("geometric{}", n), n, [](std::span<const double> v) {
        if (all_equal(v))
            return v.front();
        double s = 0;
        for (const double x : v)
            s += std::log(x);
        return std::exp(s / static_cast<double>(v.size()));
    });
}

NaryMeanFn as_nary(const MeanFn& mean)
{
    return NaryMeanFn(mean.label(), 2, [mean](std::span<const double> v) {
        return mean(v[0], v[1]);
    });
}

NaryMeanFn nary_general_base(const NaryMeanFn& m, std::span<const NaryMeanFn> cs, double t)
{
    check_t(t);
    check_arities(m, cs);
    std::vector<NaryMeanFn> inner(cs.begin(), cs.end());
    return NaryMeanFn("nt:" + tuple_label(m, cs, t), m.arity(),
                      [m, inner, t](std::span<const double> v) {
                          if (all_equal(v))
                              return v.front();
                          std::vector<double> powered;
                          const double scale = powered_inner(m, inner, t, v, powered);
                          return std::exp(std::log(scale) / (1 - t));
                      });
}

std::vector<NaryMeanFn> nary_general_tuple(const NaryMeanFn& m, std::span<const NaryMeanFn> cs,
                                           double t)
{
    check_t(t);
    check_arities(m, cs);
    std::vector<NaryMeanFn> inner(cs.begin(), cs.end());
    std::vector<NaryMeanFn> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        out.emplace_back(fmt::format("k{}:{}", i + 1, tuple_label(m, cs, t)), m.arity(),
                         [m, inner, t, i](std::span<const double> v) {
                             if (all_equal(v))
                                 return v.front();
                             std::vector<double> powered;
                             const double scale = powered_inner(m, inner, t, v, powered);
                             return powered[i] * scale;
                         });
    return out;
}

std::vector<NaryMeanFn> counterexample_means(std::size_t n)
{
    std::vector<NaryMeanFn> cs{nary_arithmetic(n)};
    for (std::size_t i = 1; i < n; ++i)
        cs.push_back(nary_geometric(n));
    return cs;
}

double counterexample_ratio(std::size_t n, double t, double x)
{
    if (n < 3)
        throw ParameterError(fmt::format("counterexample needs n >= 3, got {}", n));
    check_t(t);
    if (!(x > 0 && std::isfinite(x)))
        throw ParameterError(fmt::format("x = {} must be positive", x));
    const auto cs = counterexample_means(n);
    const auto tuple = nary_general_tuple(nary_arithmetic(n), cs, t);
    std::vector<double> v(n, x);
    v.front() = 1;
    return tuple.front()(v) / std::max(1.0, x);
}

namespace {

std::vector<std::vector<double>> random_vectors(const ScanConfig& cfg, std::size_t n,
                                                std::size_t count)
{
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(std::log(cfg.lower), std::log(cfg.upper));
    std::vector<std::vector<double>> out(count, std::vector<double>(n));
    for (auto& v : out)
        for (auto& x : v)
            x = std::exp(u(rng));
    return out;
}

} // namespace

ScanReport check_nary_meanness(const NaryMeanFn& f, const ScanConfig& cfg)
{
    cfg.validate();
    const std::size_t n = f.arity();
    const auto side = static_cast<std::size_t>(cfg.points_per_axis);
    std::vector<std::vector<double>> samples;
    // The ray (1, x, ..., x), densely.
    const double a = std::log(cfg.lower);
    const double b = std::log(cfg.upper);
    const std::size_t ray = side * side;
    for (std::size_t i = 0; i < ray; ++i) {
        std::vector<double> v(n, std::exp(a + (b - a) * static_cast<double>(i) /
                                                  static_cast<double>(ray - 1)));
        v.front() = 1;
        samples.push_back(std::move(v));
    }
    const auto random = random_vectors(cfg, n, 10 * side * side);
    samples.insert(samples.end(), random.begin(), random.end());

    detail::ReportBuilder builder;
    for (const auto& v : samples) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        double violation = std::numeric_limits<double>::infinity();
        try {
            const double value = f(v);
            if (std::isfinite(value))
                violation = std::max((*lo - value) / *lo, (value - *hi) / *hi);
        } catch (...) {
        }
        builder.add_with_witness(violation, v);
    }
    return std::move(builder).finish(cfg.rel_tol);
}

ScanReport check_nary_invariance(const NaryMeanFn& m, std::span<const NaryMeanFn> tuple,
                                 const ScanConfig& cfg, std::size_t count)
{
    cfg.validate();
    check_arities(m, tuple);
    detail::ReportBuilder builder;
    std::vector<double> image(m.arity());
    for (const auto& v : random_vectors(cfg, m.arity(), count)) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            image[i] = tuple[i](v);
        const double before = m(v);
        builder.add_with_witness(std::fabs(m(image) - before) / before, v);
    }
    return std::move(builder).finish(cfg.rel_tol);
}

} // namespace invmeans
