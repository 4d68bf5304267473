#include "invmeans/complement.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "numeric.hpp"

namespace invmeans {

using detail::log_expm1_ratio;
using detail::log_ratio;
using detail::pow_pos;

std::string spec_operand(const std::string& label)
{
    return label.find(':') == std::string::npos ? label : "(" + label + ")";
}

namespace {

void require_finite(double t)
{
    if (!std::isfinite(t))
        throw ParameterError("t must be finite");
}

void require_open_symmetric(double t, const char* who)
{
    require_finite(t);
    if (!(t > -1 && t < 1))
        throw ParameterError(fmt::format("{}: t = {} outside (-1, 1)", who, t));
}

void require_unit_open(double t, const char* who)
{
    require_finite(t);
    if (!(t > 0 && t < 1))
        throw ParameterError(fmt::format("{}: t = {} outside (0, 1)", who, t));
}

void require_flags(const MeanFn& m, bool monotone, const char* who)
{
    const MeanFlags& f = m.flags();
    if (!f.symmetric || !f.homogeneous || (monotone && !f.monotone))
        throw DomainError(fmt::format("{}: '{}' must be symmetric, homogeneous{}", who, m.label(),
                                      monotone ? " and monotone" : ""));
}

// t (x - y) / (x^t - y^t), continuous across the diagonal.
double divided_power_ratio(double x, double y, double t)
{
    if (x == y)
        return pow_pos(x, 1 - t);
    const double l = log_ratio(x, y);
    return std::exp((1 - t) * std::log(y) + log_expm1_ratio(l) - log_expm1_ratio(t * l));
}

} // namespace

MeanPair mapping(const MeanFn& k, const MeanFn& l, const MeanFn& target)
{
    return MeanPair{k,
                    l,
                    target,
                    std::numeric_limits<double>::quiet_NaN(),
                    "mapping:" + spec_operand(k.label()) + ":" + spec_operand(l.label()) + ":" +
                        spec_operand(target.label()),
                    fmt::format("K = {}, L = {}, target M = {}", k.label(), l.label(),
                                target.label()),
                    {}};
}

MeanPair log_pair(double t, const ConeSet& cone)
{
    require_finite(t);
    if (!(t >= -1 && t <= 1) || t == 0)
        throw ParameterError(fmt::format("log_pair: t = {} outside [-1, 1] \\ {{0}}", t));

    const ConeSet co = complement_cone(cone);
    const MeanFlags flags{cone.declared_asymmetric, cone.declared_cone, cone.declared_monotone,
                          false};
    auto component = [t](std::function<bool(double, double)> member) {
        return [t, member = std::move(member)](double x, double y) {
            if (x == y)
                return x;
            const double p = member(x, y) ? x : y;
            return pow_pos(p, t) * divided_power_ratio(x, y, t);
        };
    };
    const std::string label = "logpair:" + format_number(t) + ":" + cone.label;
    MeanPair pair{
        MeanFn("k:" + spec_operand(label), flags, component(cone.membership)),
        MeanFn("l:" + spec_operand(label), flags, component(co.membership)),
        logarithmic(),
        t,
        label,
        fmt::format("K(x,y) = t P_A(x,y)^t (x-y)/(x^t-y^t), L(x,y) = t P_A'(x,y)^t (x-y)/(x^t-y^t)"
                    "  [A = {}, t = {}, target M = logarithmic]",
                    cone.label, format_number(t)),
        {}};
    pair.joint = [t, member = cone.membership](double x, double y) -> std::pair<double, double> {
        if (x == y)
            return {x, x};
        const double s = divided_power_ratio(x, y, t);
        const bool in = member(x, y);
        return {pow_pos(in ? x : y, t) * s, pow_pos(in ? y : x, t) * s};
    };
    return pair;
}

MeanFn self_complement_base(const MeanFn& m, double t)
{
    require_open_symmetric(t, "self_complement_base");
    require_flags(m, false, "self_complement_base");
    const MeanFlags flags{true, true, false, false};
    return MeanFn("mt:" + spec_operand(m.label()) + ":" + format_number(t), flags,
                  [m, t](double x, double y) {
                      if (x == y)
                          return x;
                      const double ratio = m(x, y) / m(pow_pos(x, t), pow_pos(y, t));
                      return std::exp(std::log(ratio) / (1 - t));
                  });
}

MeanPair xy_pair(const MeanFn& m, double t, const ConeSet& cone)
{
    require_open_symmetric(t, "xy_pair");
    require_flags(m, true, "xy_pair");

    const ConeSet co = complement_cone(cone);
    const MeanFlags flags{cone.declared_asymmetric, cone.declared_cone, false, false};
    // P^t * M_t^(1-t) = P^t * M(x,y) / M(x^t, y^t)
    auto component = [m, t](std::function<bool(double, double)> member) {
        return [m, t, member = std::move(member)](double x, double y) {
            if (x == y)
                return x;
            const double p = member(x, y) ? x : y;
            return pow_pos(p, t) * (m(x, y) / m(pow_pos(x, t), pow_pos(y, t)));
        };
    };
    const std::string label =
        "xypair:" + spec_operand(m.label()) + ":" + format_number(t) + ":" + cone.label;
    MeanPair pair{
        MeanFn("k:" + spec_operand(label), flags, component(cone.membership)),
        MeanFn("l:" + spec_operand(label), flags, component(co.membership)),
        m,
        t,
        label,
        fmt::format("M_t(x,y) = (M(x,y)/M(x^t,y^t))^(1/(1-t)); K = P_A^t M_t^(1-t), "
                    "L = P_A'^t M_t^(1-t)  [M = {}, A = {}, t = {}]",
                    m.label(), cone.label, format_number(t)),
        {}};
    pair.joint = [m, t, member = cone.membership](double x, double y) -> std::pair<double, double> {
        if (x == y)
            return {x, x};
        const double xt = pow_pos(x, t);
        const double yt = pow_pos(y, t);
        const double s = m(x, y) / m(xt, yt);
        return member(x, y) ? std::pair{xt * s, yt * s} : std::pair{yt * s, xt * s};
    };
    return pair;
}

MeanFn general_base(const MeanFn& m, const MeanFn& c, const MeanFn& d, double t)
{
    require_unit_open(t, "general_base");
    require_flags(m, true, "general_base");
    const MeanFlags flags{c.flags().symmetric && d.flags().symmetric,
                          c.flags().homogeneous && d.flags().homogeneous, false, false};
    return MeanFn("nt:" + spec_operand(m.label()) + ":" + spec_operand(c.label()) + ":" +
                      spec_operand(d.label()) + ":" + format_number(t),
                  flags, [m, c, d, t](double x, double y) {
                      if (x == y)
                          return x;
                      const double ct = pow_pos(c(x, y), t);
                      const double dt = pow_pos(d(x, y), t);
                      return std::exp(std::log(m(x, y) / m(ct, dt)) / (1 - t));
                  });
}

MeanPair general_pair(const MeanFn& m, const MeanFn& c, const MeanFn& d, double t)
{
    require_unit_open(t, "general_pair");
    require_flags(m, true, "general_pair");
    const MeanFlags flags{c.flags().symmetric && d.flags().symmetric,
                          c.flags().homogeneous && d.flags().homogeneous, false, false};
    // C^t * N_t^(1-t) = C^t * M(x,y) / M(C^t, D^t)
    auto component = [m, c, d, t](bool first) {
        return [m, c, d, t, first](double x, double y) {
            if (x == y)
                return x;
            const double ct = pow_pos(c(x, y), t);
            const double dt = pow_pos(d(x, y), t);
            return (first ? ct : dt) * (m(x, y) / m(ct, dt));
        };
    };
    const std::string label = "pair:" + spec_operand(m.label()) + ":" + spec_operand(c.label()) +
                              ":" + spec_operand(d.label()) + ":" + format_number(t);
    MeanPair pair{MeanFn("k:" + spec_operand(label), flags, component(true)),
                  MeanFn("l:" + spec_operand(label), flags, component(false)),
                  m,
                  t,
                  label,
                  fmt::format("N_t(x,y) = (M(x,y)/M(C^t,D^t))^(1/(1-t)); K = C^t N_t^(1-t), "
                              "L = D^t N_t^(1-t)  [M = {}, C = {}, D = {}, t = {}]",
                              m.label(), c.label(), d.label(), format_number(t)),
                  {}};
    pair.joint = [m, c, d, t](double x, double y) -> std::pair<double, double> {
        if (x == y)
            return {x, x};
        const double ct = pow_pos(c(x, y), t);
        const double dt = pow_pos(d(x, y), t);
        const double s = m(x, y) / m(ct, dt);
        return {ct * s, dt * s};
    };
    return pair;
}

MeanFn first_of(const MeanPair& pair) { return pair.k; }

MeanFn second_of(const MeanPair& pair) { return pair.l; }

} // namespace invmeans
