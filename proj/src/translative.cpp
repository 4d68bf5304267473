#include "invmeans/translative.hpp"

#include <cmath>

#include <fmt/format.h>

#include "invmeans/errors.hpp"

namespace invmeans {

RealMeanFn::RealMeanFn(std::string label, RealMeanFlags flags, Evaluator eval)
    : label_(std::move(label)), flags_(flags),
      eval_(std::make_shared<const Evaluator>(std::move(eval)))
{
}

RealMeanFn arithmetic_on_reals()
{
    return RealMeanFn("arithmetic", {true, true, true}, [](double x, double y) {
        return x / 2 + y / 2;
    });
}

RealMeanFn translative_conjugate(const MeanFn& m)
{
    const MeanFlags& f = m.flags();
    return RealMeanFn("conj:" + m.label(), {f.symmetric, f.homogeneous, f.monotone},
                      [m](double x, double y) {
                          if (!(std::fabs(x) <= kConjugateArgLimit &&
                                std::fabs(y) <= kConjugateArgLimit))
                              throw RangeError(fmt::format(
                                  "conjugate mean argument ({}, {}) outside [-{}, {}]", x, y,
                                  kConjugateArgLimit, kConjugateArgLimit));
                          if (x == y)
                              return x;
                          return std::log(m(std::exp(x), std::exp(y)));
                      });
}

RealMeanPair translative_pair(const RealMeanFn& n, double t)
{
    if (!std::isfinite(t) || !(t > -1 && t < 1))
        throw ParameterError(fmt::format("translative_pair: t = {} outside (-1, 1)", t));
    const RealMeanFlags& f = n.flags();
    if (!f.symmetric || !f.translative || !f.monotone)
        throw DomainError(fmt::format(
            "translative_pair: '{}' must be symmetric, translative and monotone", n.label()));

    // tx + (1-t) N_t(x,y) = N(x,y) - (N(tx,ty) - tx) = N(x,y) - N(0, t(y-x)) by translativity;
    // the second form keeps the correction exactly antisymmetric between K and L.
    const RealMeanFlags flags{false, true, false};
    const std::string tag = fmt::format("{}:{}", n.label(), t);
    RealMeanFn k("tk:" + tag, flags, [n, t](double x, double y) {
        return n(x, y) - n(0.0, t * (y - x));
    });
    RealMeanFn l("tl:" + tag, flags, [n, t](double x, double y) {
        return n(x, y) - n(t * (x - y), 0.0);
    });
    return RealMeanPair{std::move(k), std::move(l), n, t};
}

} // namespace invmeans
