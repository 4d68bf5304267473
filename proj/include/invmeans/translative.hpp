#pragma once

// Means on the whole real line and the log/exp conjugation that turns
// homogeneous means on the positive quadrant into translative ones.

#include <functional>
#include <memory>
#include <string>

#include "invmeans/means.hpp"

namespace invmeans {

/// Largest |x| accepted by a conjugated mean before exp overflows.
inline constexpr double kConjugateArgLimit = 700.0;

struct RealMeanFlags {
    bool symmetric = false;
    bool translative = false;
    bool monotone = false;
};

/// A mean of two real arguments.
class RealMeanFn {
public:
    using Evaluator = std::function<double(double, double)>;

    RealMeanFn(std::string label, RealMeanFlags flags, Evaluator eval);

    double operator()(double x, double y) const { return (*eval_)(x, y); }
    const std::string& label() const noexcept { return label_; }
    const RealMeanFlags& flags() const noexcept { return flags_; }

private:
    std::string label_;
    RealMeanFlags flags_;
    std::shared_ptr<const Evaluator> eval_;
};

struct RealMeanPair {
    RealMeanFn k;
    RealMeanFn l;
    RealMeanFn target;
    double t;
};

RealMeanFn arithmetic_on_reals();

/// N(x,y) = log M(e^x, e^y). Translative iff M is homogeneous. Evaluating
/// with |x| or |y| above kConjugateArgLimit throws RangeError.
RealMeanFn translative_conjugate(const MeanFn& m);

/// K = tx + (1-t) N_t, L = ty + (1-t) N_t with N_t = (N(x,y) - N(tx,ty))/(1-t).
/// Requires N monotone, translative and symmetric; t in (-1, 1).
RealMeanPair translative_pair(const RealMeanFn& n, double t);

} // namespace invmeans
