#pragma once

// Explicit solutions (K, L) of the invariance equation M(K(x,y), L(x,y)) = M(x,y).
//
// Every constructor validates its own range of t:
//   log_pair                          t in [-1, 1] \ {0}
//   self_complement_base, xy_pair     t in (-1, 1)
//   general_base, general_pair        t in (0, 1)
// and throws ParameterError outside it. Missing flags on M raise DomainError.

#include <functional>
#include <string>
#include <utility>

#include "invmeans/means.hpp"
#include "invmeans/projective.hpp"

namespace invmeans {

/// A mean-type mapping (x,y) -> (K(x,y), L(x,y)) together with the mean it
/// is claimed to be complementary to.
struct MeanPair {
    using JointEvaluator = std::function<std::pair<double, double>(double, double)>;

    MeanFn k;
    MeanFn l;
    MeanFn target;
    /// Construction parameter; NaN for pairs assembled by hand.
    double t;
    std::string label;
    /// Human-readable closed form.
    std::string formula;
    /// Optional evaluator computing (K, L) with shared intermediate terms.
    JointEvaluator joint;

    std::pair<double, double> apply(double x, double y) const
    {
        return joint ? joint(x, y) : std::pair{k(x, y), l(x, y)};
    }
};

/// Wraps an arbitrary pair (K, L) with a claimed target M; no checks.
MeanPair mapping(const MeanFn& k, const MeanFn& l, const MeanFn& target);

/// K = t P_A^t (x-y)/(x^t-y^t), L = t P_A'^t (x-y)/(x^t-y^t); complementary
/// to the logarithmic mean. At t = +-1 the pair degenerates to projections.
MeanPair log_pair(double t, const ConeSet& cone = full_cone());

/// M_t = (M(x,y) / M(x^t, y^t))^(1/(1-t)). A mean for every t in (-1,1)
/// exactly when M is monotone; requires M symmetric and homogeneous.
MeanFn self_complement_base(const MeanFn& m, double t);

/// K = P_A^t M_t^(1-t), L = P_A'^t M_t^(1-t). Requires M symmetric,
/// homogeneous and monotone.
MeanPair xy_pair(const MeanFn& m, double t, const ConeSet& cone = full_cone());

/// N_t = (M(x,y) / M(C^t, D^t))^(1/(1-t)). Not necessarily a mean.
MeanFn general_base(const MeanFn& m, const MeanFn& c, const MeanFn& d, double t);

/// K = C^t N_t^(1-t), L = D^t N_t^(1-t). Both are means for any means C, D
/// whenever M is symmetric, homogeneous and monotone, whether or not N_t is.
MeanPair general_pair(const MeanFn& m, const MeanFn& c, const MeanFn& d, double t);

/// Components of a pair as standalone means ("k:PAIR" / "l:PAIR").
MeanFn first_of(const MeanPair& pair);
MeanFn second_of(const MeanPair& pair);

/// Label text usable as an operand inside a larger spec.
std::string spec_operand(const std::string& label);

} // namespace invmeans
