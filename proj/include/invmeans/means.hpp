#pragma once

// Bivariate means on the positive quadrant: the MeanFn currency type, the
// classical catalog, Stolarsky and power means, and trace functions.

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace invmeans {

/// Relative distance |x-y|/max(x,y) below which difference-quotient means
/// switch to their midpoint series.
inline constexpr double kNearDiagonalRel = 1e-8;

bool near_diagonal(double x, double y) noexcept;

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

/// Declared properties of a mean. These are claims; `verify` checks them.
struct MeanFlags {
    bool symmetric = false;
    bool homogeneous = false;
    bool monotone = false;
    bool strict = false;

    friend bool operator==(const MeanFlags&, const MeanFlags&) = default;
};

inline constexpr MeanFlags kAllFlags{true, true, true, true};

/// A positive bivariate function with declared property flags.
///
/// Copies share the evaluator, so composing means by value is cheap. The
/// label is the canonical mean-spec text whenever the function was built
/// through the library, which lets the CLI print and re-parse it.
class MeanFn {
public:
    using Evaluator = std::function<double(double, double)>;

    MeanFn(std::string label, MeanFlags flags, Evaluator eval);

    double operator()(double x, double y) const { return (*eval_)(x, y); }

    const std::string& label() const noexcept { return label_; }
    const MeanFlags& flags() const noexcept { return flags_; }

    MeanFn with_flags(MeanFlags flags) const;
    MeanFn with_label(std::string label) const;

private:
    std::string label_;
    MeanFlags flags_;
    std::shared_ptr<const Evaluator> eval_;
};

/// Restriction f(x) = F(x, 1) of a homogeneous function.
class TraceFn {
public:
    using Evaluator = std::function<double(double)>;

    TraceFn(std::string label, Evaluator eval);

    double operator()(double x) const { return (*eval_)(x); }
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
    std::shared_ptr<const Evaluator> eval_;
};

/// Parameters (r, s) of a Stolarsky mean; r != s and both nonzero.
class StolarskyParams {
public:
    StolarskyParams(double r, double s);

    double r() const noexcept { return r_; }
    double s() const noexcept { return s_; }

private:
    double r_;
    double s_;
};

MeanFn arithmetic();
MeanFn geometric();
MeanFn harmonic();
MeanFn logarithmic();
MeanFn minimum();
MeanFn maximum();
MeanFn proj1();
MeanFn proj2();

/// Power mean ((x^p + y^p)/2)^(1/p); p = 0 is the geometric mean.
MeanFn power(double p);

/// STO_{r,s}(x,y) = ((s/r)(x^r - y^r)/(x^s - y^s))^(1/(r-s)).
MeanFn stolarsky(const StolarskyParams& params);

/// Looks up a catalog mean by identifier: arithmetic, geometric, harmonic,
/// logarithmic, min, max, proj1, proj2 or "power:p". Throws ConfigError on
/// anything else.
MeanFn classical(std::string_view name);

/// The eight parameter-free catalog means, in a fixed order.
std::vector<MeanFn> catalog();

/// f(x) = M(x, 1). Throws DomainError unless M is flagged homogeneous.
TraceFn trace_of(const MeanFn& mean);

} // namespace invmeans
