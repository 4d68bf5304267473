#pragma once

// Generalized projective means P_A: x on a chosen off-diagonal set A, y elsewhere.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invmeans/means.hpp"
#include "invmeans/report.hpp"

namespace invmeans {

/// A subset A of the off-diagonal quadrant, given by a membership predicate.
///
/// The declared flags are claims about A; they are spot-checked, never
/// proven. Predicates must be stateless so that evaluation is thread-safe.
struct ConeSet {
    std::string label;
    std::function<bool(double, double)> membership;
    /// (x,y) in A  <=>  (y,x) not in A, for x != y.
    bool declared_asymmetric = false;
    /// A = lambda * A for every lambda > 0.
    bool declared_cone = false;
    /// P_A is monotone. Only known for the four catalog cones.
    bool declared_monotone = false;

    bool contains(double x, double y) const { return membership(x, y); }
};

ConeSet full_cone();  // all of the off-diagonal quadrant; P_A = proj1
ConeSet empty_cone(); // P_A = proj2
ConeSet lower_cone(); // {x < y}; P_A = min
ConeSet upper_cone(); // {x > y}; P_A = max
/// {x+y < 2 ? x < y : x > y}: asymmetric but not a cone.
ConeSet mixed_cone();

/// full, empty, lower, upper, mixed; "co-NAME" is the complement of NAME.
ConeSet builtin_cone(std::string_view name);
std::vector<ConeSet> builtin_cones();

MeanFn projective_mean(const ConeSet& cone);

/// A' = X \ A, with the declared flags carried over.
ConeSet complement_cone(const ConeSet& cone);

/// {P_A(x,y), P_A'(x,y)} = {x,y} at every sample.
ScanReport check_exchange_property(const ConeSet& cone, std::span<const PositivePair> samples);

/// membership(x,y) XOR membership(y,x) at every off-diagonal sample.
ScanReport check_asymmetry(const ConeSet& cone, std::span<const PositivePair> samples);

/// membership(x,y) == membership(l*x, l*y) for every sample and scale l.
ScanReport check_cone(const ConeSet& cone, std::span<const PositivePair> samples,
                      std::span<const double> scales);

} // namespace invmeans
