#pragma once

// n-variable means and the failure of the general construction for n > 2:
// the n-tuple (C_i^t N_t^(1-t)) is still M-invariant, but its members need
// not be means.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "invmeans/means.hpp"
#include "invmeans/report.hpp"

namespace invmeans {

class NaryMeanFn {
public:
    using Evaluator = std::function<double(std::span<const double>)>;

    NaryMeanFn(std::string label, std::size_t arity, Evaluator eval);

    /// Throws DomainError if args.size() != arity().
    double operator()(std::span<const double> args) const;

    std::size_t arity() const noexcept { return arity_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
    std::size_t arity_;
    std::shared_ptr<const Evaluator> eval_;
};

NaryMeanFn nary_arithmetic(std::size_t n);
NaryMeanFn nary_geometric(std::size_t n);

/// A bivariate mean viewed as a 2-ary NaryMeanFn.
NaryMeanFn as_nary(const MeanFn& mean);

/// N_t = (M / M(C_1^t, ..., C_n^t))^(1/(1-t)); no mean-ness guarantee.
/// Throws DomainError on arity mismatch, ParameterError for t outside (0,1).
NaryMeanFn nary_general_base(const NaryMeanFn& m, std::span<const NaryMeanFn> cs, double t);

/// K_i = C_i^t N_t^(1-t), i = 1..n. M(K_1, ..., K_n) = M holds identically.
std::vector<NaryMeanFn> nary_general_tuple(const NaryMeanFn& m, std::span<const NaryMeanFn> cs,
                                           double t);

/// The counterexample configuration M = C_1 = A, C_2 = ... = C_n = G.
std::vector<NaryMeanFn> counterexample_means(std::size_t n);

/// K_1(1, x, ..., x) / max(1, x, ..., x) in the counterexample
/// configuration; tends to n - 1 as x grows. Requires n >= 3, t in (0,1), x > 0.
double counterexample_ratio(std::size_t n, double t, double x);

/// min(v) <= F(v) <= max(v) on the ray (1, x, ..., x) and on random vectors.
ScanReport check_nary_meanness(const NaryMeanFn& f, const ScanConfig& cfg = {});

/// |M(K_1(v), ..., K_n(v)) - M(v)| / M(v) over `count` random vectors.
ScanReport check_nary_invariance(const NaryMeanFn& m, std::span<const NaryMeanFn> tuple,
                                 const ScanConfig& cfg, std::size_t count);

} // namespace invmeans
