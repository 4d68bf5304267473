#include <doctest.h>

#include <cmath>
#include <random>

#include "invmeans/errors.hpp"
#include "invmeans/iterate.hpp"
#include "oracles.hpp"

using namespace invmeans;

TEST_CASE("arithmetic-harmonic iteration")
{
    const MeanPair ah = mapping(arithmetic(), harmonic(), geometric());
    const IterationTrace tr = iterate_pair(ah, 1, 4);
    CHECK(tr.converged);
    CHECK(tr.iterations <= 8);
    CHECK(std::fabs(tr.limit - 2) <= 1e-14 * 2);
    CHECK(tr.final_gap <= 1e-14);
    CHECK(tr.gap_monotone);
    CHECK(tr.iterates.front() == PositivePair{1, 4});
    CHECK(tr.iterates.size() == tr.iterations + 1);
    CHECK(tr.iterates[1].first == 2.5);
    CHECK(tr.iterates[1].second == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(tr.order_estimate == doctest::Approx(2).epsilon(0.25));

    CHECK(invariant_value_along_trajectory(ah, tr).passed);
}

TEST_CASE("diagonal start is already converged")
{
    const IterationTrace tr = iterate_pair(mapping(arithmetic(), harmonic(), geometric()), 3, 3);
    CHECK(tr.converged);
    CHECK(tr.iterations == 0);
    CHECK(tr.limit == 3);
}

TEST_CASE("projections swap forever")
{
    const IterationTrace tr = iterate_pair(mapping(proj2(), proj1(), arithmetic()), 1, 2, 1e-14, 25);
    CHECK_FALSE(tr.converged);
    CHECK(tr.iterations == 25);
    CHECK(tr.final_gap == doctest::Approx(0.5));
}

TEST_CASE("general pair converges to the target mean of the start")
{
    const MeanPair p = general_pair(arithmetic(), arithmetic(), harmonic(), 0.5);
    const IterationTrace tr = iterate_pair(p, 1, 4);
    CHECK(tr.converged);
    CHECK(std::fabs(tr.limit - 2.5) <= 1e-10 * 2.5);
    CHECK(invariant_value_along_trajectory(p, tr).passed);
}

TEST_CASE("a non-invariant target drifts along the trajectory")
{
    const MeanPair ag = mapping(arithmetic(), geometric(), geometric());
    const IterationTrace tr = iterate_pair(ag, 1, 4);
    CHECK(tr.converged);
    const ScanReport r = invariant_value_along_trajectory(ag, tr);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness[0] >= 1);
    // First step already moves G from 2 to sqrt(5).
    CHECK(r.worst_violation >= std::sqrt(5.0) / 2 - 1);
}

TEST_CASE("random strict configurations converge to M(x0, y0)")
{
    const std::vector<MeanFn> strict{arithmetic(), geometric(), harmonic(), logarithmic()};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, strict.size() - 1);
    std::uniform_real_distribution<double> tdist(0.05, 0.95);
    const auto starts = oracle::log_uniform_pairs(50, 1e-3, 1e3, 5);
    for (const auto& [x0, y0] : starts) {
        const MeanFn& m = strict[pick(rng)];
        const MeanPair p = general_pair(m, strict[pick(rng)], strict[pick(rng)], tdist(rng));
        INFO(p.label, " from ", x0, ", ", y0);
        const IterationTrace tr = iterate_pair(p, x0, y0, 1e-13, 200);
        CHECK(tr.converged);
        CHECK(tr.final_gap <= 1e-12);
        CHECK(std::fabs(tr.limit - m(x0, y0)) <= 1e-9 * m(x0, y0));
    }
}

TEST_CASE("iteration parameters are validated")
{
    const MeanPair ah = mapping(arithmetic(), harmonic(), geometric());
    CHECK_THROWS_AS(iterate_pair(ah, 0, 1), ParameterError);
    CHECK_THROWS_AS(iterate_pair(ah, 1, -2), ParameterError);
    CHECK_THROWS_AS(iterate_pair(ah, 1, INFINITY), ParameterError);
    CHECK_THROWS_AS(iterate_pair(ah, 1, 2, 0.0), ParameterError);
    CHECK_THROWS_AS(iterate_pair(ah, 1, 2, 1e-14, 0), ParameterError);
    CHECK(relative_gap(1, 4) == 0.75);
    CHECK(relative_gap(2, 2) == 0);
}
