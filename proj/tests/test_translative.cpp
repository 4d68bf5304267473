#include <doctest.h>

#include <cmath>
#include <random>

#include "invmeans/complement.hpp"
#include "invmeans/errors.hpp"
#include "invmeans/translative.hpp"

using namespace invmeans;

namespace {

std::vector<std::pair<double, double>> real_pairs(std::size_t n, double bound, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-bound, bound);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u(rng);
        out.emplace_back(x, u(rng));
    }
    return out;
}

} // namespace

TEST_CASE("conjugates of classical means")
{
    const RealMeanFn g = translative_conjugate(geometric());
    for (const auto& [x, y] : real_pairs(2000, 300, 1))
        CHECK(std::fabs(g(x, y) - (x + y) / 2) <= 1e-13 * std::max(1.0, std::fabs(x + y)));
    CHECK(g.flags().translative);

    const RealMeanFn a = translative_conjugate(arithmetic());
    CHECK(std::fabs(a(0, std::log(3.0)) - std::log(2.0)) < 1e-15);
    CHECK(a(1.25, 1.25) == 1.25);
    CHECK(translative_conjugate(logarithmic())(-3, -3) == -3);
}

TEST_CASE("conjugation turns homogeneity into translativity")
{
    for (const auto& m : {logarithmic(), harmonic(), power(3)}) {
        const RealMeanFn n = translative_conjugate(m);
        for (const auto& [x, y] : real_pairs(500, 20, 2))
            for (const double tau : {-5.0, 0.5, 11.0})
                CHECK(std::fabs(n(x + tau, y + tau) - n(x, y) - tau) < 1e-12);
    }
    const MeanFn inhomogeneous = projective_mean(mixed_cone());
    CHECK_FALSE(translative_conjugate(inhomogeneous).flags().translative);
}

TEST_CASE("conjugate argument range")
{
    const RealMeanFn n = translative_conjugate(arithmetic());
    CHECK_NOTHROW(n(700, -700));
    CHECK_THROWS_AS(n(700.5, 0), RangeError);
    CHECK_THROWS_AS(n(0, -1e4), RangeError);
    CHECK_THROWS_AS(n(NAN, 0), RangeError);
}

TEST_CASE("translative pair of the arithmetic mean is a weighted-mean family")
{
    for (const double t : {-0.5, 0.0, 0.5, 0.9}) {
        const RealMeanPair p = translative_pair(arithmetic_on_reals(), t);
        CHECK(std::fabs(p.k(1, 0) - (1 + t) / 2) < 1e-15);
        CHECK(std::fabs(p.k(0, 1) - (1 - t) / 2) < 1e-15);
        CHECK(std::fabs(p.l(1, 0) - (1 - t) / 2) < 1e-15);
        CHECK(std::fabs(p.l(0, 1) - (1 + t) / 2) < 1e-15);
    }
    const RealMeanPair half = translative_pair(arithmetic_on_reals(), 0.5);
    CHECK(half.k(0, 4) == 1);
    CHECK(half.l(0, 4) == 3);
    CHECK(arithmetic_on_reals()(half.k(0, 4), half.l(0, 4)) == 2);

    const RealMeanPair zero = translative_pair(arithmetic_on_reals(), 0.0);
    for (const auto& [x, y] : real_pairs(100, 50, 3)) {
        CHECK(zero.k(x, y) == doctest::Approx(x / 2 + y / 2).epsilon(1e-15));
        CHECK(zero.l(x, y) == doctest::Approx(x / 2 + y / 2).epsilon(1e-15));
    }
}

TEST_CASE("translative pair preconditions")
{
    CHECK_THROWS_AS(translative_pair(arithmetic_on_reals(), 1.0), ParameterError);
    CHECK_THROWS_AS(translative_pair(arithmetic_on_reals(), -1.5), ParameterError);
    CHECK_THROWS_AS(translative_pair(translative_conjugate(proj1()), 0.5), DomainError);
    CHECK_THROWS_AS(translative_pair(translative_conjugate(projective_mean(mixed_cone())), 0.5),
                    DomainError);
}

TEST_CASE("translative pair is the conjugate of the xy pair")
{
    for (const auto& m : {logarithmic(), power(2), harmonic()})
        for (const double t : {-0.6, 0.3, 0.8}) {
            const RealMeanFn n = translative_conjugate(m);
            const RealMeanPair tp = translative_pair(n, t);
            const MeanPair xy = xy_pair(m, t);
            for (const auto& [x, y] : real_pairs(300, 10, 4)) {
                CHECK(std::fabs(tp.k(x, y) - std::log(xy.k(std::exp(x), std::exp(y)))) < 1e-12);
                CHECK(std::fabs(tp.l(x, y) - std::log(xy.l(std::exp(x), std::exp(y)))) < 1e-12);
                CHECK(std::fabs(n(tp.k(x, y), tp.l(x, y)) - n(x, y)) < 1e-12);
            }
        }
}
