#include <doctest.h>

#include <string>
#include <vector>

#include "invmeans/errors.hpp"
#include "invmeans/mean_spec.hpp"
#include "oracles.hpp"

using namespace invmeans;

namespace {

std::size_t parse_error_position(const std::string& text)
{
    try {
        parse_mean_spec(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for '", text, "'");
    return 0;
}

void check_same(const MeanFn& a, const MeanFn& b)
{
    for (const auto& [x, y] : oracle::log_uniform_pairs(100, 1e-3, 1e3, 9)) {
        const double u = a(x, y), v = b(x, y);
        CHECK(oracle::rel_diff(u, v) <= 1e-12);
    }
}

} // namespace

TEST_CASE("atoms")
{
    CHECK(parse_mean("arithmetic")(1, 3) == 2);
    for (const auto& m : catalog())
        CHECK(parse_mean(m.label()).label() == m.label());
    CHECK(parse_mean("power:2")(3, 4) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
    CHECK(parse_mean("power:-1")(1, 3) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(parse_mean("stolarsky:2:1")(1, 3) == doctest::Approx(2).epsilon(1e-15));
    CHECK(parse_mean("proj:lower")(1, 2) == projective_mean(lower_cone())(1, 2));
}

TEST_CASE("self-complementary base of L is a Stolarsky mean")
{
    const MeanFn mt = parse_mean("mt:logarithmic:0.5");
    const MeanFn sto = parse_mean("stolarsky:1:0.5");
    for (const auto& [x, y] : oracle::log_uniform_pairs(500, 1e-4, 1e4, 4))
        CHECK(oracle::rel_diff(mt(x, y), sto(x, y)) <= 1e-10);
}

TEST_CASE("constructor errors surface unchanged")
{
    CHECK_THROWS_AS(parse_mean_spec("stolarsky:1:1"), ParameterError);
    CHECK_THROWS_AS(parse_mean_spec("mt:arithmetic:1"), ParameterError);
    CHECK_THROWS_AS(parse_mean_spec("nt:proj1:arithmetic:harmonic:0.5"), DomainError);
    // Constructor errors are not parse errors.
    try {
        parse_mean_spec("stolarsky:0:1");
        FAIL("expected a parameter error");
    } catch (const ParseError&) {
        FAIL("parameter error reported as a parse error");
    } catch (const ParameterError&) {
    }
}

TEST_CASE("parse errors carry positions")
{
    CHECK(parse_error_position("") == 0);
    CHECK(parse_error_position("arithmetc") == 0);
    CHECK(parse_error_position("power:") == 6);
    CHECK(parse_error_position("power:abc") == 6);
    CHECK(parse_error_position("nt:arithmetic:arithmetic") == 24);
    CHECK(parse_error_position("(arithmetic") == 11);
    CHECK(parse_error_position("arithmetic)") == 10);
    CHECK(parse_error_position("pair:arithmetic:arithmetic:harmonic:0.5x") == 36);
    CHECK(parse_error_position("proj:bogus") == 5);
    CHECK(parse_error_position("k:arithmetic") == 2);
    CHECK(parse_error_position("mt:(pair:arithmetic:arithmetic:harmonic:0.5):0.5") == 3);

    try {
        parse_mean_spec("power:abc");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    }
}

TEST_CASE("means versus pairs")
{
    CHECK(std::holds_alternative<MeanFn>(parse_mean_spec("nt:arithmetic:arithmetic:harmonic:0.5")));
    CHECK(std::holds_alternative<MeanPair>(parse_mean_spec("pair:arithmetic:arithmetic:harmonic:0.5")));
    CHECK_THROWS_AS(parse_mean("pair:arithmetic:arithmetic:harmonic:0.5"), ParseError);
    CHECK_THROWS_AS(parse_pair("arithmetic"), ParseError);

    const MeanPair p = parse_pair("pair:arithmetic:arithmetic:harmonic:0.5");
    CHECK(p.k(1, 4) == doctest::Approx(25.0 / 9).epsilon(1e-14));
    CHECK(parse_mean("k:(pair:arithmetic:arithmetic:harmonic:0.5)")(1, 4) == p.k(1, 4));
    CHECK(parse_mean("l:pair:arithmetic:arithmetic:harmonic:0.5")(1, 4) == p.l(1, 4));
}

TEST_CASE("parentheses are optional around composite operands")
{
    const MeanFn a = parse_mean("nt:(power:2):(mt:logarithmic:0.5):geometric:0.3");
    const MeanFn b = parse_mean("nt:power:2:mt:logarithmic:0.5:geometric:0.3");
    const MeanFn c = parse_mean("((nt:power:2:(mt:(logarithmic):0.5):(geometric):0.3))");
    for (const auto& [x, y] : oracle::log_uniform_pairs(50, 1e-2, 1e2, 1)) {
        CHECK(a(x, y) == b(x, y));
        CHECK(a(x, y) == c(x, y));
    }
}

TEST_CASE("labels re-parse to the same function")
{
    std::vector<MeanFn> means = catalog();
    means.push_back(power(-2.5));
    means.push_back(stolarsky(StolarskyParams(3, -0.25)));
    for (const auto& cone : builtin_cones())
        means.push_back(projective_mean(cone));
    means.push_back(self_complement_base(logarithmic(), -0.75));
    means.push_back(general_base(geometric(), self_complement_base(arithmetic(), 0.2), harmonic(), 0.1));
    means.push_back(general_base(power(2), stolarsky(StolarskyParams(3, 1)), minimum(), 0.6));

    std::vector<MeanPair> pairs;
    pairs.push_back(general_pair(arithmetic(), arithmetic(), harmonic(), 0.5));
    pairs.push_back(general_pair(logarithmic(), general_base(arithmetic(), arithmetic(), harmonic(), 0.5),
                                 proj2(), 0.9));
    pairs.push_back(xy_pair(arithmetic(), 0.5));
    pairs.push_back(xy_pair(geometric(), -0.3, complement_cone(lower_cone())));
    pairs.push_back(log_pair(0.4, mixed_cone()));
    pairs.push_back(mapping(arithmetic(), harmonic(), geometric()));
    for (const auto& p : pairs) {
        means.push_back(p.k);
        means.push_back(p.l);
    }

    for (const auto& m : means) {
        INFO(m.label());
        const MeanFn back = parse_mean(m.label());
        CHECK(back.label() == m.label());
        CHECK(back.flags() == m.flags());
        check_same(m, back);
    }
    for (const auto& p : pairs) {
        INFO(p.label);
        const MeanPair back = parse_pair(p.label);
        CHECK(back.label == p.label);
        check_same(p.k, back.k);
        check_same(p.l, back.l);
        check_same(p.target, back.target);
    }
}
