#include "invmeans/mean_spec.hpp"

#include <charconv>
#include <string>

#include <fmt/format.h>

#include "invmeans/errors.hpp"
#include "invmeans/projective.hpp"

namespace invmeans {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SpecValue parse_all()
    {
        SpecValue value = operand();
        if (pos_ != text_.size())
            fail(fmt::format("unexpected '{}'", text_[pos_]));
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }

    // A field runs up to the next ':' or ')' at the current nesting level.
    std::string_view field()
    {
        const std::size_t start = pos_;
        while (!at_end() && text_[pos_] != ':' && text_[pos_] != ')' && text_[pos_] != '(')
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void expect_colon()
    {
        if (at_end() || text_[pos_] != ':')
            fail("expected ':'");
        ++pos_;
    }

    double number()
    {
        const std::size_t start = pos_;
        const std::string_view f = field();
        double v = 0;
        const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (f.empty() || ec != std::errc{} || end != f.data() + f.size()) {
            pos_ = start;
            fail(fmt::format("expected a number, got '{}'", f));
        }
        return v;
    }

    ConeSet cone()
    {
        const std::size_t start = pos_;
        const std::string_view name = field();
        try {
            return builtin_cone(name);
        } catch (const ConfigError&) {
            pos_ = start;
            fail(fmt::format("unknown cone set '{}'", name));
        }
    }

    MeanFn mean_operand()
    {
        const std::size_t start = pos_;
        SpecValue v = operand();
        if (auto* m = std::get_if<MeanFn>(&v))
            return *m;
        pos_ = start;
        fail("expected a mean, got a pair");
    }

    MeanPair pair_operand()
    {
        const std::size_t start = pos_;
        SpecValue v = operand();
        if (auto* p = std::get_if<MeanPair>(&v))
            return *p;
        pos_ = start;
        fail("expected a pair, got a mean");
    }

    SpecValue operand()
    {
        if (!at_end() && text_[pos_] == '(') {
            ++pos_;
            SpecValue inner = operand();
            if (at_end() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        const std::size_t start = pos_;
        const std::string_view head = field();
        if (head.empty())
            fail("expected a mean specification");

        if (head == "power") {
            expect_colon();
            return power(number());
        }
        if (head == "stolarsky") {
            expect_colon();
            const double r = number();
            expect_colon();
            const double s = number();
            return stolarsky(StolarskyParams(r, s));
        }
        if (head == "proj") {
            expect_colon();
            return projective_mean(cone());
        }
        if (head == "mt") {
            expect_colon();
            const MeanFn m = mean_operand();
            expect_colon();
            return self_complement_base(m, number());
        }
        if (head == "nt" || head == "pair") {
            expect_colon();
            const MeanFn m = mean_operand();
            expect_colon();
            const MeanFn c = mean_operand();
            expect_colon();
            const MeanFn d = mean_operand();
            expect_colon();
            const double t = number();
            if (head == "nt")
                return general_base(m, c, d, t);
            return general_pair(m, c, d, t);
        }
        if (head == "xypair") {
            expect_colon();
            const MeanFn m = mean_operand();
            expect_colon();
            const double t = number();
            expect_colon();
            return xy_pair(m, t, cone());
        }
        if (head == "logpair") {
            expect_colon();
            const double t = number();
            expect_colon();
            return log_pair(t, cone());
        }
        if (head == "mapping") {
            expect_colon();
            const MeanFn k = mean_operand();
            expect_colon();
            const MeanFn l = mean_operand();
            expect_colon();
            return mapping(k, l, mean_operand());
        }
        if (head == "k" || head == "l") {
            expect_colon();
            const MeanPair p = pair_operand();
            return head == "k" ? first_of(p) : second_of(p);
        }
        try {
            return classical(head);
        } catch (const ConfigError&) {
            pos_ = start;
            fail(fmt::format("unknown mean '{}'", head));
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SpecValue parse_mean_spec(std::string_view text) { return Parser(text).parse_all(); }

MeanFn parse_mean(std::string_view text)
{
    SpecValue v = parse_mean_spec(text);
    if (auto* m = std::get_if<MeanFn>(&v))
        return *m;
    throw ParseError(fmt::format("'{}' is a pair, expected a mean", text), 0);
}

MeanPair parse_pair(std::string_view text)
{
    SpecValue v = parse_mean_spec(text);
    if (auto* p = std::get_if<MeanPair>(&v))
        return *p;
    throw ParseError(fmt::format("'{}' is a mean, expected a pair", text), 0);
}

} // namespace invmeans
