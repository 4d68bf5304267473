#include "invmeans/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "invmeans/complement.hpp"
#include "invmeans/errors.hpp"
#include "invmeans/iterate.hpp"
#include "invmeans/mean_spec.hpp"
#include "invmeans/multivar.hpp"
#include "invmeans/verify.hpp"

namespace invmeans::cli {

namespace {

using nlohmann::json;

// 17 significant digits round-trip every double.
std::string num(double v) { return fmt::format("{:.17g}", v); }

struct GlobalOptions {
    std::string grid;
    double tol = ScanConfig{}.rel_tol;
    std::uint64_t seed = 0;
    bool json = false;
};

double parse_double(std::string_view text, const char* what)
{
    double v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw ConfigError(fmt::format("bad {} '{}'", what, text));
    return v;
}

// Tables only need two points per axis; scans use ScanConfig::validate.
ScanConfig make_config(const GlobalOptions& g, bool table = false)
{
    ScanConfig cfg;
    cfg.rel_tol = g.tol;
    cfg.seed = g.seed;
    if (!g.grid.empty()) {
        const auto a = g.grid.find(':');
        const auto b = g.grid.find(':', a == std::string::npos ? a : a + 1);
        if (a == std::string::npos || b == std::string::npos)
            throw ConfigError(fmt::format("--grid expects lo:hi:n, got '{}'", g.grid));
        cfg.lower = parse_double(std::string_view(g.grid).substr(0, a), "grid lower bound");
        cfg.upper = parse_double(std::string_view(g.grid).substr(a + 1, b - a - 1),
                                 "grid upper bound");
        const double n = parse_double(std::string_view(g.grid).substr(b + 1), "grid size");
        if (n != std::floor(n) || n > 1e5)
            throw ConfigError(fmt::format("grid size '{}' must be an integer", n));
        cfg.points_per_axis = static_cast<int>(n);
    }
    if (!table) {
        cfg.validate();
    } else if (!(cfg.lower > 0 && cfg.lower <= cfg.upper && std::isfinite(cfg.upper)) ||
               cfg.points_per_axis < 2) {
        throw ConfigError(fmt::format("bad table grid '{}'", g.grid));
    }
    return cfg;
}

std::string grid_text(const ScanConfig& cfg)
{
    return fmt::format("{}:{}:{}", format_number(cfg.lower), format_number(cfg.upper),
                       cfg.points_per_axis);
}

json witness_json(const std::vector<double>& w)
{
    json arr = json::array();
    for (const double v : w)
        arr.push_back(v);
    return arr;
}

void print_report(std::ostream& out, const std::string& what, const std::string& spec,
                  const ScanReport& r, const ScanConfig& cfg, bool as_json)
{
    if (as_json) {
        json j{{"check", what},
               {"spec", spec},
               {"passed", r.passed},
               {"worst_violation", r.worst_violation},
               {"witness", witness_json(r.witness)},
               {"samples", r.samples_checked},
               {"seed", cfg.seed},
               {"grid", grid_text(cfg)},
               {"tol", cfg.rel_tol},
               {"note", r.note}};
        out << j.dump() << '\n';
        return;
    }
    out << fmt::format("# check={} seed={} grid={} tol={}\n", what, cfg.seed, grid_text(cfg),
                       format_number(cfg.rel_tol));
    out << fmt::format("spec: {}\n", spec);
    std::string witness;
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        witness += (i ? ", " : "") + num(r.witness[i]);
    out << fmt::format("{} worst_violation={} witness=({}) samples={}\n",
                       r.passed ? "PASS" : "FAIL", num(r.worst_violation), witness,
                       r.samples_checked);
    if (!r.note.empty())
        out << "note: " << r.note << '\n';
}

int cmd_eval(const std::string& spec, double x, double y, std::ostream& out)
{
    const SpecValue value = parse_mean_spec(spec);
    if (const auto* m = std::get_if<MeanFn>(&value)) {
        out << num((*m)(x, y)) << '\n';
    } else {
        const auto [k, l] = std::get<MeanPair>(value).apply(x, y);
        out << num(k) << ',' << num(l) << '\n';
    }
    return kExitOk;
}

int cmd_check(const std::string& what, const std::string& spec, const GlobalOptions& g,
              std::ostream& out)
{
    const ScanConfig cfg = make_config(g);
    const SpecValue value = parse_mean_spec(spec);
    const auto* pair = std::get_if<MeanPair>(&value);
    const auto* mean = std::get_if<MeanFn>(&value);

    ScanReport report;
    if (what == "invariance") {
        if (!pair)
            throw ConfigError("--what invariance needs a pair spec");
        report = check_invariance(*pair, cfg);
    } else if (what == "mean") {
        report = pair ? check_pair_meanness(*pair, cfg) : check_meanness(*mean, cfg);
    } else {
        if (!mean)
            throw ConfigError(fmt::format("--what {} needs a single mean, not a pair", what));
        if (what == "trace")
            report = check_trace_meanness(*mean, cfg);
        else if (what == "monotone")
            report = check_monotone_trace(*mean, cfg);
        else
            report = check_flags(*mean, cfg);
    }
    print_report(out, what, spec, report, cfg, g.json);
    return report.passed ? kExitOk : kExitCheckFailed;
}

std::vector<PositivePair> table_points(const GlobalOptions& g)
{
    ScanConfig cfg = make_config(g, true);
    if (g.grid.empty()) {
        cfg.lower = 0.1;
        cfg.upper = 10;
        cfg.points_per_axis = 5;
    }
    std::vector<PositivePair> pts;
    const int n = cfg.points_per_axis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double a = std::log(cfg.lower);
            const double b = std::log(cfg.upper);
            pts.emplace_back(std::exp(a + (b - a) * i / (n - 1)), std::exp(a + (b - a) * j / (n - 1)));
        }
    return pts;
}

int cmd_complement(const std::string& m_spec, const std::optional<std::string>& c_spec,
                   const std::optional<std::string>& d_spec, double t,
                   const std::optional<std::string>& cone_name, bool csv, const GlobalOptions& g,
                   std::ostream& out)
{
    if (c_spec.has_value() != d_spec.has_value())
        throw ConfigError("--c and --d must be given together");
    if (c_spec && cone_name)
        throw ConfigError("--cone applies only without --c/--d");
    const MeanFn m = parse_mean(m_spec);
    const MeanPair pair = c_spec ? general_pair(m, parse_mean(*c_spec), parse_mean(*d_spec), t)
                                 : xy_pair(m, t, builtin_cone(cone_name.value_or("full")));

    if (csv) {
        out << "x,y,K,L,M(K;L),M(x;y),residual\n";
    } else {
        out << "pair: " << pair.label << '\n' << pair.formula << '\n';
        out << fmt::format("{:>24} {:>24} {:>24} {:>24} {:>24} {:>24} {:>12}\n", "x", "y", "K",
                           "L", "M(K,L)", "M(x,y)", "residual");
    }
    for (const auto& [x, y] : table_points(g)) {
        const auto [k, l] = pair.apply(x, y);
        const double after = pair.target(k, l);
        const double before = pair.target(x, y);
        const double residual = (after - before) / before;
        if (csv)
            out << fmt::format("{},{},{},{},{},{},{}\n", num(x), num(y), num(k), num(l),
                               num(after), num(before), num(residual));
        else
            out << fmt::format("{:>24} {:>24} {:>24} {:>24} {:>24} {:>24} {:>12.3e}\n", num(x),
                               num(y), num(k), num(l), num(after), num(before), residual);
    }
    return kExitOk;
}

int cmd_iterate(const std::string& spec, double x0, double y0, double stop, std::size_t max_iter,
                bool csv, bool as_json, std::ostream& out)
{
    const MeanPair pair = parse_pair(spec);
    const IterationTrace trace = iterate_pair(pair, x0, y0, stop, max_iter);
    if (csv) {
        out << "n,x_n,y_n,gap,M(x_n;y_n)\n";
        for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
            const auto [x, y] = trace.iterates[n];
            out << fmt::format("{},{},{},{},{}\n", n, num(x), num(y), num(relative_gap(x, y)),
                               num(pair.target(x, y)));
        }
        return kExitOk;
    }
    if (as_json) {
        json j{{"pair", pair.label},
               {"converged", trace.converged},
               {"iterations", trace.iterations},
               {"limit", trace.limit},
               {"final_gap", trace.final_gap},
               {"gap_monotone", trace.gap_monotone},
               {"target_at_start", pair.target(x0, y0)}};
        j["order_estimate"] = std::isfinite(trace.order_estimate) ? json(trace.order_estimate)
                                                                  : json(nullptr);
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "pair: " << pair.label << '\n';
    out << fmt::format("converged={} iterations={} limit={} final_gap={} gap_monotone={}\n",
                       trace.converged, trace.iterations, num(trace.limit), num(trace.final_gap),
                       trace.gap_monotone);
    out << fmt::format("target M(x0,y0)={} order_estimate={}\n", num(pair.target(x0, y0)),
                       num(trace.order_estimate));
    return kExitOk;
}

int cmd_counterexample(std::size_t n, double t, double x, bool as_json, std::ostream& out)
{
    const double ratio = counterexample_ratio(n, t, x);
    const double limit = static_cast<double>(n) - 1;
    if (as_json)
        out << json{{"n", n}, {"t", t}, {"x", x}, {"ratio", ratio}, {"limit", limit}}.dump()
            << '\n';
    else
        out << fmt::format("ratio={}\nlimit={}\n", num(ratio), num(limit));
    return kExitOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complementary means: construction and verification", "meanctl"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--grid", g.grid, "Scan grid lo:hi:n (log-spaced)");
    app.add_option("--tol", g.tol, "Relative tolerance for checks");
    app.add_option("--seed", g.seed, "Seed for random samples");
    app.add_flag("--json", g.json, "JSON output");

    std::string mean_spec;
    std::string pair_spec;
    double x = 0;
    double y = 0;
    auto* eval = app.add_subcommand("eval", "Evaluate a mean (or pair) at one point");
    eval->add_option("--mean", mean_spec, "Mean spec")->required();
    eval->add_option("--x", x)->required()->check(CLI::PositiveNumber);
    eval->add_option("--y", y)->required()->check(CLI::PositiveNumber);

    std::string what;
    auto* check = app.add_subcommand("check", "Verify a property by scanning");
    check->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"mean", "trace", "monotone", "invariance", "flags"}));
    auto* check_mean = check->add_option("--mean", mean_spec, "Mean spec");
    auto* check_pair = check->add_option("--pair", pair_spec, "Pair spec");
    check_mean->excludes(check_pair);

    std::optional<std::string> c_spec;
    std::optional<std::string> d_spec;
    std::optional<std::string> cone_name;
    double t = 0;
    std::string emit;
    auto* complement = app.add_subcommand("complement", "Build a complementary pair");
    complement->add_option("--mean", mean_spec, "Target mean M")->required();
    complement->add_option("--c", c_spec, "Mean C");
    complement->add_option("--d", d_spec, "Mean D");
    complement->add_option("--t", t)->required();
    complement->add_option("--cone", cone_name, "Cone set for the projective pair");
    complement->add_option("--emit", emit)->check(CLI::IsMember({"csv"}));

    double x0 = 0;
    double y0 = 0;
    double stop = 1e-14;
    std::size_t max_iter = 200;
    auto* iterate = app.add_subcommand("iterate", "Iterate a mean-type mapping");
    iterate->add_option("--pair", pair_spec, "Pair spec")->required();
    iterate->add_option("--x0", x0)->required();
    iterate->add_option("--y0", y0)->required();
    iterate->add_option("--stop", stop, "Relative gap at which to stop");
    iterate->add_option("--max-iter", max_iter);
    iterate->add_option("--emit", emit)->check(CLI::IsMember({"csv"}));

    std::size_t n = 3;
    double cx = 0;
    auto* counter = app.add_subcommand("counterexample", "n-variable counterexample ratio");
    counter->add_option("--n", n)->required();
    counter->add_option("--t", t)->required();
    counter->add_option("--x", cx)->required();

    std::vector<const char*> argv{"meanctl"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "meanctl: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*eval)
            return cmd_eval(mean_spec, x, y, out);
        if (*check) {
            if (mean_spec.empty() && pair_spec.empty())
                throw ConfigError("check needs --mean or --pair");
            return cmd_check(what, mean_spec.empty() ? pair_spec : mean_spec, g, out);
        }
        if (*complement)
            return cmd_complement(mean_spec, c_spec, d_spec, t, cone_name, emit == "csv", g,
                                  out);
        if (*iterate)
            return cmd_iterate(pair_spec, x0, y0, stop, max_iter, emit == "csv", g.json, out);
        if (*counter)
            return cmd_counterexample(n, t, cx, g.json, out);
    } catch (const MeanError& e) {
        err << "meanctl: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace invmeans::cli
