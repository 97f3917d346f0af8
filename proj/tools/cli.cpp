#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <mzr/index.hpp>
#include <mzr/numerics.hpp>
#include <mzr/reducer.hpp>
#include <mzr/selftest.hpp>

namespace mzr::cli {

namespace {

struct usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IndexPoint point_from(const std::vector<long> &entries)
{
    if (entries.empty()) {
        throw usage("expected index entries after --");
    }
    return IndexPoint(entries);
}

PivotStrategy parse_pivot(const std::string &s)
{
    if (s == "rightmost") {
        return PivotStrategy::rightmost();
    }
    if (s == "leftmost") {
        return PivotStrategy::leftmost();
    }
    if (s.starts_with("j=")) {
        const std::string digits = s.substr(2);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const auto j = std::stoul(digits);
            if (j >= 1) {
                return PivotStrategy::at(j);
            }
        }
    }
    throw usage("--pivot must be leftmost, rightmost or j=K with K >= 1, got '" + s + "'");
}

std::optional<std::filesystem::path> cache_path(const std::string &flag)
{
    if (!flag.empty()) {
        return std::filesystem::path(flag);
    }
    if (const char *env = std::getenv(cache_env_var); env && *env) {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

std::string csv_quote(const std::string &s)
{
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + '"';
}

struct Options {
    std::vector<long> entries;
    std::string pivot = "rightmost";
    std::string format;
    bool trace = false;
    std::uint64_t truncation = EvalConfig{}.truncation;
    std::string cache;
    std::size_t depth = 0;
    long min = 0;
    long max = 0;
    std::uint32_t seed = SelftestOptions{}.seed;
};

int do_classify(const Options &o, std::ostream &out)
{
    out << classify(point_from(o.entries)).to_json() << '\n';
    return exit_code::ok;
}

int do_reduce(const Options &o, std::ostream &out)
{
    const IndexPoint p = point_from(o.entries);
    const PivotStrategy strategy = parse_pivot(o.pivot);
    Engine engine;
    const Reduction r = engine.reduce(p, strategy);
    if (o.format == "latex") {
        out << r.combination.to_latex() << '\n';
    } else if (o.format == "plain") {
        out << r.combination.to_plain() << '\n';
    } else {
        out << r.combination.to_json() << '\n';
    }
    if (o.trace) {
        out << r.trace.to_json() << '\n';
    }
    return exit_code::ok;
}

int do_eval(const Options &o, std::ostream &out)
{
    const IndexPoint p = point_from(o.entries);
    Evaluator eval(EvalConfig{o.truncation, true}, cache_path(o.cache));
    Engine engine;
    const NumericValue v = eval.eval_point(engine, p);
    out << nlohmann::ordered_json{{"value", v.value}, {"error_bound", v.error_bound}}.dump() << '\n';
    return exit_code::ok;
}

int do_table(const Options &o, std::ostream &out)
{
    if (o.depth < 1 || o.depth > 6) {
        throw usage("--depth must be between 1 and 6");
    }
    if (o.min > o.max) {
        throw usage("--min must not exceed --max");
    }
    const long width = o.max - o.min + 1;
    double count = 1;
    for (std::size_t i = 0; i < o.depth; ++i) {
        count *= static_cast<double>(width);
    }
    if (count > 1e6) {
        throw usage("table range holds more than 10^6 points");
    }

    Evaluator eval(EvalConfig{o.truncation, true}, cache_path(o.cache));
    Engine engine;
    const bool csv = o.format == "csv";
    if (csv) {
        for (std::size_t i = 1; i <= o.depth; ++i) {
            out << 'n' << i << ',';
        }
        out << "status,value,error_bound,combination\n";
    }

    std::vector<long> entries(o.depth, o.min);
    for (;;) {
        const IndexPoint p(entries);
        if (classify(p).is_regular()) {
            const MzvCombination &c = engine.value(p);
            const NumericValue v = eval.eval_combination(c);
            if (csv) {
                for (long e : entries) {
                    out << e << ',';
                }
                out << "regular," << nlohmann::json(v.value).dump() << ',' << nlohmann::json(v.error_bound).dump()
                    << ',' << csv_quote(c.to_json()) << '\n';
            } else {
                nlohmann::ordered_json rec;
                rec["point"] = entries;
                rec["status"] = "regular";
                rec["value"] = v.value;
                rec["error_bound"] = v.error_bound;
                rec["combination"] = nlohmann::ordered_json::parse(c.to_json());
                out << rec.dump() << '\n';
            }
        }
        std::size_t i = o.depth;
        while (i > 0 && entries[i - 1] == o.max) {
            entries[i - 1] = o.min;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++entries[i - 1];
    }
    return exit_code::ok;
}

int do_selftest(const Options &o, std::ostream &out)
{
    SelftestOptions opts;
    opts.seed = o.seed;
    opts.truncation = o.truncation;
    const auto results = run_selftest(opts, &out);
    std::size_t passed = 0;
    std::size_t failed = 0;
    for (const auto &r : results) {
        passed += r.passed;
        failed += r.failed;
    }
    out << "selftest: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? exit_code::ok : exit_code::selftest_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact reduction and evaluation of multiple zeta values at integer points", "mzr"};
    app.require_subcommand(1);
    Options o;

    auto add_entries = [&](CLI::App *sub) {
        sub->add_option("entries", o.entries, "index entries n1 ... nr (after --)")->required();
    };
    auto add_truncation = [&](CLI::App *sub) {
        sub->add_option("--N", o.truncation, "series truncation")->check(CLI::Range(std::uint64_t{100}, std::uint64_t{1'000'000'000}));
    };

    auto *classify_cmd = app.add_subcommand("classify", "print the regularity verdict as JSON");
    add_entries(classify_cmd);

    auto *reduce_cmd = app.add_subcommand("reduce", "reduce to a rational combination of MZVs");
    reduce_cmd->add_option("--pivot", o.pivot, "leftmost, rightmost or j=K");
    reduce_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "latex", "plain"}));
    reduce_cmd->add_flag("--trace", o.trace, "also print the reduction trace as JSON");
    add_entries(reduce_cmd);

    auto *eval_cmd = app.add_subcommand("eval", "numeric value of a regular point");
    add_truncation(eval_cmd);
    eval_cmd->add_option("--cache", o.cache, std::string("numeric cache file (default $") + cache_env_var + ")");
    add_entries(eval_cmd);

    auto *table_cmd = app.add_subcommand("table", "reduce and evaluate every regular point of a box");
    table_cmd->add_option("--depth", o.depth, "depth")->required();
    table_cmd->add_option("--min", o.min, "smallest entry")->required();
    table_cmd->add_option("--max", o.max, "largest entry")->required();
    table_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    add_truncation(table_cmd);
    table_cmd->add_option("--cache", o.cache, "numeric cache file");

    auto *selftest_cmd = app.add_subcommand("selftest", "run the invariant suites");
    o.truncation = EvalConfig{}.truncation;
    add_truncation(selftest_cmd);
    selftest_cmd->add_option("--seed", o.seed, "random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage_error;
    }

    try {
        if (classify_cmd->parsed()) {
            return do_classify(o, out);
        }
        if (reduce_cmd->parsed()) {
            return do_reduce(o, out);
        }
        if (eval_cmd->parsed()) {
            return do_eval(o, out);
        }
        if (table_cmd->parsed()) {
            return do_table(o, out);
        }
        if (selftest_cmd->parsed()) {
            if (selftest_cmd->count("--N") == 0) {
                o.truncation = SelftestOptions{}.truncation;
            }
            return do_selftest(o, out);
        }
    } catch (const SingularInput &e) {
        err << e.verdict().to_json() << '\n';
        return exit_code::singular_input;
    } catch (const RegularityViolation &e) {
        err << e.describe();
        return exit_code::regularity_violation;
    } catch (const usage &e) {
        err << "mzr: " << e.what() << '\n';
        return exit_code::usage_error;
    } catch (const std::invalid_argument &e) {
        err << "mzr: " << e.what() << '\n';
        return exit_code::usage_error;
    }
    return exit_code::usage_error;
}

} // namespace mzr::cli
