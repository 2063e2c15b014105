#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "algokit/asymptotics/bench.hpp"
#include "algokit/asymptotics/classify.hpp"
#include "algokit/asymptotics/expr.hpp"
#include "algokit/classics.hpp"
#include "algokit/error.hpp"
#include "algokit/exercises.hpp"
#include "algokit/nested_sort.hpp"
#include "algokit/search.hpp"
#include "algokit/sort.hpp"
#include "algokit/tabular/chart.hpp"
#include "algokit/tabular/csv.hpp"
#include "algokit/tabular/migration.hpp"
#include "algokit/tabular/ops.hpp"
#include "algokit/tabular/script.hpp"

namespace algokit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Wrong arity or an unknown operand discovered after option parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::int64_t parse_int(std::string_view token, std::string_view what = "integer") {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
    return v;
}

/// Integers separated by any mix of whitespace and commas.
inline KeySequence parse_sequence(std::string_view text) {
    KeySequence out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i > start) {
            try {
                out.push_back(parse_int(text.substr(start, i - start)));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), start);
            }
        }
    }
    return out;
}

inline std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Contents of `path`, or all of `in` when the path is empty or "-".
inline std::string read_source(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_all(in);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    return read_all(file);
}

/// Runs `write` against `path`, or against `out` when no path is given.
inline void write_target(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path + " for writing");
    write(file);
    file.flush();
    if (!file) throw Error("failed writing " + path);
}

/// ALGOKIT_SEED when set, else `fallback`.
inline std::uint64_t default_seed(std::uint64_t fallback) {
    const char* env = std::getenv("ALGOKIT_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError("ALGOKIT_SEED is not an unsigned integer");
    return v;
}

template <class Range>
std::string python_list(const Range& xs) {
    std::string out = "[";
    bool first = true;
    for (const auto& x : xs) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(x);
    }
    return out + "]";
}

/// Every golden case: library examples plus the CLI transcripts.
inline std::vector<GoldenCase> all_golden_cases();

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

namespace detail {

inline std::string run_captured(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(std::move(args), in, out, err);
    return out.str() + (code == 0 ? "" : "[exit " + std::to_string(code) + "]");
}

inline void expect_arity(const std::vector<std::string>& args, std::size_t n, std::string_view op) {
    if (args.size() != n)
        throw UsageError(std::string(op) + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
}

inline classics::Matrix parse_matrix(std::string_view text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (;;) {
        const auto at = text.find(';');
        rows.push_back(parse_sequence(text.substr(0, at)));
        if (at == std::string_view::npos) break;
        text.remove_prefix(at + 1);
    }
    return classics::Matrix::from_rows(rows);
}

inline void print_matrix(std::ostream& out, const classics::Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

inline const std::vector<std::string>& classics_ops() {
    static const std::vector<std::string> ops{
        "factorial",     "fibonacci",     "power",          "sum_of_digits",     "gcd",
        "sum_list",      "is_even",       "is_odd",         "divisible_by",      "is_prime",
        "prime_factors", "sum_primes",    "primes_up_to",   "reverse_shift",     "ascii_sum",
        "is_palindrome", "digits_to_list", "list_to_digits", "hanoi",            "grid_paths",
        "transpose",     "matmul",        "character_pyramid", "star_pyramid",   "multiplication_table",
        "iter_suite",    "sort_text",     "deep_bubble_sort"};
    return ops;
}

inline void run_classic(const std::string& op, const std::vector<std::string>& a, classics::Mode mode,
                        std::ostream& out) {
    using namespace algokit::classics;
    auto int_arg = [&](std::size_t i) { return parse_int(a[i], op + " argument"); };
    auto all_ints = [&] {
        std::vector<std::int64_t> xs;
        for (const auto& s : a) {
            const auto part = parse_sequence(s);
            xs.insert(xs.end(), part.begin(), part.end());
        }
        return xs;
    };
    auto text_arg = [&] {
        expect_arity(a, 1, op);
        return a[0];
    };

    if (op == "factorial") {
        expect_arity(a, 1, op);
        out << factorial(int_arg(0), mode) << '\n';
    } else if (op == "fibonacci") {
        expect_arity(a, 1, op);
        out << fibonacci(int_arg(0), mode) << '\n';
    } else if (op == "power") {
        expect_arity(a, 2, op);
        out << power(int_arg(0), int_arg(1)) << '\n';
    } else if (op == "sum_of_digits") {
        expect_arity(a, 1, op);
        out << sum_of_digits(int_arg(0)) << '\n';
    } else if (op == "gcd") {
        expect_arity(a, 2, op);
        out << gcd(int_arg(0), int_arg(1)) << '\n';
    } else if (op == "sum_list") {
        const auto xs = all_ints();
        out << sum_list(xs) << '\n';
    } else if (op == "is_even") {
        expect_arity(a, 1, op);
        out << bool_text(is_even(int_arg(0))) << '\n';
    } else if (op == "is_odd") {
        expect_arity(a, 1, op);
        out << bool_text(is_odd(int_arg(0))) << '\n';
    } else if (op == "divisible_by") {
        expect_arity(a, 2, op);
        out << bool_text(divisible_by(int_arg(0), int_arg(1))) << '\n';
    } else if (op == "is_prime") {
        expect_arity(a, 1, op);
        out << bool_text(is_prime(int_arg(0))) << '\n';
    } else if (op == "prime_factors") {
        expect_arity(a, 1, op);
        out << python_list(prime_factors(int_arg(0))) << '\n';
    } else if (op == "sum_primes") {
        const auto xs = all_ints();
        out << sum_primes(xs) << '\n';
    } else if (op == "primes_up_to") {
        expect_arity(a, 1, op);
        out << python_list(primes_up_to(int_arg(0))) << '\n';
    } else if (op == "reverse_shift") {
        out << reverse_shift(text_arg()) << '\n';
    } else if (op == "ascii_sum") {
        out << ascii_sum(text_arg()) << '\n';
    } else if (op == "is_palindrome") {
        out << bool_text(is_palindrome(text_arg(), mode)) << '\n';
    } else if (op == "digits_to_list") {
        out << python_list(digits_to_list(text_arg())) << '\n';
    } else if (op == "list_to_digits") {
        std::vector<int> ds;
        for (std::int64_t x : all_ints()) {
            if (x < 0 || x > 9) throw DomainError("list_to_digits needs digits 0..9");
            ds.push_back(static_cast<int>(x));
        }
        out << list_to_digits(ds) << '\n';
    } else if (op == "hanoi") {
        expect_arity(a, 1, op);
        const auto n = int_arg(0);
        if (n < 1 || n > max_hanoi_disks) throw DomainError("hanoi needs 1 to 20 disks");
        for (const Move& m : hanoi(static_cast<int>(n))) out << to_string(m) << '\n';
    } else if (op == "grid_paths") {
        expect_arity(a, 2, op);
        const auto m = int_arg(0), n = int_arg(1);
        if (m < 1 || n < 1 || m + n > max_grid_path_steps) throw DomainError("grid_paths needs m, n >= 1 and m + n <= 16");
        for (const auto& p : grid_paths(static_cast<int>(m), static_cast<int>(n))) out << p << '\n';
    } else if (op == "transpose") {
        print_matrix(out, transpose(parse_matrix(text_arg())));
    } else if (op == "matmul") {
        expect_arity(a, 2, op);
        print_matrix(out, matmul(parse_matrix(a[0]), parse_matrix(a[1])));
    } else if (op == "character_pyramid") {
        expect_arity(a, 2, op);
        const auto n = int_arg(0);
        if (n < 0 || n > 1000) throw DomainError("pyramid height must be in 0..1000");
        out << character_pyramid(static_cast<int>(n), a[1]) << '\n';
    } else if (op == "star_pyramid") {
        expect_arity(a, 1, op);
        const auto n = int_arg(0);
        if (n < 0 || n > 1000) throw DomainError("pyramid height must be in 0..1000");
        out << star_pyramid(static_cast<int>(n)) << '\n';
    } else if (op == "multiplication_table") {
        expect_arity(a, 1, op);
        const auto n = int_arg(0);
        if (n < 1 || n > 1000) throw DomainError("table size must be in 1..1000");
        out << multiplication_table(static_cast<int>(n)) << '\n';
    } else if (op == "iter_suite") {
        expect_arity(a, 1, op);
        const IterSummary s = iter_suite(int_arg(0));
        out << "sum=" << s.sum << "\nevens=" << python_list(s.evens) << "\nsum_of_squares=" << s.sum_of_squares
            << "\ncountdown=\n"
            << s.countdown << '\n';
    } else if (op == "sort_text") {
        out << sort_text(text_arg()) << '\n';
    } else if (op == "deep_bubble_sort") {
        out << to_string(deep_bubble_sort(parse_nested(text_arg()))) << '\n';
    } else {
        throw UsageError("unknown classics operation: " + op);
    }
}

inline std::string format_constant(double c) {
    std::ostringstream s;
    s << c;
    return s.str();
}

inline void print_verdict(std::ostream& out, const asymptotics::GrowthVerdict& v) {
    using asymptotics::Bound;
    out << "relations: " << v.relations.to_string() << '\n' << "ratio: " << to_string(v.ratio) << '\n';
    auto witness = [&](std::string_view name, Bound b, const std::optional<asymptotics::Witness>& w) {
        if (!asymptotics::admits(v, b)) return;
        out << name << " witness: ";
        if (w) {
            out << "c=" << format_constant(w->c) << " n0=" << w->n0 << '\n';
        } else {
            out << "none found\n";
        }
    };
    witness("upper", Bound::upper, v.upper);
    witness("lower", Bound::lower, v.lower);
}

}  // namespace detail

/// Dispatches one command line (program name excluded). Exit 0 on success, 1 on a
/// domain or I/O error reported on `err`, 2 on a usage error.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Instrumented algorithms, asymptotic checks and a small table engine", "algokit"};
    app.require_subcommand(1);

    // sort
    auto* sort_cmd = app.add_subcommand("sort", "Sort an integer sequence read from a file or standard input");
    std::vector<std::string> sort_ids;
    for (SortAlgorithm a : all_sort_algorithms) sort_ids.emplace_back(to_string(a));
    std::string sort_algo;
    std::optional<std::uint64_t> sort_seed;
    bool sort_stats = false;
    std::string sort_file;
    sort_cmd->add_option("--algo", sort_algo, "Algorithm")->required()->check(CLI::IsMember(sort_ids));
    sort_cmd->add_option("--seed", sort_seed, "Seed for randomized pivots (default: ALGOKIT_SEED or 42)");
    sort_cmd->add_flag("--stats", sort_stats, "Print comparisons, swaps/moves and passes");
    sort_cmd->add_option("file", sort_file, "Input file (default: standard input)");

    // search
    auto* search_cmd = app.add_subcommand("search", "Search an integer sequence; prints the index or -1");
    std::string search_algo;
    std::int64_t search_target = 0;
    bool verify_sorted = false;
    std::string search_file;
    search_cmd->add_option("--algo", search_algo, "linear or binary")
        ->required()
        ->check(CLI::IsMember({"linear", "binary"}));
    search_cmd->add_option("--target", search_target, "Key to look for")->required();
    search_cmd->add_flag("--verify-sorted", verify_sorted, "Reject unsorted input before a binary search");
    search_cmd->add_option("file", search_file, "Input file (default: standard input)");

    // classics
    auto* classics_cmd = app.add_subcommand("classics", "Recursion and iteration exercises");
    std::string classic_op;
    std::vector<std::string> classic_args;
    std::string classic_mode = "default";
    classics_cmd->add_option("op", classic_op, "Operation")->required()->check(CLI::IsMember(detail::classics_ops()));
    classics_cmd->allow_extras();  // operands are taken verbatim, so "[[2,1],[0]]" stays one argument
    classics_cmd->add_option("--mode", classic_mode, "recursive or iterative")
        ->check(CLI::IsMember({"default", "recursive", "iterative"}));
    classics_cmd->positionals_at_end(false);

    // growth
    auto* growth_cmd = app.add_subcommand("growth", "Asymptotic relations between growth expressions");
    growth_cmd->require_subcommand(1);
    auto* classify_cmd = growth_cmd->add_subcommand("classify", "Relation set and witnesses for f against g");
    std::string growth_f, growth_g;
    classify_cmd->add_option("--f", growth_f, "Expression f(n)")->required();
    classify_cmd->add_option("--g", growth_g, "Expression g(n)")->required();
    auto* check_cmd = growth_cmd->add_subcommand("check", "Check f <= c*g (upper) or f >= c*g (lower) for n >= n0");
    std::string check_bound = "upper";
    double check_c = 1.0;
    std::uint64_t check_n0 = 1;
    std::uint64_t check_n_max = asymptotics::default_witness_horizon;
    check_cmd->add_option("--f", growth_f, "Expression f(n)")->required();
    check_cmd->add_option("--g", growth_g, "Expression g(n)")->required();
    check_cmd->add_option("--bound", check_bound, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
    check_cmd->add_option("--c", check_c, "Constant c")->required();
    check_cmd->add_option("--n0", check_n0, "Threshold n0")->required();
    check_cmd->add_option("--n-max", check_n_max, "Largest n sampled");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time an algorithm over input sizes and write n,seconds,reps rows");
    std::string bench_algo;
    std::vector<std::uint64_t> bench_sizes{512, 1024, 2048, 4096};
    std::string bench_dist = "random";
    std::uint64_t bench_reps = 5;
    std::optional<std::uint64_t> bench_seed;
    std::string bench_out;
    bench_cmd->add_option("--algo", bench_algo, "Algorithm identifier")->check(CLI::IsMember(asymptotics::bench_algorithms()));
    bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated sizes")->delimiter(',');
    bench_cmd->add_option("--dist", bench_dist, "Input distribution")
        ->check(CLI::IsMember({"random", "sorted", "reversed", "nearly-sorted"}));
    bench_cmd->add_option("--reps", bench_reps, "Measured repetitions per size");
    bench_cmd->add_option("--seed", bench_seed, "Input seed (default: ALGOKIT_SEED or 42)");
    bench_cmd->add_option("--out", bench_out, "Output CSV (default: standard output)");
    auto* fit_cmd = bench_cmd->add_subcommand("fit", "Log-log slope of a benchmark CSV");
    std::string fit_in;
    fit_cmd->add_option("--in", fit_in, "Benchmark CSV")->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "Queries over CSV tables");
    table_cmd->require_subcommand(1);
    std::string table_csv, table_out;
    auto* query_cmd = table_cmd->add_subcommand("query", "Run a migration preset");
    std::string preset;
    std::string year = "2000";
    query_cmd->add_option("--csv", table_csv, "Input CSV")->required();
    query_cmd->add_option("--preset", preset, "q1, q2, q3 or q4")->required()->check(CLI::IsMember({"q1", "q2", "q3", "q4"}));
    query_cmd->add_option("--year", year, "Year column");
    query_cmd->add_option("--out", table_out, "Output file (default: standard output)");
    auto* run_cmd = table_cmd->add_subcommand("run", "Apply a newline-separated pipeline script");
    std::string ops_text, ops_file;
    run_cmd->add_option("--csv", table_csv, "Input CSV")->required();
    auto* ops_opt = run_cmd->add_option("--ops", ops_text, "Pipeline text");
    auto* ops_file_opt = run_cmd->add_option("--ops-file", ops_file, "Pipeline file");
    ops_opt->excludes(ops_file_opt);
    run_cmd->add_option("--out", table_out, "Output file (default: standard output)");
    auto* inspect_cmd = table_cmd->add_subcommand("inspect", "Shape, column types, null counts and the first rows");
    std::size_t inspect_k = 5;
    inspect_cmd->add_option("--csv", table_csv, "Input CSV")->required();
    inspect_cmd->add_option("--head", inspect_k, "Rows to show");

    // exercises
    auto* exercises_cmd = app.add_subcommand("exercises", "Run the golden examples and report pass/fail");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sort_cmd->parsed()) {
            const KeySequence keys = parse_sequence(read_source(sort_file, in));
            const auto result = run_sort(*parse_sort_algorithm(sort_algo), keys, sort_seed ? *sort_seed : default_seed(42));
            out << join(result.output) << '\n';
            if (sort_stats)
                out << "comparisons=" << result.comparisons << " swaps=" << result.swaps_or_moves
                    << " passes=" << result.passes << '\n';
        } else if (search_cmd->parsed()) {
            const KeySequence keys = parse_sequence(read_source(search_file, in));
            const SearchResult r = search_algo == "linear" ? linear_search(keys, search_target)
                                                            : binary_search(keys, search_target, {verify_sorted});
            out << index_text(r) << '\n';
        } else if (classics_cmd->parsed()) {
            classics::Mode mode = classic_op == "fibonacci" ? classics::Mode::iterative : classics::Mode::recursive;
            if (classic_mode == "recursive") mode = classics::Mode::recursive;
            if (classic_mode == "iterative") mode = classics::Mode::iterative;
            classic_args = classics_cmd->remaining();
            for (const auto& a : classic_args) {
                if (a.size() > 1 && a[0] == '-' && !std::isdigit(static_cast<unsigned char>(a[1])))
                    throw UsageError("unknown option " + a);
            }
            detail::run_classic(classic_op, classic_args, mode, out);
        } else if (classify_cmd->parsed()) {
            detail::print_verdict(out, asymptotics::analyze(asymptotics::parse_expr(growth_f), asymptotics::parse_expr(growth_g)));
        } else if (check_cmd->parsed()) {
            const auto bound = check_bound == "upper" ? asymptotics::Bound::upper : asymptotics::Bound::lower;
            const bool ok = asymptotics::check_witness(asymptotics::parse_expr(growth_f), asymptotics::parse_expr(growth_g),
                                                       bound, {check_c, check_n0}, check_n_max);
            out << (ok ? "holds" : "fails") << '\n';
        } else if (fit_cmd->parsed()) {
            std::ifstream file(fit_in);
            if (!file) throw Error("cannot open " + fit_in);
            const auto samples = asymptotics::read_samples_csv(file);
            std::ostringstream slope;
            slope.precision(4);
            slope << std::fixed << asymptotics::fit_slope(samples);
            out << slope.str() << '\n';
        } else if (bench_cmd->parsed()) {
            if (bench_algo.empty()) throw UsageError("bench needs --algo (or the fit subcommand)");
            const auto samples =
                asymptotics::time_algorithm(bench_algo, bench_sizes, *asymptotics::parse_distribution(bench_dist),
                                            bench_reps, bench_seed ? *bench_seed : default_seed(42));
            write_target(bench_out, out, [&](std::ostream& os) { asymptotics::write_samples_csv(os, samples); });
        } else if (query_cmd->parsed()) {
            const auto t = tabular::read_csv(read_source(table_csv, in));
            const auto result = tabular::migration_query(t, *tabular::parse_migration_query(preset), year);
            write_target(table_out, out, [&](std::ostream& os) {
                if (result.charts.empty()) {
                    tabular::write_csv(os, result.table);
                } else {
                    for (const auto& chart : result.charts) tabular::emit_chart(chart, os);
                }
            });
        } else if (run_cmd->parsed()) {
            if (ops_text.empty() && ops_file.empty()) throw UsageError("table run needs --ops or --ops-file");
            const std::string script = ops_file.empty() ? ops_text : read_source(ops_file, in);
            const auto t = tabular::run_script(tabular::read_csv(read_source(table_csv, in)), script);
            write_target(table_out, out, [&](std::ostream& os) { tabular::write_csv(os, t); });
        } else if (inspect_cmd->parsed()) {
            const auto t = tabular::read_csv(read_source(table_csv, in));
            const auto s = tabular::shape(t);
            out << "shape: (" << s.rows << ", " << s.cols << ")\n";
            const auto nulls = tabular::null_counts(t);
            for (std::size_t c = 0; c < t.column_count(); ++c) {
                out << t.columns()[c].name << ": " << tabular::to_string(t.columns()[c].type) << ", " << nulls[c].second
                    << " null\n";
            }
            tabular::write_csv(out, tabular::head(t, inspect_k));
        } else if (exercises_cmd->parsed()) {
            const ExerciseReport report = run_cases(all_golden_cases());
            print_report(out, report);
            return report.all_passed() ? exit_ok : exit_failure;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cin, std::cout, std::cerr);
}

inline std::vector<GoldenCase> all_golden_cases() {
    auto cases = library_golden_cases();
    cases.push_back({"cli", "merge sort example through the sort command", "3 9 10 27 38 43 82\n",
                     [] { return detail::run_captured({"sort", "--algo", "merge"}, "38 27 43 3 9 82 10"); }});
    cases.push_back({"cli", "binary search example through the search command", "3\n", [] {
                         return detail::run_captured({"search", "--algo", "binary", "--target", "20"}, "5 10 15 20 30");
                     }});
    return cases;
}

}  // namespace algokit::cli
