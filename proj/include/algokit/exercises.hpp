#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/asymptotics/classify.hpp"
#include "algokit/asymptotics/expr.hpp"
#include "algokit/classics.hpp"
#include "algokit/search.hpp"
#include "algokit/sort.hpp"
#include "algokit/tabular/csv.hpp"
#include "algokit/tabular/fixture.hpp"
#include "algokit/tabular/ops.hpp"

namespace algokit {

/// One worked example with its known printed answer.
struct GoldenCase {
    std::string module;
    std::string anchor;  // short label for the example
    std::string expected;
    std::function<std::string()> actual;
};

struct GoldenOutcome {
    std::string module;
    std::string anchor;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct ExerciseReport {
    std::vector<GoldenOutcome> outcomes;

    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& o : outcomes) n += o.passed;
        return n;
    }
    bool all_passed() const { return passed() == outcomes.size(); }
};

inline std::string join(std::span<const Key> xs, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

/// The CLI prints -1 for an absent key.
inline std::string index_text(SearchResult r) { return r.found() ? std::to_string(*r.index) : "-1"; }

inline std::string bool_text(bool b) { return b ? "True" : "False"; }

namespace detail {

inline std::string summarize_rows(const tabular::Table& t, std::string_view column) {
    std::string out;
    const std::size_t c = t.column_index(column);
    for (const auto& row : t.rows()) {
        if (!out.empty()) out += ' ';
        out += tabular::format_cell(row[c]);
    }
    return out;
}

inline tabular::Table fixture() { return tabular::read_csv(tabular::migration_fixture_csv); }

}  // namespace detail

/// Library-level golden cases. Expected strings are the known printed answers.
inline std::vector<GoldenCase> library_golden_cases() {
    using namespace algokit::classics;
    namespace asy = algokit::asymptotics;
    namespace tab = algokit::tabular;
    const KeySequence pi_digits{3, 1, 4, 1, 5, 9, 2, 6, 5, 3};
    std::vector<GoldenCase> cases;
    auto add = [&](std::string module, std::string anchor, std::string expected, std::function<std::string()> f) {
        cases.push_back({std::move(module), std::move(anchor), std::move(expected), std::move(f)});
    };

    add("search", "linear search example, [10, 30, 20, 5, 15] target 20", "2",
        [] { return index_text(linear_search(KeySequence{10, 30, 20, 5, 15}, 20)); });
    add("search", "first occurrence of 5 in pi digits", "4",
        [=] { return index_text(linear_search(pi_digits, 5)); });
    add("search", "occurrences of 5 in pi digits", "2",
        [=] { return std::to_string(count_linear(pi_digits, 5)); });
    add("search", "sum of pi digits", "39", [=] { return std::to_string(sum_linear(pi_digits)); });
    add("search", "binary search example, [5, 10, 15, 20, 30] target 20", "3",
        [] { return index_text(binary_search(KeySequence{5, 10, 15, 20, 30}, 20)); });
    add("search", "binary search for 6 in 1..10", "5",
        [] { return index_text(binary_search(KeySequence{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 6)); });
    add("search", "occurrences of 2 by binary search", "3",
        [] { return std::to_string(count_binary(KeySequence{1, 2, 2, 2, 3, 4, 5, 5, 6}, 2)); });
    add("search", "minimum of rotated_arr", "0",
        [] { return std::to_string(rotated_min(KeySequence{4, 5, 6, 7, 0, 1, 2})); });

    add("sort", "bubble sort example, final pass", "1 2 3 4 5 6",
        [] { return join(bubble_sort(KeySequence{5, 2, 4, 6, 1, 3}).output); });
    add("sort", "selection sort example, final sorted array", "11 12 22 25 64",
        [] { return join(selection_sort(KeySequence{64, 25, 12, 22, 11}).output); });
    add("sort", "insertion sort example, final array", "1 2 3 4 5 6",
        [] { return join(insertion_sort(KeySequence{5, 2, 4, 6, 1, 3}).output); });
    add("sort", "merge sort example, sorted array", "3 9 10 27 38 43 82",
        [] { return join(merge_sort(KeySequence{38, 27, 43, 3, 9, 82, 10}).output); });
    add("sort", "merge sort exercise, uneven bottom-up split", "3 9 10 27 38 43 82",
        [] { return join(merge_sort_bottom_up(KeySequence{38, 27, 43, 3, 9, 82, 10}, {1, 4}).output); });
    add("sort", "quicksort example, middle pivot", "10 30 40 50 70 80 90",
        [] { return join(quick_sort(KeySequence{10, 80, 30, 90, 40, 50, 70}, PivotStrategy::middle()).output); });

    add("classics", "recursion, factorial(5)", "120", [] { return std::to_string(factorial(5)); });
    add("classics", "recursion, factorial of 0", "1", [] { return std::to_string(factorial(0)); });
    add("classics", "recursion, fibonacci(6)", "8", [] { return std::to_string(fibonacci(6, Mode::recursive)); });
    add("classics", "recursion, F(0)", "0", [] { return std::to_string(fibonacci(0)); });
    add("classics", "recursion, sum_list([1, 2, 3, 4, 5])", "15", [] {
        const std::int64_t xs[] = {1, 2, 3, 4, 5};
        return std::to_string(sum_list(xs));
    });
    add("classics", "string exercise, reverse and shift \"abcdef\"", "gfedcb", [] { return reverse_shift("abcdef"); });
    add("classics", "string exercise, reverse and shift \"123abc\"", "dcb432", [] { return reverse_shift("123abc"); });
    add("classics", "character codes, ord('A')", "65", [] { return std::to_string(ascii_sum("A")); });
    add("classics", "digit string to list, \"12345\"", "[1, 2, 3, 4, 5]", [] {
        std::string out = "[";
        for (int d : digits_to_list("12345")) out += (out.size() > 1 ? ", " : "") + std::to_string(d);
        return out + "]";
    });
    add("classics", "pattern exercise, last row of the star pyramid", "* * * * *", [] {
        const std::string p = star_pyramid(5);
        return p.substr(p.rfind('\n') + 1);
    });
    add("classics", "iteration exercise, countdown from 10", "10..1", [] {
        const std::string c = iter_suite(10).countdown;
        return c.substr(0, c.find('\n')) + ".." + c.substr(c.rfind('\n') + 1);
    });

    add("asymptotics", "growth example, f(n) = 2n + 1", "2*n + 1", [] { return asy::render(asy::parse_expr("2*n + 1")); });
    add("asymptotics", "growth example, g(n) = n^2 + 3n", "n^2 + 3*n",
        [] { return asy::render(asy::parse_expr("n^2 + 3*n")); });
    add("asymptotics", "growth expression, f(n) = n log n", "n*log n", [] { return asy::render(asy::parse_expr("n log n")); });
    add("asymptotics", "growth relations, truth vector", "T,T,T,T,T", [] {
        const auto n2 = asy::parse_expr("n^2");
        const auto n3 = asy::parse_expr("n^3");
        const auto n1 = asy::parse_expr("n");
        const bool answers[] = {
            asy::classify(n2, n3).holds(asy::Relation::big_o),
            asy::classify(n2, n3).holds(asy::Relation::little_o),
            asy::classify(n2, n2).holds(asy::Relation::theta),
            asy::classify(n2, n1).holds(asy::Relation::little_omega),
            asy::classify(n2, n2).holds(asy::Relation::big_omega),
        };
        std::string out;
        for (bool b : answers) out += std::string(out.empty() ? "" : ",") + (b ? "T" : "F");
        return out;
    });
    add("asymptotics", "example interpretation, 2n + 1 <= 3n for n >= 1", "True", [] {
        return bool_text(asy::check_witness(asy::parse_expr("2n+1"), asy::parse_expr("n"), asy::Bound::upper, {3.0, 1}));
    });
    add("asymptotics", "example interpretation, n^2 + 3n >= n^2 for n >= 1", "True", [] {
        return bool_text(
            asy::check_witness(asy::parse_expr("n^2+3n"), asy::parse_expr("n^2"), asy::Bound::lower, {1.0, 1}));
    });
    add("asymptotics", "example interpretation, a witness exists for 2n + 1 = O(n)", "True", [] {
        const auto f = asy::parse_expr("2n+1");
        const auto g = asy::parse_expr("n");
        const auto w = asy::find_witness(f, g, asy::Bound::upper);
        return bool_text(w && asy::check_witness(f, g, asy::Bound::upper, *w));
    });

    add("tabular", "head shows the first five rows by default", "5",
        [] { return std::to_string(tab::head(algokit::detail::fixture()).row_count()); });
    add("tabular", "selecting a single column, dest_country", "1",
        [] { return std::to_string(tab::select(algokit::detail::fixture(), {"dest_country"}).column_count()); });
    add("tabular", "filtering migrations from Ghana", "Ghana Ghana", [] {
        const auto t = tab::filter(algokit::detail::fixture(), tab::Predicate::compare("origin_country", tab::CompareOp::eq,
                                                                              std::string("Ghana")));
        return algokit::detail::summarize_rows(t, "origin_country");
    });
    add("tabular", "nonzero emigrations from Nigeria in 2000", "7", [] {
        const auto p = tab::Predicate::compare("origin_country", tab::CompareOp::eq, std::string("Nigeria")) &&
                       tab::Predicate::compare("2000", tab::CompareOp::gt, std::int64_t{0});
        return std::to_string(tab::filter(algokit::detail::fixture(), p).row_count());
    });
    add("tabular", "sorting by dest_country then origin_country", "Ghana India Nigeria", [] {
        const auto t = tab::sort_values(algokit::detail::fixture(), {{"dest_country", tab::Direction::ascending},
                                                            {"origin_country", tab::Direction::ascending}});
        return algokit::detail::summarize_rows(
            tab::filter(t, tab::Predicate::compare("dest_country", tab::CompareOp::eq, std::string("United Kingdom"))),
            "origin_country");
    });
    return cases;
}

inline ExerciseReport run_cases(const std::vector<GoldenCase>& cases) {
    ExerciseReport report;
    for (const auto& c : cases) {
        GoldenOutcome o{c.module, c.anchor, c.expected, {}, false};
        try {
            o.actual = c.actual();
            o.passed = o.actual == c.expected;
        } catch (const std::exception& e) {
            o.actual = std::string("error: ") + e.what();
        }
        report.outcomes.push_back(std::move(o));
    }
    return report;
}

/// One "PASS|FAIL <module>: <anchor>" line per case, then a summary line.
inline void print_report(std::ostream& os, const ExerciseReport& report) {
    for (const auto& o : report.outcomes) {
        os << (o.passed ? "PASS " : "FAIL ") << o.module << ": " << o.anchor;
        if (!o.passed) os << " (expected \"" << o.expected << "\", got \"" << o.actual << "\")";
        os << '\n';
    }
    os << report.passed() << "/" << report.outcomes.size() << " golden examples passed\n";
}

}  // namespace algokit
