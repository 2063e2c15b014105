#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/tabular/chart.hpp"
#include "algokit/tabular/ops.hpp"
#include "algokit/tabular/table.hpp"

namespace algokit::tabular {

enum class MigrationQuery { q1, q2, q3, q4 };

inline std::string_view to_string(MigrationQuery q) {
    switch (q) {
        case MigrationQuery::q1: return "q1";
        case MigrationQuery::q2: return "q2";
        case MigrationQuery::q3: return "q3";
        case MigrationQuery::q4: return "q4";
    }
    return "?";
}

inline std::optional<MigrationQuery> parse_migration_query(std::string_view s) {
    for (auto q : {MigrationQuery::q1, MigrationQuery::q2, MigrationQuery::q3, MigrationQuery::q4}) {
        if (to_string(q) == s) return q;
    }
    return std::nullopt;
}

inline const std::vector<std::string>& migration_years() {
    static const std::vector<std::string> years{"1960", "1970", "1980", "1990", "2000"};
    return years;
}

/// Tabular result plus any chart series. q1 and q2 produce only a table; q3 produces the
/// aggregated table and one bar series; q4 produces the two route rows and two line series.
struct QueryResult {
    Table table;
    std::vector<ChartSeries> charts;
};

namespace detail {

inline void require_columns(const Table& t, const std::vector<std::string>& needed,
                            const std::vector<std::string>& numeric) {
    std::string missing;
    for (const auto& c : needed) {
        if (t.find_column(c)) continue;
        if (!missing.empty()) missing += ", ";
        missing += c;
    }
    if (!missing.empty()) throw SchemaError("migration table is missing columns: " + missing);
    for (const auto& c : numeric) {
        if (!is_numeric(t.columns()[t.column_index(c)].type))
            throw SchemaError("migration column " + c + " must be numeric");
    }
}

inline Predicate text_equals(std::string column, std::string value) {
    return Predicate::compare(std::move(column), CompareOp::eq, Value(std::move(value)));
}

inline double numeric(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return 0.0;
}

inline Table top_routes(const Table& t, const std::string& year) {
    return head(sort_values(select(t, {"origin_country", "dest_country", year}), {{year, Direction::descending}}), 10);
}

inline ChartSeries route_series(const Table& t, const std::string& from, const std::string& to) {
    const Table route = filter(t, text_equals("origin_country", from) && text_equals("dest_country", to));
    std::vector<std::pair<double, double>> points;
    for (const auto& year : migration_years()) {
        const std::size_t c = route.column_index(year);
        double total = 0;
        for (const Row& r : route.rows()) total += numeric(r[c]);
        points.emplace_back(std::stod(year), total);
    }
    return ChartSeries::line(from + " to " + to + " migrations", "Year", "Number of Migrations", std::move(points));
}

}  // namespace detail

/// The four migration pipelines.
///   q1: ten largest routes in `year`.
///   q2: q1 restricted to routes ending in Africa.
///   q3: five largest destination continents for emigrants from Nigeria in `year`.
///   q4: Nigeria-to-Ghana and Ghana-to-Nigeria totals per decade, 1960 to 2000.
/// `year` is ignored by q4.
inline QueryResult migration_query(const Table& t, MigrationQuery q, const std::string& year) {
    switch (q) {
        case MigrationQuery::q1:
            detail::require_columns(t, {"origin_country", "dest_country", year}, {year});
            return {detail::top_routes(t, year), {}};
        case MigrationQuery::q2:
            detail::require_columns(t, {"origin_country", "dest_country", "dest_continent", year}, {year});
            return {detail::top_routes(filter(t, detail::text_equals("dest_continent", "Africa")), year), {}};
        case MigrationQuery::q3: {
            detail::require_columns(t, {"origin_country", "dest_continent", year}, {year});
            const Table nigeria = filter(t, detail::text_equals("origin_country", "Nigeria"));
            const Table grouped =
                group_aggregate(nigeria, {{"origin_country", "dest_continent"}, {{year, AggFn::sum}}});
            Table top = head(sort_values(grouped, {{year, Direction::descending}}), 5);
            std::vector<std::pair<std::string, double>> bars;
            const std::size_t label = top.column_index("dest_continent");
            const std::size_t value = top.column_index(year);
            for (const Row& r : top.rows()) {
                bars.emplace_back(is_null(r[label]) ? std::string() : std::get<std::string>(r[label]),
                                  detail::numeric(r[value]));
            }
            if (bars.empty()) throw DomainError("no emigration rows from Nigeria to chart");
            auto chart = ChartSeries::bar("Migrations from Nigeria in " + year + " by Destination Continent",
                                          "Destination Continent", "Number of Emigrations", std::move(bars));
            return {std::move(top), {std::move(chart)}};
        }
        case MigrationQuery::q4: {
            std::vector<std::string> needed{"origin_country", "dest_country"};
            needed.insert(needed.end(), migration_years().begin(), migration_years().end());
            detail::require_columns(t, needed, migration_years());
            const Table routes = filter(t, (detail::text_equals("origin_country", "Nigeria") &&
                                            detail::text_equals("dest_country", "Ghana")) ||
                                               (detail::text_equals("origin_country", "Ghana") &&
                                                detail::text_equals("dest_country", "Nigeria")));
            return {select(routes, needed),
                    {detail::route_series(t, "Nigeria", "Ghana"), detail::route_series(t, "Ghana", "Nigeria")}};
        }
    }
    throw DomainError("unknown migration query");
}

}  // namespace algokit::tabular
