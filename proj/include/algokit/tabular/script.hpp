#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/tabular/csv.hpp"
#include "algokit/tabular/ops.hpp"
#include "algokit/tabular/table.hpp"

namespace algokit::tabular {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_list(std::string_view s, char sep) {
    std::vector<std::string> out;
    for (;;) {
        const auto at = s.find(sep);
        out.emplace_back(trim(s.substr(0, at)));
        if (at == std::string_view::npos) break;
        s.remove_prefix(at + 1);
    }
    return out;
}

inline Value parse_literal(std::string_view lit, ColumnType type, std::size_t line) {
    const std::string where = " on script line " + std::to_string(line);
    if (type == ColumnType::text) {
        if (lit.size() >= 2 && lit.front() == '"' && lit.back() == '"') lit = lit.substr(1, lit.size() - 2);
        return std::string(lit);
    }
    if (type == ColumnType::integer) {
        if (auto i = parse_integer(lit)) return *i;
    }
    if (auto d = parse_real(lit)) return *d;
    throw ParseError("expected a number, got '" + std::string(lit) + "'" + where);
}

inline Predicate parse_filter(const Table& t, std::string_view body, std::size_t line) {
    const auto at = body.find_first_of("=!<>");
    if (at == std::string_view::npos || at == 0)
        throw ParseError("filter needs <column><op><literal> on script line " + std::to_string(line));
    const std::string column(trim(body.substr(0, at)));
    std::string_view rest = body.substr(at);
    CompareOp op;
    if (rest.starts_with("<=")) {
        op = CompareOp::le;
    } else if (rest.starts_with(">=")) {
        op = CompareOp::ge;
    } else if (rest.starts_with("!=")) {
        op = CompareOp::ne;
    } else if (rest.starts_with("==")) {
        op = CompareOp::eq;
    } else if (rest.starts_with("<")) {
        op = CompareOp::lt;
    } else if (rest.starts_with(">")) {
        op = CompareOp::gt;
    } else if (rest.starts_with("=")) {
        op = CompareOp::eq;
    } else {
        throw ParseError("unknown comparison operator on script line " + std::to_string(line));
    }
    rest.remove_prefix(rest.starts_with("==") ? 2 : to_string(op).size());
    const ColumnType type = t.columns()[t.column_index(column)].type;
    return Predicate::compare(column, op, parse_literal(trim(rest), type, line));
}

inline GroupSpec parse_group(std::string_view body, std::size_t line) {
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("group needs <keys>:<agg>(<col>) on script line " + std::to_string(line));
    GroupSpec spec;
    spec.keys = split_list(body.substr(0, colon), ',');
    for (const std::string& item : split_list(body.substr(colon + 1), ',')) {
        const auto open = item.find('(');
        if (open == std::string::npos || item.back() != ')')
            throw ParseError("bad aggregation '" + item + "' on script line " + std::to_string(line));
        const auto fn = parse_agg_fn(trim(std::string_view(item).substr(0, open)));
        if (!fn) throw ParseError("unknown aggregation '" + item + "' on script line " + std::to_string(line));
        spec.aggregations.push_back({std::string(trim(std::string_view(item).substr(open + 1, item.size() - open - 2))), *fn});
    }
    return spec;
}

}  // namespace detail

/// Applies a newline-separated pipeline to `t`. Each non-blank line is one step:
///   select:a,b            filter:<col><op><literal>     sort:<col>:asc|desc[,<col>:asc|desc]
///   group:<keys>:<agg>(<col>)[,<agg>(<col>)]              head:<k>
/// Operators are = == != < <= > >=. Text literals may be double-quoted. Lines starting
/// with '#' are comments.
inline Table run_script(Table t, std::string_view script) {
    std::size_t line_no = 0;
    for (const std::string& raw : detail::split_list(script, '\n')) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected <step>:<arguments> on script line " + std::to_string(line_no));
        const std::string_view step = line.substr(0, colon);
        const std::string_view body = line.substr(colon + 1);
        if (step == "select") {
            t = select(t, detail::split_list(body, ','));
        } else if (step == "filter") {
            t = filter(t, detail::parse_filter(t, body, line_no));
        } else if (step == "sort") {
            std::vector<SortKey> keys;
            for (const std::string& item : detail::split_list(body, ',')) {
                const auto at = item.rfind(':');
                SortKey k{item, Direction::ascending};
                if (at != std::string::npos) {
                    const std::string dir(detail::trim(std::string_view(item).substr(at + 1)));
                    if (dir != "asc" && dir != "desc")
                        throw ParseError("sort direction must be asc or desc on script line " + std::to_string(line_no));
                    k = {std::string(detail::trim(std::string_view(item).substr(0, at))),
                         dir == "desc" ? Direction::descending : Direction::ascending};
                }
                keys.push_back(std::move(k));
            }
            t = sort_values(t, keys);
        } else if (step == "group") {
            t = group_aggregate(t, detail::parse_group(body, line_no));
        } else if (step == "head") {
            const auto k = detail::parse_integer(detail::trim(body));
            if (!k || *k < 0) throw ParseError("head needs a non-negative count on script line " + std::to_string(line_no));
            t = head(t, static_cast<std::size_t>(*k));
        } else {
            throw ParseError("unknown step '" + std::string(step) + "' on script line " + std::to_string(line_no));
        }
    }
    return t;
}

}  // namespace algokit::tabular
