#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/tabular/table.hpp"

namespace algokit::tabular {

namespace detail {

/// Splits CSV text into records of raw fields. Double-quoted fields may hold commas,
/// newlines and doubled quotes. LF and CRLF both end a record.
inline std::vector<std::vector<std::string>> split_records(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    std::size_t i = 0;
    std::size_t record_start = 0;
    bool field_started = false;
    auto end_record = [&] {
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        field_started = false;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '"' && field.empty() && !field_started) {
            field_started = true;
            ++i;
            for (;;) {
                if (i >= text.size())
                    throw ParseError("unterminated quoted field in record " + std::to_string(records.size() + 1),
                                     record_start);
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field.push_back(text[i++]);
            }
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                throw ParseError("unexpected character after closing quote", i);
            continue;
        }
        if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
            field_started = false;
            ++i;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            ++i;
            end_record();
            record_start = i;
        } else {
            field.push_back(c);
            field_started = true;
            ++i;
        }
    }
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

inline std::optional<std::int64_t> parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::optional<double> parse_real(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

inline bool needs_quotes(std::string_view s) { return s.find_first_of(",\"\r\n") != std::string_view::npos; }

}  // namespace detail

/// Field text under the CSV quoting rule: quoted only when it contains a comma, quote
/// or line break; embedded quotes doubled.
inline std::string csv_escape(std::string_view s) {
    if (!detail::needs_quotes(s)) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Shortest round-trip text for a real; always carries a '.' or exponent so the value
/// reads back as Real.
inline std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, ptr);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

inline std::string format_cell(const Value& v) {
    struct Visitor {
        std::string operator()(Null) const { return ""; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_real(d); }
        std::string operator()(const std::string& s) const { return s.empty() ? "\"\"" : csv_escape(s); }
    };
    return std::visit(Visitor{}, v);
}

/// Reads a header row of unique names and infers each column's type: Integer when every
/// non-empty cell parses as a 64-bit integer, else Real when every one parses as a
/// finite real, else Text. Empty cells become Null.
inline Table read_csv(std::string_view text) {
    auto records = detail::split_records(text);
    if (records.empty()) throw ParseError("CSV input has no header row");
    const std::vector<std::string> header = std::move(records.front());
    std::set<std::string_view> seen;
    for (const auto& name : header) {
        if (!seen.insert(name).second) throw SchemaError("duplicate header: " + name);
    }
    const std::size_t width = header.size();
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != width)
            throw SchemaError("ragged row " + std::to_string(r) + ": " + std::to_string(records[r].size()) +
                              " cells, expected " + std::to_string(width));
    }

    std::vector<Column> columns;
    for (std::size_t c = 0; c < width; ++c) {
        bool all_int = true;
        bool all_real = true;
        for (std::size_t r = 1; r < records.size(); ++r) {
            const std::string& cell = records[r][c];
            if (cell.empty()) continue;
            if (all_int && !detail::parse_integer(cell)) all_int = false;
            if (all_real && !detail::parse_real(cell)) all_real = false;
            if (!all_int && !all_real) break;
        }
        columns.push_back({header[c], all_int ? ColumnType::integer : all_real ? ColumnType::real : ColumnType::text});
    }

    std::vector<Row> rows;
    rows.reserve(records.size() - 1);
    for (std::size_t r = 1; r < records.size(); ++r) {
        Row row;
        row.reserve(width);
        for (std::size_t c = 0; c < width; ++c) {
            std::string& cell = records[r][c];
            if (cell.empty()) {
                row.emplace_back(Null{});
                continue;
            }
            switch (columns[c].type) {
                case ColumnType::integer: row.emplace_back(*detail::parse_integer(cell)); break;
                case ColumnType::real: row.emplace_back(*detail::parse_real(cell)); break;
                case ColumnType::text: row.emplace_back(std::move(cell)); break;
            }
        }
        rows.push_back(std::move(row));
    }
    return Table(std::move(columns), std::move(rows));
}

inline Table read_csv(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_csv(std::string_view(text));
}

/// Writes the header and rows with LF line endings and minimal quoting.
inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t c = 0; c < t.column_count(); ++c) {
        if (c > 0) os << ',';
        os << csv_escape(t.columns()[c].name);
    }
    os << '\n';
    for (const Row& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << format_cell(row[c]);
        }
        os << '\n';
    }
    if (!os) throw Error("failed to write CSV output");
}

}  // namespace algokit::tabular
