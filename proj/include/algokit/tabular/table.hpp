#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algokit/error.hpp"

namespace algokit::tabular {

/// Missing cell.
struct Null {
    friend constexpr auto operator<=>(Null, Null) = default;
};

using Value = std::variant<Null, std::int64_t, double, std::string>;
using Row = std::vector<Value>;

enum class ColumnType { integer, real, text };

inline std::string_view to_string(ColumnType t) {
    switch (t) {
        case ColumnType::integer: return "Integer";
        case ColumnType::real: return "Real";
        case ColumnType::text: return "Text";
    }
    return "?";
}

inline bool is_numeric(ColumnType t) { return t != ColumnType::text; }

inline bool is_null(const Value& v) { return std::holds_alternative<Null>(v); }

inline bool matches(const Value& v, ColumnType t) {
    switch (t) {
        case ColumnType::integer: return std::holds_alternative<std::int64_t>(v);
        case ColumnType::real: return std::holds_alternative<double>(v);
        case ColumnType::text: return std::holds_alternative<std::string>(v);
    }
    return false;
}

struct Column {
    std::string name;
    ColumnType type = ColumnType::text;

    friend bool operator==(const Column&, const Column&) = default;
};

struct Shape {
    std::size_t rows = 0;
    std::size_t cols = 0;

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Immutable typed table. Construction enforces unique column names, rectangular rows
/// and cell types matching their column (Null allowed anywhere).
class Table {
public:
    Table() = default;

    Table(std::vector<Column> columns, std::vector<Row> rows) : columns_(std::move(columns)), rows_(std::move(rows)) {
        std::set<std::string_view> names;
        for (const Column& c : columns_) {
            if (!names.insert(c.name).second) throw SchemaError("duplicate column name: " + c.name);
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].size() != columns_.size())
                throw SchemaError("row " + std::to_string(r) + " has " + std::to_string(rows_[r].size()) +
                                  " cells, expected " + std::to_string(columns_.size()));
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                const Value& v = rows_[r][c];
                if (!is_null(v) && !matches(v, columns_[c].type))
                    throw SchemaError("cell type mismatch in column " + columns_[c].name);
            }
        }
    }

    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return columns_.size(); }

    std::optional<std::size_t> find_column(std::string_view name) const {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (columns_[i].name == name) return i;
        }
        return std::nullopt;
    }

    std::size_t column_index(std::string_view name) const {
        if (auto i = find_column(name)) return *i;
        throw SchemaError("unknown column: " + std::string(name));
    }

    const Value& at(std::size_t row, std::string_view column) const { return rows_.at(row).at(column_index(column)); }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::vector<Column> columns_;
    std::vector<Row> rows_;
};

}  // namespace algokit::tabular
