#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algokit/checked.hpp"
#include "algokit/error.hpp"
#include "algokit/tabular/table.hpp"

namespace algokit::tabular {

/// First k rows (all of them when k exceeds the row count).
inline Table head(const Table& t, std::size_t k = 5) {
    std::vector<Row> rows(t.rows().begin(), t.rows().begin() + static_cast<std::ptrdiff_t>(std::min(k, t.row_count())));
    return Table(t.columns(), std::move(rows));
}

inline Shape shape(const Table& t) { return {t.row_count(), t.column_count()}; }

/// Null count per column, in column order.
inline std::vector<std::pair<std::string, std::size_t>> null_counts(const Table& t) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (std::size_t c = 0; c < t.column_count(); ++c) {
        std::size_t n = 0;
        for (const Row& r : t.rows()) n += is_null(r[c]);
        out.emplace_back(t.columns()[c].name, n);
    }
    return out;
}

/// Projection onto the named columns, in the given order.
inline Table select(const Table& t, const std::vector<std::string>& names) {
    std::vector<std::size_t> idx;
    std::vector<Column> cols;
    for (const auto& n : names) {
        idx.push_back(t.column_index(n));
        cols.push_back(t.columns()[idx.back()]);
    }
    std::vector<Row> rows;
    rows.reserve(t.row_count());
    for (const Row& r : t.rows()) {
        Row out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.push_back(r[i]);
        rows.push_back(std::move(out));
    }
    return Table(std::move(cols), std::move(rows));
}

namespace detail {

/// Three-way comparison of two non-null cells. Integers and reals compare numerically
/// (through long double, exact for every int64); text compares bytewise.
inline int compare_cells(const Value& a, const Value& b) {
    if (std::holds_alternative<std::string>(a) || std::holds_alternative<std::string>(b)) {
        if (!std::holds_alternative<std::string>(a) || !std::holds_alternative<std::string>(b))
            throw SchemaError("cannot compare text with a number");
        const int c = std::get<std::string>(a).compare(std::get<std::string>(b));
        return (c > 0) - (c < 0);
    }
    if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
        const auto x = std::get<std::int64_t>(a), y = std::get<std::int64_t>(b);
        return (x > y) - (x < y);
    }
    auto num = [](const Value& v) {
        return std::holds_alternative<std::int64_t>(v) ? static_cast<long double>(std::get<std::int64_t>(v))
                                                       : static_cast<long double>(std::get<double>(v));
    };
    const long double x = num(a), y = num(b);
    return (x > y) - (x < y);
}

}  // namespace detail

enum class CompareOp { eq, ne, lt, le, gt, ge };

inline std::string_view to_string(CompareOp op) {
    switch (op) {
        case CompareOp::eq: return "=";
        case CompareOp::ne: return "!=";
        case CompareOp::lt: return "<";
        case CompareOp::le: return "<=";
        case CompareOp::gt: return ">";
        case CompareOp::ge: return ">=";
    }
    return "?";
}

/// Boolean row predicate: column-versus-literal comparisons joined by and / or / not.
/// A Null cell fails every comparison.
class Predicate {
public:
    static Predicate compare(std::string column, CompareOp op, Value literal) {
        Predicate p(Kind::compare);
        p.column_ = std::move(column);
        p.op_ = op;
        p.literal_ = std::move(literal);
        return p;
    }

    friend Predicate operator&&(Predicate a, Predicate b) { return combine(Kind::all_of, std::move(a), std::move(b)); }
    friend Predicate operator||(Predicate a, Predicate b) { return combine(Kind::any_of, std::move(a), std::move(b)); }
    friend Predicate operator!(Predicate a) {
        Predicate p(Kind::negate);
        p.children_.push_back(std::move(a));
        return p;
    }

    /// Throws SchemaError for unknown columns, Null literals, or text/number mismatches.
    void validate(const Table& t) const {
        if (kind_ != Kind::compare) {
            for (const auto& c : children_) c.validate(t);
            return;
        }
        const ColumnType type = t.columns()[t.column_index(column_)].type;
        if (is_null(literal_)) throw SchemaError("cannot compare column " + column_ + " with a null literal");
        const bool literal_text = std::holds_alternative<std::string>(literal_);
        if (literal_text == is_numeric(type))
            throw SchemaError("literal type does not match " + std::string(to_string(type)) + " column " + column_);
    }

    bool evaluate(const Table& t, const Row& row) const {
        switch (kind_) {
            case Kind::compare: {
                const Value& cell = row[t.column_index(column_)];
                if (is_null(cell)) return false;
                const int c = detail::compare_cells(cell, literal_);
                switch (op_) {
                    case CompareOp::eq: return c == 0;
                    case CompareOp::ne: return c != 0;
                    case CompareOp::lt: return c < 0;
                    case CompareOp::le: return c <= 0;
                    case CompareOp::gt: return c > 0;
                    case CompareOp::ge: return c >= 0;
                }
                return false;
            }
            case Kind::all_of:
                return std::all_of(children_.begin(), children_.end(), [&](const Predicate& p) { return p.evaluate(t, row); });
            case Kind::any_of:
                return std::any_of(children_.begin(), children_.end(), [&](const Predicate& p) { return p.evaluate(t, row); });
            case Kind::negate: return !children_.front().evaluate(t, row);
        }
        return false;
    }

private:
    enum class Kind { compare, all_of, any_of, negate };

    explicit Predicate(Kind k) : kind_(k) {}

    static Predicate combine(Kind k, Predicate a, Predicate b) {
        Predicate p(k);
        p.children_.push_back(std::move(a));
        p.children_.push_back(std::move(b));
        return p;
    }

    Kind kind_;
    std::string column_;
    CompareOp op_ = CompareOp::eq;
    Value literal_;
    std::vector<Predicate> children_;
};

/// Rows satisfying `p`, in their original order.
inline Table filter(const Table& t, const Predicate& p) {
    p.validate(t);
    std::vector<Row> rows;
    for (const Row& r : t.rows()) {
        if (p.evaluate(t, r)) rows.push_back(r);
    }
    return Table(t.columns(), std::move(rows));
}

enum class Direction { ascending, descending };

struct SortKey {
    std::string column;
    Direction direction = Direction::ascending;
};

/// Stable multi-key sort. Nulls go last whatever the direction.
inline Table sort_values(const Table& t, const std::vector<SortKey>& keys) {
    std::vector<std::pair<std::size_t, bool>> idx;
    for (const auto& k : keys) idx.emplace_back(t.column_index(k.column), k.direction == Direction::descending);
    std::vector<Row> rows = t.rows();
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        for (const auto& [c, desc] : idx) {
            const bool an = is_null(a[c]), bn = is_null(b[c]);
            if (an && bn) continue;
            if (an != bn) return bn;
            const int cmp = detail::compare_cells(a[c], b[c]);
            if (cmp != 0) return desc ? cmp > 0 : cmp < 0;
        }
        return false;
    });
    return Table(t.columns(), std::move(rows));
}

enum class AggFn { sum, mean, count, min, max };

inline std::string_view to_string(AggFn f) {
    switch (f) {
        case AggFn::sum: return "sum";
        case AggFn::mean: return "mean";
        case AggFn::count: return "count";
        case AggFn::min: return "min";
        case AggFn::max: return "max";
    }
    return "?";
}

inline std::optional<AggFn> parse_agg_fn(std::string_view s) {
    for (AggFn f : {AggFn::sum, AggFn::mean, AggFn::count, AggFn::min, AggFn::max}) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

struct Aggregation {
    std::string column;
    AggFn fn = AggFn::sum;
};

struct GroupSpec {
    std::vector<std::string> keys;
    std::vector<Aggregation> aggregations;
};

/// Rounds to 6 significant decimal digits.
inline double round_significant(double v, int digits = 6) {
    if (v == 0 || !std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return std::strtod(buf, nullptr);
}

/// Group-by with aggregations; groups appear in order of first appearance and a Null key
/// forms its own group. Nulls are skipped by every aggregation: count counts non-null
/// cells, and mean/min/max of an all-null group is Null. Sums keep the column type;
/// means are Real rounded to 6 significant digits.
///
/// An output column takes the value column's name when that column is aggregated once,
/// else "fn(column)".
inline Table group_aggregate(const Table& t, const GroupSpec& spec) {
    if (spec.keys.empty()) throw SchemaError("group needs at least one key column");
    std::vector<std::size_t> key_idx;
    std::set<std::size_t> key_set;
    for (const auto& k : spec.keys) {
        key_idx.push_back(t.column_index(k));
        if (!key_set.insert(key_idx.back()).second) throw SchemaError("duplicate group key: " + k);
    }
    std::map<std::string, std::size_t> uses;
    for (const auto& a : spec.aggregations) {
        const std::size_t c = t.column_index(a.column);
        if (key_set.count(c)) throw SchemaError("column " + a.column + " is both a key and a value");
        if (a.fn != AggFn::count && !is_numeric(t.columns()[c].type))
            throw SchemaError(std::string(to_string(a.fn)) + " needs a numeric column, " + a.column + " is Text");
        ++uses[a.column];
    }

    std::vector<Column> cols;
    for (std::size_t k : key_idx) cols.push_back(t.columns()[k]);
    for (const auto& a : spec.aggregations) {
        const Column& src = t.columns()[t.column_index(a.column)];
        std::string name = uses[a.column] == 1 ? a.column : std::string(to_string(a.fn)) + "(" + a.column + ")";
        ColumnType type = src.type;
        if (a.fn == AggFn::count) type = ColumnType::integer;
        if (a.fn == AggFn::mean) type = ColumnType::real;
        cols.push_back({std::move(name), type});
    }

    std::map<Row, std::size_t> index;
    std::vector<std::vector<std::size_t>> members;
    std::vector<Row> keys;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        Row key;
        for (std::size_t k : key_idx) key.push_back(t.rows()[r][k]);
        auto [it, fresh] = index.try_emplace(key, members.size());
        if (fresh) {
            members.emplace_back();
            keys.push_back(std::move(key));
        }
        members[it->second].push_back(r);
    }

    std::vector<Row> rows;
    for (std::size_t g = 0; g < members.size(); ++g) {
        Row out = keys[g];
        for (const auto& a : spec.aggregations) {
            const std::size_t c = t.column_index(a.column);
            std::vector<const Value*> cells;
            for (std::size_t r : members[g]) {
                if (!is_null(t.rows()[r][c])) cells.push_back(&t.rows()[r][c]);
            }
            const bool integral = t.columns()[c].type == ColumnType::integer;
            auto as_double = [](const Value* v) {
                return std::holds_alternative<std::int64_t>(*v) ? static_cast<double>(std::get<std::int64_t>(*v))
                                                                : std::get<double>(*v);
            };
            switch (a.fn) {
                case AggFn::count: out.emplace_back(static_cast<std::int64_t>(cells.size())); break;
                case AggFn::sum:
                    if (integral) {
                        std::int64_t s = 0;
                        for (const Value* v : cells) s = checked_add(s, std::get<std::int64_t>(*v), "group sum");
                        out.emplace_back(s);
                    } else {
                        double s = 0;
                        for (const Value* v : cells) s += std::get<double>(*v);
                        out.emplace_back(s);
                    }
                    break;
                case AggFn::mean:
                    if (cells.empty()) {
                        out.emplace_back(Null{});
                    } else {
                        long double s = 0;
                        for (const Value* v : cells) s += as_double(v);
                        out.emplace_back(round_significant(static_cast<double>(s / static_cast<long double>(cells.size()))));
                    }
                    break;
                case AggFn::min:
                case AggFn::max:
                    if (cells.empty()) {
                        out.emplace_back(Null{});
                    } else {
                        const Value* best = cells.front();
                        for (const Value* v : cells) {
                            const int cmp = detail::compare_cells(*v, *best);
                            if (a.fn == AggFn::min ? cmp < 0 : cmp > 0) best = v;
                        }
                        out.push_back(*best);
                    }
                    break;
            }
        }
        rows.push_back(std::move(out));
    }
    return Table(std::move(cols), std::move(rows));
}

}  // namespace algokit::tabular
