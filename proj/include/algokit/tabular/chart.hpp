#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/tabular/csv.hpp"

namespace algokit::tabular {

enum class ChartKind { bar, line };

inline std::string_view to_string(ChartKind k) { return k == ChartKind::bar ? "bar" : "line"; }

struct ChartPoint {
    std::variant<std::string, double> x;  // label for bar charts, abscissa for line charts
    double y = 0.0;

    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

/// Data behind one bar or line chart. Never empty; line abscissae strictly increase.
class ChartSeries {
public:
    static ChartSeries bar(std::string title, std::string x_label, std::string y_label,
                           std::vector<std::pair<std::string, double>> points) {
        ChartSeries s(ChartKind::bar, std::move(title), std::move(x_label), std::move(y_label));
        for (auto& [label, y] : points) s.points_.push_back({std::move(label), y});
        s.validate();
        return s;
    }

    static ChartSeries line(std::string title, std::string x_label, std::string y_label,
                            std::vector<std::pair<double, double>> points) {
        ChartSeries s(ChartKind::line, std::move(title), std::move(x_label), std::move(y_label));
        for (auto [x, y] : points) s.points_.push_back({x, y});
        s.validate();
        return s;
    }

    ChartKind kind() const { return kind_; }
    const std::string& title() const { return title_; }
    const std::string& x_label() const { return x_label_; }
    const std::string& y_label() const { return y_label_; }
    const std::vector<ChartPoint>& points() const { return points_; }

    friend bool operator==(const ChartSeries&, const ChartSeries&) = default;

private:
    ChartSeries(ChartKind k, std::string title, std::string x_label, std::string y_label)
        : kind_(k), title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void validate() const {
        if (points_.empty()) throw DomainError("chart series needs at least one point");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!std::isfinite(points_[i].y)) throw DomainError("chart values must be finite");
            if (kind_ != ChartKind::line) continue;
            const double x = std::get<double>(points_[i].x);
            if (!std::isfinite(x)) throw DomainError("chart x values must be finite");
            if (i > 0 && !(std::get<double>(points_[i - 1].x) < x))
                throw DomainError("line chart x values must be strictly increasing");
        }
    }

    ChartKind kind_;
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<ChartPoint> points_;
};

/// Plain decimal with at most 6 significant digits, no exponent and no trailing zeros:
/// 134000 -> "134000", 2.5 -> "2.5", 1/3 -> "0.333333", 1234567 -> "1234570".
inline std::string format_chart_number(double v) {
    if (!std::isfinite(v)) throw DomainError("chart values must be finite");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    // buf is "[-]d.ddddde[+-]xx"
    std::string s(buf);
    const bool negative = s.front() == '-';
    if (negative) s.erase(0, 1);
    const auto e = s.find('e');
    const int exponent = std::atoi(s.c_str() + e + 1);
    std::string digits = s.substr(0, 1) + s.substr(2, e - 2);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (digits == "0") return "0";

    std::string out;
    if (exponent < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
        const auto int_len = static_cast<std::size_t>(exponent) + 1;
        if (digits.size() <= int_len) {
            out = digits + std::string(int_len - digits.size(), '0');
        } else {
            out = digits.substr(0, int_len) + "." + digits.substr(int_len);
        }
    }
    return negative ? "-" + out : out;
}

/// Four header lines (#kind, #title, #x, #y) then one "x,value" row per point.
inline void emit_chart(const ChartSeries& s, std::ostream& os) {
    os << "#kind=" << to_string(s.kind()) << '\n'
       << "#title=" << csv_escape(s.title()) << '\n'
       << "#x=" << csv_escape(s.x_label()) << '\n'
       << "#y=" << csv_escape(s.y_label()) << '\n';
    for (const ChartPoint& p : s.points()) {
        if (const auto* label = std::get_if<std::string>(&p.x)) {
            os << csv_escape(*label);
        } else {
            os << format_chart_number(std::get<double>(p.x));
        }
        os << ',' << format_chart_number(p.y) << '\n';
    }
    if (!os) throw Error("failed to write chart data");
}

}  // namespace algokit::tabular
