#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "algokit/checked.hpp"
#include "algokit/error.hpp"

namespace algokit::asymptotics {

/// Exact non-negative rational in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {  // NOLINT
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_mul(num_, -1);
            den_ = checked_mul(den_, -1);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    long double value() const { return static_cast<long double>(num_) / static_cast<long double>(den_); }

    friend Rational operator+(Rational a, Rational b) {
        return {checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)), checked_mul(a.den_, b.den_)};
    }
    friend Rational operator*(Rational a, Rational b) {
        return {checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_)};
    }
    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        // 128-bit cross multiplication cannot overflow for 64-bit operands.
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    std::string to_string() const {
        return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// coefficient * base^n * n^poly * (log2 n)^log. A base of 1 means no exponential factor.
struct Term {
    Rational coefficient{1};
    Rational base{1};
    Rational poly{0};
    Rational log{0};

    /// Growth class key; larger means asymptotically faster.
    auto dominance() const { return std::tie(base, poly, log); }

    friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of terms in canonical form: like terms merged, ordered from the most
/// to the least dominant. Never empty.
class GrowthExpr {
public:
    explicit GrowthExpr(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

    const std::vector<Term>& terms() const { return terms_; }
    const Term& dominant() const { return terms_.front(); }

    friend bool operator==(const GrowthExpr&, const GrowthExpr&) = default;

private:
    void canonicalize() {
        std::erase_if(terms_, [](const Term& t) { return t.coefficient.num() == 0; });
        if (terms_.empty()) throw DomainError("growth expression is identically zero");
        std::stable_sort(terms_.begin(), terms_.end(),
                         [](const Term& a, const Term& b) { return a.dominance() > b.dominance(); });
        std::vector<Term> merged;
        for (const Term& t : terms_) {
            if (!merged.empty() && merged.back().dominance() == t.dominance()) {
                merged.back().coefficient = merged.back().coefficient + t.coefficient;
            } else {
                merged.push_back(t);
            }
        }
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    GrowthExpr parse() {
        std::vector<Term> terms;
        terms.push_back(term());
        skip_space();
        while (pos_ < src_.size() && src_[pos_] == '+') {
            ++pos_;
            terms.push_back(term());
            skip_space();
        }
        if (pos_ != src_.size()) throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'", pos_);
        return GrowthExpr(std::move(terms));
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_factor_start() {
        skip_space();
        if (pos_ >= src_.size()) return false;
        const char c = src_[pos_];
        return c == 'n' || std::isdigit(static_cast<unsigned char>(c)) || c == '.' || keyword_ahead("log") ||
               keyword_ahead("sqrt");
    }

    bool keyword_ahead(std::string_view kw) const { return src_.substr(pos_, kw.size()) == kw; }

    void expect(char c, const char* what) {
        skip_space();
        if (pos_ >= src_.size() || src_[pos_] != c) throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // 'n' or '(' 'n' ')' after log / sqrt.
    void variable_argument() {
        if (accept('(')) {
            expect('n', "'n'");
            expect(')', "')'");
        } else {
            expect('n', "'n'");
        }
    }

    Term term() {
        Term t;
        if (!at_factor_start()) throw ParseError("expected a term", pos_);
        factor(t);
        for (;;) {
            if (accept('*')) {
                if (!at_factor_start()) throw ParseError("expected a factor after '*'", pos_);
                factor(t);
            } else if (at_factor_start()) {
                factor(t);  // juxtaposition, e.g. "n log n" or "3n"
            } else {
                return t;
            }
        }
    }

    void factor(Term& t) {
        skip_space();
        if (keyword_ahead("log")) {
            pos_ += 3;
            variable_argument();
            t.log = t.log + optional_exponent();
        } else if (keyword_ahead("sqrt")) {
            pos_ += 4;
            variable_argument();
            t.poly = t.poly + Rational(1, 2);
        } else if (src_[pos_] == 'n') {
            ++pos_;
            t.poly = t.poly + optional_exponent();
        } else {
            const std::size_t start = pos_;
            const Rational r = rational();
            if (accept('^')) {
                expect('n', "'n' as the exponent of an exponential");
                if (r <= Rational(1)) throw ParseError("exponential base must exceed 1", start);
                t.base = t.base * r;
            } else {
                t.coefficient = t.coefficient * r;
            }
        }
    }

    Rational optional_exponent() {
        if (accept('^')) return rational();
        return Rational(1);
    }

    Rational rational() {
        skip_space();
        Rational r = decimal();
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            const std::size_t at = pos_;
            const Rational d = decimal();
            if (d.num() == 0) throw ParseError("division by zero", at);
            r = r * Rational(d.den(), d.num());
        }
        return r;
    }

    Rational decimal() {
        skip_space();
        const std::size_t start = pos_;
        std::int64_t mantissa = 0;
        std::int64_t scale = 1;
        std::size_t digits = 0;
        bool seen_point = false;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (++digits > 18) throw ParseError("number has too many digits", start);
                mantissa = mantissa * 10 + (c - '0');
                if (seen_point) scale *= 10;
            } else if (c == '.' && !seen_point) {
                seen_point = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (digits == 0) throw ParseError("expected a number", start);
        return Rational(mantissa, scale);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline std::string render_term(const Term& t) {
    std::vector<std::string> parts;
    if (t.base != Rational(1)) parts.push_back(t.base.to_string() + "^n");
    if (t.poly != Rational(0)) parts.push_back(t.poly == Rational(1) ? "n" : "n^" + t.poly.to_string());
    if (t.log != Rational(0)) parts.push_back(t.log == Rational(1) ? "log n" : "log n^" + t.log.to_string());
    if (t.coefficient != Rational(1) || parts.empty()) parts.insert(parts.begin(), t.coefficient.to_string());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += '*';
        out += parts[i];
    }
    return out;
}

}  // namespace detail

/// Parses a growth expression, e.g. "2*n + 1", "n^2 + 3n", "n log n", "2^n", "n^1/2".
///
///   expr     := term ('+' term)*
///   term     := factor (['*'] factor)*
///   factor   := 'n' ['^' rational] | 'log' n-arg ['^' rational] | 'sqrt' n-arg
///             | rational '^' 'n' | rational
///   n-arg    := 'n' | '(' 'n' ')'
///   rational := decimal ['/' decimal]
///
/// `log n^q` means (log2 n)^q. Exponential bases must exceed 1.
inline GrowthExpr parse_expr(std::string_view src) { return detail::ExprParser(src).parse(); }

/// Canonical text; parse_expr(render(e)) == e.
inline std::string render(const GrowthExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms().size(); ++i) {
        if (i > 0) out += " + ";
        out += detail::render_term(e.terms()[i]);
    }
    return out;
}

/// log2 f(n) for n >= 1, or -infinity where f(n) = 0 (log factors vanish at n = 1).
/// Working in the log domain keeps exponentials finite up to n = 10^6 and beyond.
inline long double log2_value(const GrowthExpr& e, long double n) {
    constexpr long double neg_inf = -std::numeric_limits<long double>::infinity();
    const long double lg_n = std::log2(n);
    std::vector<long double> logs;
    logs.reserve(e.terms().size());
    for (const Term& t : e.terms()) {
        long double l = std::log2(t.coefficient.value());
        if (t.base != Rational(1)) l += n * std::log2(t.base.value());
        if (t.poly != Rational(0)) l += t.poly.value() * lg_n;
        if (t.log != Rational(0)) {
            if (lg_n <= 0) {
                l = neg_inf;
            } else {
                l += t.log.value() * std::log2(lg_n);
            }
        }
        logs.push_back(l);
    }
    const long double peak = *std::max_element(logs.begin(), logs.end());
    if (peak == neg_inf) return neg_inf;
    long double acc = 0;
    for (long double l : logs) acc += std::exp2(l - peak);
    return peak + std::log2(acc);
}

/// f(n) in double precision; may be +infinity for large exponentials.
inline double evaluate(const GrowthExpr& e, double n) {
    return static_cast<double>(std::exp2(log2_value(e, static_cast<long double>(n))));
}

}  // namespace algokit::asymptotics
