#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/sort.hpp"
#include "algokit/utf8.hpp"

namespace algokit {

/// Characters of `s` in non-decreasing code-point order, via insertion sort.
inline std::string sort_text(std::string_view s) {
    const std::u32string cps = utf8::decode(s);
    auto sorted = insertion_sort(std::span<const char32_t>(cps));
    return utf8::encode(std::u32string_view(sorted.output.data(), sorted.output.size()));
}

/// A finite tree whose leaves are integers and whose inner nodes are sequences.
class Nested {
public:
    using List = std::vector<Nested>;

    Nested() : value_(List{}) {}
    Nested(Key leaf) : value_(leaf) {}  // NOLINT(google-explicit-constructor)
    Nested(List items) : value_(std::move(items)) {}  // NOLINT(google-explicit-constructor)

    bool is_leaf() const { return std::holds_alternative<Key>(value_); }
    Key leaf() const { return std::get<Key>(value_); }
    const List& list() const { return std::get<List>(value_); }
    List& list() { return std::get<List>(value_); }

    /// Total order: integers precede sequences, integers compare numerically,
    /// sequences compare lexicographically.
    friend std::strong_ordering operator<=>(const Nested& a, const Nested& b) {
        if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_leaf()) return a.leaf() <=> b.leaf();
        return std::lexicographical_compare_three_way(a.list().begin(), a.list().end(), b.list().begin(),
                                                      b.list().end());
    }
    friend bool operator==(const Nested& a, const Nested& b) { return (a <=> b) == 0; }

private:
    std::variant<Key, List> value_;
};

/// Sorts every sequence at every depth: children first, then the enclosing sequence
/// with optimized bubble sort under Nested's ordering.
inline Nested deep_bubble_sort(const Nested& nested) {
    if (nested.is_leaf()) return nested;
    Nested::List items;
    items.reserve(nested.list().size());
    for (const Nested& child : nested.list()) items.push_back(deep_bubble_sort(child));
    auto sorted = bubble_sort(std::span<const Nested>(items), true);
    return Nested(std::move(sorted.output));
}

namespace detail {

class NestedParser {
public:
    explicit NestedParser(std::string_view src) : src_(src) {}

    Nested parse() {
        Nested result = value();
        skip_space();
        if (pos_ != src_.size()) throw ParseError("trailing characters after nested list", pos_);
        return result;
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    Nested value() {
        skip_space();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of nested list", pos_);
        if (src_[pos_] == '[') return list();
        Key k = 0;
        const char* first = src_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, src_.data() + src_.size(), k);
        if (ec != std::errc{}) throw ParseError("expected integer or '['", pos_);
        pos_ += static_cast<std::size_t>(ptr - first);
        return Nested(k);
    }

    Nested list() {
        ++pos_;  // '['
        Nested::List items;
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == ']') {
            ++pos_;
            return Nested(std::move(items));
        }
        for (;;) {
            items.push_back(value());
            skip_space();
            if (pos_ >= src_.size()) throw ParseError("unterminated nested list", pos_);
            if (src_[pos_] == ']') {
                ++pos_;
                return Nested(std::move(items));
            }
            if (src_[pos_] != ',') throw ParseError("expected ',' or ']'", pos_);
            ++pos_;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses bracket notation such as "[[2, 1], [0], 5]".
inline Nested parse_nested(std::string_view src) { return detail::NestedParser(src).parse(); }

inline std::string to_string(const Nested& nested) {
    if (nested.is_leaf()) return std::to_string(nested.leaf());
    std::string out = "[";
    bool first = true;
    for (const Nested& child : nested.list()) {
        if (!first) out += ", ";
        first = false;
        out += to_string(child);
    }
    out += ']';
    return out;
}

}  // namespace algokit
