#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/checked.hpp"
#include "algokit/error.hpp"
#include "algokit/search.hpp"
#include "algokit/utf8.hpp"

namespace algokit::classics {

/// Recursive formulation versus loop formulation of the same exercise.
enum class Mode { recursive, iterative };

// --- number theory -------------------------------------------------------------

namespace detail {

inline std::int64_t factorial_recursive(std::int64_t n) {
    if (n == 0) return 1;
    return checked_mul(n, factorial_recursive(n - 1), "factorial");
}

inline std::int64_t fibonacci_recursive(std::int64_t n) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    return fibonacci_recursive(n - 1) + fibonacci_recursive(n - 2);
}

}  // namespace detail

inline constexpr std::int64_t max_factorial_argument = 20;
inline constexpr std::int64_t max_recursive_fibonacci_argument = 30;

/// n! for 0 <= n <= 20. Larger n overflow 64 bits.
inline std::int64_t factorial(std::int64_t n, Mode mode = Mode::recursive) {
    if (n < 0) throw DomainError("factorial is undefined for negative n");
    if (n > max_factorial_argument) throw OverflowError("factorial(n) overflows 64 bits for n > 20");
    if (mode == Mode::recursive) return detail::factorial_recursive(n);
    std::int64_t product = 1;
    for (std::int64_t k = 2; k <= n; ++k) product = checked_mul(product, k, "factorial");
    return product;
}

/// F(0) = 0, F(1) = 1. The recursive mode is exponential and limited to n <= 30.
inline std::int64_t fibonacci(std::int64_t n, Mode mode = Mode::iterative) {
    if (n < 0) throw DomainError("fibonacci is undefined for negative n");
    if (mode == Mode::recursive) {
        if (n > max_recursive_fibonacci_argument)
            throw DomainError("recursive fibonacci is limited to n <= 30");
        return detail::fibonacci_recursive(n);
    }
    std::int64_t prev = 0;
    std::int64_t cur = 1;
    if (n == 0) return 0;
    for (std::int64_t k = 1; k < n; ++k) {
        const std::int64_t next = checked_add(prev, cur, "fibonacci");
        prev = cur;
        cur = next;
    }
    return cur;
}

/// base^exp by recursive halving of the exponent; base^0 = 1.
inline std::int64_t power(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw DomainError("power requires a non-negative exponent");
    if (exp == 0) return 1;
    const std::int64_t half = power(base, exp / 2);
    std::int64_t result = checked_mul(half, half, "power");
    if (exp % 2 == 1) result = checked_mul(result, base, "power");
    return result;
}

inline std::int64_t sum_of_digits(std::int64_t n) {
    if (n < 0) throw DomainError("sum_of_digits requires n >= 0");
    if (n < 10) return n;
    return n % 10 + sum_of_digits(n / 10);
}

/// Euclid: gcd(a, 0) = a, gcd(a, b) = gcd(b, a mod b).
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw DomainError("gcd requires non-negative arguments");
    if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
    if (b == 0) return a;
    return gcd(b, a % b);
}

/// Recursive list sum (head + sum of tail).
inline std::int64_t sum_list(std::span<const std::int64_t> numbers) {
    if (numbers.empty()) return 0;
    return checked_add(numbers.front(), sum_list(numbers.subspan(1)), "sum_list");
}

inline bool is_even(std::int64_t n) { return n % 2 == 0; }
inline bool is_odd(std::int64_t n) { return n % 2 != 0; }

inline bool divisible_by(std::int64_t n, std::int64_t t) {
    if (t == 0) throw DomainError("divisibility by zero is undefined");
    if (t == -1) return true;  // INT64_MIN % -1 is undefined behaviour
    return n % t == 0;
}

/// Trial division by every d with d * d <= n.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Prime factorisation by trial division, non-decreasing.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 2) throw DomainError("prime_factors requires n >= 2");
    std::vector<std::int64_t> factors;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        while (n % d == 0) {
            factors.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

inline std::int64_t sum_primes(std::span<const std::int64_t> values) {
    std::int64_t total = 0;
    for (std::int64_t x : values) {
        if (is_prime(x)) total = checked_add(total, x, "sum_primes");
    }
    return total;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    if (n < 0) throw DomainError("primes_up_to requires n >= 0");
    std::vector<std::int64_t> primes;
    for (std::int64_t k = 2; k <= n; ++k) {
        if (is_prime(k)) primes.push_back(k);
    }
    return primes;
}

// --- strings -----------------------------------------------------------------

/// Reverses `s`, then maps every code point c to c + 1 (no wraparound: 'z' -> '{').
inline std::string reverse_shift(std::string_view s) {
    std::u32string cps = utf8::decode(s);
    std::reverse(cps.begin(), cps.end());
    for (char32_t& c : cps) {
        const char32_t shifted = c + 1;
        if (!utf8::is_scalar_value(shifted)) throw DomainError("shifted code point is not a valid character");
        c = shifted;
    }
    return utf8::encode(cps);
}

/// Sum of the code points of `s`.
inline std::int64_t ascii_sum(std::string_view s) {
    std::int64_t total = 0;
    for (char32_t c : utf8::decode(s)) total += static_cast<std::int64_t>(c);
    return total;
}

namespace detail {

inline bool is_palindrome_recursive(std::u32string_view s) {
    if (s.size() < 2) return true;
    if (s.front() != s.back()) return false;
    return is_palindrome_recursive(s.substr(1, s.size() - 2));
}

}  // namespace detail

/// Exact code-point comparison with the reversal; no case folding.
inline bool is_palindrome(std::string_view s, Mode mode = Mode::recursive) {
    const std::u32string cps = utf8::decode(s);
    if (mode == Mode::recursive) return detail::is_palindrome_recursive(cps);
    const std::size_t n = cps.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (cps[i] != cps[n - 1 - i]) return false;
    }
    return true;
}

inline std::vector<int> digits_to_list(std::string_view s) {
    if (s.empty()) throw ParseError("digit string is empty", 0);
    std::vector<int> digits;
    digits.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("non-digit character in digit string", i);
        digits.push_back(s[i] - '0');
    }
    return digits;
}

inline std::string list_to_digits(std::span<const int> digits) {
    if (digits.empty()) throw DomainError("digit list is empty");
    std::string s;
    s.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d > 9) throw DomainError("list element is not a single decimal digit");
        s.push_back(static_cast<char>('0' + d));
    }
    return s;
}

// --- recursion puzzles -------------------------------------------------------------

struct Move {
    int disk;
    char from;
    char to;

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveList = std::vector<Move>;

inline constexpr int max_hanoi_disks = 20;

namespace detail {

inline void hanoi(int n, char from, char via, char to, MoveList& moves) {
    if (n == 0) return;
    hanoi(n - 1, from, to, via, moves);
    moves.push_back({n, from, to});
    hanoi(n - 1, via, from, to, moves);
}

}  // namespace detail

/// Moves n disks from peg A to peg C via B; 2^n - 1 moves.
inline MoveList hanoi(int n) {
    if (n < 1 || n > max_hanoi_disks) throw DomainError("hanoi requires 1 <= n <= 20");
    MoveList moves;
    moves.reserve((std::size_t{1} << n) - 1);
    detail::hanoi(n, 'A', 'B', 'C', moves);
    return moves;
}

/// "move disk 1: A -> C"
inline std::string to_string(const Move& m) {
    return "move disk " + std::to_string(m.disk) + ": " + m.from + " -> " + m.to;
}

inline constexpr int max_grid_path_steps = 16;

namespace detail {

inline void grid_paths(int down_left, int right_left, std::string& prefix, std::vector<std::string>& out) {
    if (down_left == 0 && right_left == 0) {
        out.push_back(prefix);
        return;
    }
    if (right_left > 0) {
        prefix.push_back('R');
        grid_paths(down_left, right_left - 1, prefix, out);
        prefix.pop_back();
    }
    if (down_left > 0) {
        prefix.push_back('D');
        grid_paths(down_left - 1, right_left, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All monotone paths across an m-row, n-column grid of unit cells, as strings of
/// 'R' (one cell right) and 'D' (one cell down). Each path has m 'D' and n 'R'.
inline std::vector<std::string> grid_paths(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("grid_paths requires m >= 1 and n >= 1");
    if (m + n > max_grid_path_steps) throw DomainError("grid_paths enumeration bound m + n <= 16 exceeded");
    std::vector<std::string> out;
    std::string prefix;
    detail::grid_paths(m, n, prefix, out);
    return out;
}

// --- matrices ----------------------------------------------------------------------

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count must equal rows * cols");
    }

    /// Builds from nested rows; all rows must share a length.
    static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<std::int64_t> entries;
        entries.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols) throw DomainError("ragged matrix rows");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return Matrix(rows.size(), cols, std::move(entries));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<const std::int64_t> entries() const { return entries_; }

    std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> entries_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    }
    return t;
}

/// Triple-loop product with checked 64-bit accumulation.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matmul dimension mismatch: a.cols != b.rows");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = checked_add(acc, checked_mul(a(i, k), b(k, j), "matmul"), "matmul");
            c(i, j) = acc;
        }
    }
    return c;
}

// --- renderers -----------------------------------------------------------------------

/// Row k holds k copies of `fill` separated by single spaces; rows joined by '\n',
/// no trailing whitespace or newline.
inline std::string character_pyramid(int n, std::string_view fill) {
    if (n < 1) throw DomainError("pyramid height must be >= 1");
    std::string out;
    for (int row = 1; row <= n; ++row) {
        if (row > 1) out += '\n';
        for (int k = 0; k < row; ++k) {
            if (k > 0) out += ' ';
            out += fill;
        }
    }
    return out;
}

inline std::string star_pyramid(int n) { return character_pyramid(n, "*"); }

/// Rows i = 1..limit of i*j for j = 1..limit, right-aligned to the widest entry and
/// separated by one space.
inline std::string multiplication_table(int limit) {
    if (limit < 1) throw DomainError("multiplication table limit must be >= 1");
    const std::int64_t largest = checked_mul(limit, limit, "multiplication_table");
    const std::size_t width = std::to_string(largest).size();
    std::string out;
    for (std::int64_t i = 1; i <= limit; ++i) {
        if (i > 1) out += '\n';
        for (std::int64_t j = 1; j <= limit; ++j) {
            if (j > 1) out += ' ';
            const std::string cell = std::to_string(i * j);
            out.append(width - cell.size(), ' ');
            out += cell;
        }
    }
    return out;
}

struct IterSummary {
    std::int64_t sum = 0;
    std::vector<std::int64_t> evens;
    std::int64_t sum_of_squares = 0;
    std::string countdown;
};

/// Loop exercises over 1..n: running sum, even numbers, sum of squares, and a
/// countdown from n to 1 (one number per line).
inline IterSummary iter_suite(std::int64_t n) {
    if (n < 1) throw DomainError("iter_suite requires n >= 1");
    IterSummary s;
    for (std::int64_t k = 1; k <= n; ++k) {
        s.sum = checked_add(s.sum, k, "iter_suite sum");
        if (k % 2 == 0) s.evens.push_back(k);
        s.sum_of_squares = checked_add(s.sum_of_squares, checked_mul(k, k, "iter_suite"), "iter_suite squares");
    }
    for (std::int64_t k = n; k >= 1; --k) {
        s.countdown += std::to_string(k);
        if (k > 1) s.countdown += '\n';
    }
    return s;
}

}  // namespace algokit::classics
