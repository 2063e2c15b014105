#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "algokit/checked.hpp"
#include "algokit/error.hpp"

namespace algokit {

using Key = std::int64_t;
using KeySequence = std::vector<Key>;

/// Outcome of a membership search. Absence is explicit; there is no -1 sentinel here.
struct SearchResult {
    std::optional<std::size_t> index;

    bool found() const noexcept { return index.has_value(); }

    static SearchResult at(std::size_t i) { return SearchResult{i}; }
    static SearchResult absent() { return SearchResult{}; }

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Left-to-right scan; reports the first occurrence.
template <std::equality_comparable T>
SearchResult linear_search(std::span<const T> arr, const std::type_identity_t<T>& target) {
    std::size_t i = 0;
    while (i < arr.size()) {
        if (arr[i] == target) return SearchResult::at(i);
        ++i;
    }
    return SearchResult::absent();
}

template <std::equality_comparable T>
std::size_t count_linear(std::span<const T> arr, const std::type_identity_t<T>& target) {
    std::size_t count = 0;
    for (const T& x : arr) {
        if (x == target) ++count;
    }
    return count;
}

/// Sum of all keys. Throws OverflowError instead of wrapping.
inline Key sum_linear(std::span<const Key> arr) {
    Key total = 0;
    for (Key x : arr) total = checked_add(total, x, "sum_linear");
    return total;
}

struct BinarySearchOptions {
    /// O(n) sortedness precheck; throws DomainError when the input is not non-decreasing.
    bool verify_sorted = false;
};

struct BinarySearchTrace {
    SearchResult result;
    std::size_t iterations = 0;
};

namespace detail {

template <std::totally_ordered T>
void require_sorted(std::span<const T> arr) {
    if (!std::is_sorted(arr.begin(), arr.end()))
        throw DomainError("binary search requires a non-decreasing sequence");
}

}  // namespace detail

/// Closed-interval binary search with midpoint floor((low + high) / 2).
/// Returns some matching index, not necessarily the first.
template <std::totally_ordered T>
BinarySearchTrace binary_search_traced(std::span<const T> arr, const std::type_identity_t<T>& target,
                                       BinarySearchOptions options = {}) {
    if (options.verify_sorted) detail::require_sorted(arr);
    BinarySearchTrace trace;
    std::ptrdiff_t low = 0;
    std::ptrdiff_t high = static_cast<std::ptrdiff_t>(arr.size()) - 1;
    while (low <= high) {
        ++trace.iterations;
        const std::ptrdiff_t mid = low + (high - low) / 2;
        const T& probe = arr[static_cast<std::size_t>(mid)];
        if (probe == target) {
            trace.result = SearchResult::at(static_cast<std::size_t>(mid));
            return trace;
        }
        if (probe < target) {
            low = mid + 1;
        } else {
            high = mid - 1;
        }
    }
    return trace;
}

template <std::totally_ordered T>
SearchResult binary_search(std::span<const T> arr, const std::type_identity_t<T>& target, BinarySearchOptions options = {}) {
    return binary_search_traced(arr, target, options).result;
}

namespace detail {

template <std::totally_ordered T>
SearchResult binary_search_recursive(std::span<const T> arr, const std::type_identity_t<T>& target, std::ptrdiff_t low,
                                     std::ptrdiff_t high) {
    if (low > high) return SearchResult::absent();
    const std::ptrdiff_t mid = low + (high - low) / 2;
    const T& probe = arr[static_cast<std::size_t>(mid)];
    if (probe == target) return SearchResult::at(static_cast<std::size_t>(mid));
    if (probe < target) return binary_search_recursive(arr, target, mid + 1, high);
    return binary_search_recursive(arr, target, low, mid - 1);
}

}  // namespace detail

/// Same contract and probe sequence as binary_search, expressed recursively.
template <std::totally_ordered T>
SearchResult binary_search_recursive(std::span<const T> arr, const std::type_identity_t<T>& target,
                                     BinarySearchOptions options = {}) {
    if (options.verify_sorted) detail::require_sorted(arr);
    return detail::binary_search_recursive(arr, target, 0, static_cast<std::ptrdiff_t>(arr.size()) - 1);
}

/// Smallest i with arr[i] >= target, or arr.size().
template <std::totally_ordered T>
std::size_t lower_bound(std::span<const T> arr, const std::type_identity_t<T>& target) {
    std::size_t lo = 0;
    std::size_t hi = arr.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (arr[mid] < target) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

/// Smallest i with arr[i] > target, or arr.size().
template <std::totally_ordered T>
std::size_t upper_bound(std::span<const T> arr, const std::type_identity_t<T>& target) {
    std::size_t lo = 0;
    std::size_t hi = arr.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (target < arr[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

/// Occurrence count in a sorted sequence using two logarithmic probes.
template <std::totally_ordered T>
std::size_t count_binary(std::span<const T> arr, const std::type_identity_t<T>& target) {
    return upper_bound(arr, target) - lower_bound(arr, target);
}

/// Minimum of a rotated strictly increasing sequence in O(log n) probes.
/// Duplicate keys are out of contract.
template <std::totally_ordered T>
T rotated_min(std::span<const T> arr) {
    if (arr.empty()) throw DomainError("empty sequence");
    std::size_t lo = 0;
    std::size_t hi = arr.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (arr[hi] < arr[mid]) {
            lo = mid + 1;  // the drop lies right of mid
        } else {
            hi = mid;
        }
    }
    return arr[lo];
}

// Convenience overloads so callers can pass a KeySequence directly.

inline SearchResult linear_search(const KeySequence& arr, Key target) {
    return linear_search(std::span<const Key>(arr), target);
}
inline std::size_t count_linear(const KeySequence& arr, Key target) {
    return count_linear(std::span<const Key>(arr), target);
}
inline SearchResult binary_search(const KeySequence& arr, Key target, BinarySearchOptions options = {}) {
    return binary_search(std::span<const Key>(arr), target, options);
}
inline std::size_t lower_bound(const KeySequence& arr, Key target) {
    return lower_bound(std::span<const Key>(arr), target);
}
inline std::size_t count_binary(const KeySequence& arr, Key target) {
    return count_binary(std::span<const Key>(arr), target);
}
inline Key rotated_min(const KeySequence& arr) { return rotated_min(std::span<const Key>(arr)); }

}  // namespace algokit
