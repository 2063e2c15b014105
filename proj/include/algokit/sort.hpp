#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/search.hpp"

namespace algokit {

enum class SortAlgorithm {
    bubble,
    bubble_optimized,
    selection,
    insertion,
    merge,
    merge_bottom_up,
    quick,
    quick_random,
    quick_in_place,
    hybrid,
};

inline constexpr SortAlgorithm all_sort_algorithms[] = {
    SortAlgorithm::bubble,          SortAlgorithm::bubble_optimized, SortAlgorithm::selection,
    SortAlgorithm::insertion,       SortAlgorithm::merge,            SortAlgorithm::merge_bottom_up,
    SortAlgorithm::quick,           SortAlgorithm::quick_random,     SortAlgorithm::quick_in_place,
    SortAlgorithm::hybrid,
};

/// Identifier used on the command line and in benchmark files.
inline std::string_view to_string(SortAlgorithm a) {
    switch (a) {
        case SortAlgorithm::bubble: return "bubble";
        case SortAlgorithm::bubble_optimized: return "bubble-opt";
        case SortAlgorithm::selection: return "selection";
        case SortAlgorithm::insertion: return "insertion";
        case SortAlgorithm::merge: return "merge";
        case SortAlgorithm::merge_bottom_up: return "merge-bottomup";
        case SortAlgorithm::quick: return "quick";
        case SortAlgorithm::quick_random: return "quick-random";
        case SortAlgorithm::quick_in_place: return "quick-inplace";
        case SortAlgorithm::hybrid: return "hybrid";
    }
    return "unknown";
}

inline std::optional<SortAlgorithm> parse_sort_algorithm(std::string_view id) {
    for (SortAlgorithm a : all_sort_algorithms) {
        if (to_string(a) == id) return a;
    }
    return std::nullopt;
}

/// Sorted output plus instrumentation.
///
/// Cost units: a comparison is one key-vs-key ordering test. Bubble, selection and
/// in-place quicksort count swaps of two slots; insertion sort counts one-slot shifts;
/// merge-based and list-partitioning sorts count element writes into merge or
/// partition buffers. `passes` counts outer sweeps for the quadratic sorts, merge
/// operations for merge sorts and partition steps for quicksorts.
template <class T>
struct SortOutcome {
    std::vector<T> output;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps_or_moves = 0;
    std::uint64_t passes = 0;
    SortAlgorithm algorithm = SortAlgorithm::insertion;

    // Only meaningful for quick_in_place: peak number of pending ranges.
    std::uint64_t max_stack_depth = 0;
    // Only meaningful for hybrid: recursion levels that took each branch.
    std::uint64_t quick_levels = 0;
    std::uint64_t merge_levels = 0;
};

/// Key plus an opaque payload; only the key takes part in comparisons.
struct KeyedRecord {
    Key key = 0;
    std::uint64_t tag = 0;

    friend bool operator==(const KeyedRecord&, const KeyedRecord&) = default;
};

struct ByKey {
    bool operator()(const KeyedRecord& a, const KeyedRecord& b) const noexcept { return a.key < b.key; }
};

/// Exact ratio num/den used to configure uneven splits and balance thresholds.
struct Fraction {
    std::int64_t num = 1;
    std::int64_t den = 4;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct PivotStrategy {
    enum class Kind { middle, first, random };

    Kind kind = Kind::middle;
    std::uint64_t seed = 0;

    static PivotStrategy middle() { return {Kind::middle, 0}; }
    static PivotStrategy first() { return {Kind::first, 0}; }
    static PivotStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

namespace detail {

template <class Compare>
class CountingLess {
public:
    CountingLess(Compare comp, std::uint64_t& counter) : comp_(std::move(comp)), counter_(&counter) {}

    template <class A, class B>
    bool operator()(const A& a, const B& b) {
        ++*counter_;
        return comp_(a, b);
    }

private:
    Compare comp_;
    std::uint64_t* counter_;
};

template <class T>
SortOutcome<T> start(std::span<const T> arr, SortAlgorithm algorithm) {
    SortOutcome<T> out;
    out.output.assign(arr.begin(), arr.end());
    out.algorithm = algorithm;
    return out;
}

class PivotPicker {
public:
    explicit PivotPicker(PivotStrategy strategy) : strategy_(strategy), rng_(strategy.seed) {}

    std::size_t pick(std::size_t lo, std::size_t hi) {
        switch (strategy_.kind) {
            case PivotStrategy::Kind::first: return lo;
            case PivotStrategy::Kind::random: return lo + static_cast<std::size_t>(rng_() % (hi - lo));
            case PivotStrategy::Kind::middle: break;
        }
        return lo + (hi - lo) / 2;
    }

private:
    PivotStrategy strategy_;
    std::mt19937_64 rng_;
};

/// Stable merge of a[lo, mid) and a[mid, hi) through buf.
template <class T, class Less>
void merge_runs(std::vector<T>& a, std::vector<T>& buf, std::size_t lo, std::size_t mid, std::size_t hi,
                Less& less, std::uint64_t& moves) {
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t k = lo;
    while (i < mid && j < hi) {
        if (less(a[j], a[i])) {
            buf[k++] = std::move(a[j++]);
        } else {
            buf[k++] = std::move(a[i++]);
        }
    }
    while (i < mid) buf[k++] = std::move(a[i++]);
    while (j < hi) buf[k++] = std::move(a[j++]);
    std::move(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    moves += hi - lo;
}

template <class T, class Less>
void merge_sort_range(std::vector<T>& a, std::vector<T>& buf, std::size_t lo, std::size_t hi, Less& less,
                      SortOutcome<T>& out) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort_range(a, buf, lo, mid, less, out);
    merge_sort_range(a, buf, mid, hi, less, out);
    ++out.passes;
    merge_runs(a, buf, lo, mid, hi, less, out.swaps_or_moves);
}

inline void validate_open_unit(Fraction f, const char* what) {
    if (f.den <= 0 || f.num <= 0 || f.num >= f.den)
        throw ConfigError(std::string(what) + " must lie strictly between 0 and 1");
}

struct MergeStep {
    std::size_t lo, mid, hi;
};

/// Splits [0, n) at lo + ceil(fraction * width) until every run has one element and
/// returns the merges children-first. Uses an explicit stack, no recursion.
inline std::vector<MergeStep> uneven_merge_schedule(std::size_t n, Fraction fraction) {
    std::vector<MergeStep> preorder;
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    if (n >= 2) pending.emplace_back(0, n);
    while (!pending.empty()) {
        const auto [lo, hi] = pending.back();
        pending.pop_back();
        const auto width = static_cast<std::int64_t>(hi - lo);
        std::int64_t left = (fraction.num * width + fraction.den - 1) / fraction.den;
        left = std::clamp<std::int64_t>(left, 1, width - 1);
        const std::size_t mid = lo + static_cast<std::size_t>(left);
        preorder.push_back({lo, mid, hi});
        if (mid - lo >= 2) pending.emplace_back(lo, mid);
        if (hi - mid >= 2) pending.emplace_back(mid, hi);
    }
    // Every parent precedes its children in preorder, so the reverse merges children first.
    std::reverse(preorder.begin(), preorder.end());
    return preorder;
}

template <class T, class Less>
void three_way_lists(const std::vector<T>& v, const T& pivot, Less& less, std::vector<T>& lower,
                     std::vector<T>& equal, std::vector<T>& upper) {
    for (const T& x : v) {
        if (less(x, pivot)) {
            lower.push_back(x);
        } else if (less(pivot, x)) {
            upper.push_back(x);
        } else {
            equal.push_back(x);
        }
    }
}

template <class T>
void concatenate(std::vector<T>& v, std::vector<T>&& lower, std::vector<T>&& equal, std::vector<T>&& upper) {
    v = std::move(lower);
    v.insert(v.end(), std::make_move_iterator(equal.begin()), std::make_move_iterator(equal.end()));
    v.insert(v.end(), std::make_move_iterator(upper.begin()), std::make_move_iterator(upper.end()));
}

template <class T, class Less>
void quick_lists(std::vector<T>& v, PivotPicker& picker, Less& less, SortOutcome<T>& out) {
    if (v.size() <= 1) return;
    ++out.passes;
    const T pivot = v[picker.pick(0, v.size())];
    std::vector<T> lower, equal, upper;
    three_way_lists(v, pivot, less, lower, equal, upper);
    out.swaps_or_moves += v.size();
    quick_lists(lower, picker, less, out);
    quick_lists(upper, picker, less, out);
    concatenate(v, std::move(lower), std::move(equal), std::move(upper));
}

template <class T, class Less>
void quick_in_place(std::vector<T>& a, PivotPicker& picker, Less& less, SortOutcome<T>& out) {
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    if (a.size() >= 2) pending.emplace_back(0, a.size());
    out.max_stack_depth = pending.size();
    while (!pending.empty()) {
        const auto [lo, hi] = pending.back();
        pending.pop_back();
        ++out.passes;
        const T pivot = a[picker.pick(lo, hi)];
        // Invariant: [lo, lt) < pivot, [lt, i) == pivot, [gt, hi) > pivot.
        std::size_t lt = lo;
        std::size_t i = lo;
        std::size_t gt = hi;
        while (i < gt) {
            if (less(a[i], pivot)) {
                if (lt != i) {
                    std::swap(a[lt], a[i]);
                    ++out.swaps_or_moves;
                }
                ++lt;
                ++i;
            } else if (less(pivot, a[i])) {
                --gt;
                if (gt != i) {
                    std::swap(a[i], a[gt]);
                    ++out.swaps_or_moves;
                }
            } else {
                ++i;
            }
        }
        std::pair<std::size_t, std::size_t> left{lo, lt};
        std::pair<std::size_t, std::size_t> right{gt, hi};
        if (left.second - left.first > right.second - right.first) std::swap(left, right);
        // Larger range waits below; the smaller one is processed next, bounding the stack by log2(n).
        if (right.second - right.first >= 2) pending.push_back(right);
        if (left.second - left.first >= 2) pending.push_back(left);
        out.max_stack_depth = std::max<std::uint64_t>(out.max_stack_depth, pending.size());
    }
}

template <class T, class Less>
void hybrid_range(std::vector<T>& v, Fraction threshold, Less& less, SortOutcome<T>& out) {
    const std::size_t n = v.size();
    if (n <= 1) return;
    const T pivot = v[n / 2];
    std::vector<T> lower, equal, upper;
    three_way_lists(v, pivot, less, lower, equal, upper);
    out.swaps_or_moves += n;
    const auto smaller = static_cast<std::int64_t>(std::min(lower.size(), upper.size()));
    if (smaller * threshold.den >= threshold.num * static_cast<std::int64_t>(n)) {
        ++out.quick_levels;
        ++out.passes;
        hybrid_range(lower, threshold, less, out);
        hybrid_range(upper, threshold, less, out);
        concatenate(v, std::move(lower), std::move(equal), std::move(upper));
    } else {
        ++out.merge_levels;
        std::vector<T> buf(n);
        merge_sort_range(v, buf, 0, n, less, out);
    }
}

}  // namespace detail

/// Bubble sort. The plain form makes n - 1 sweeps; the optimized form stops after the
/// first sweep without a swap (so a sorted input costs exactly one pass).
template <class T, class Compare = std::less<>>
SortOutcome<T> bubble_sort(std::span<const T> arr, bool optimized = false, Compare comp = {}) {
    auto out = detail::start(arr, optimized ? SortAlgorithm::bubble_optimized : SortAlgorithm::bubble);
    auto& a = out.output;
    detail::CountingLess less(comp, out.comparisons);
    const std::size_t n = a.size();
    if (!optimized) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ++out.passes;
            for (std::size_t j = 0; j + 1 < n - i; ++j) {
                if (less(a[j + 1], a[j])) {
                    std::swap(a[j], a[j + 1]);
                    ++out.swaps_or_moves;
                }
            }
        }
        return out;
    }
    std::size_t end = n;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        ++out.passes;
        for (std::size_t j = 0; j + 1 < end; ++j) {
            if (less(a[j + 1], a[j])) {
                std::swap(a[j], a[j + 1]);
                ++out.swaps_or_moves;
                swapped = true;
            }
        }
        if (end > 0) --end;
    }
    return out;
}

/// Selection sort; always n(n-1)/2 comparisons. Swaps are counted only when the
/// minimum is not already in place.
template <class T, class Compare = std::less<>>
SortOutcome<T> selection_sort(std::span<const T> arr, Compare comp = {}) {
    auto out = detail::start(arr, SortAlgorithm::selection);
    auto& a = out.output;
    detail::CountingLess less(comp, out.comparisons);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ++out.passes;
        std::size_t min_index = i;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (less(a[j], a[min_index])) min_index = j;
        }
        if (min_index != i) {
            std::swap(a[i], a[min_index]);
            ++out.swaps_or_moves;
        }
    }
    return out;
}

/// Insertion sort by shifting. The shift count equals the number of inversions.
template <class T, class Compare = std::less<>>
SortOutcome<T> insertion_sort(std::span<const T> arr, Compare comp = {}) {
    auto out = detail::start(arr, SortAlgorithm::insertion);
    auto& a = out.output;
    detail::CountingLess less(comp, out.comparisons);
    std::size_t i = 1;
    while (i < a.size()) {
        ++out.passes;
        T current = std::move(a[i]);
        std::size_t j = i;
        while (j > 0 && less(current, a[j - 1])) {
            a[j] = std::move(a[j - 1]);
            ++out.swaps_or_moves;
            --j;
        }
        a[j] = std::move(current);
        ++i;
    }
    return out;
}

/// Number of pairs i < j with arr[j] < arr[i], counted during a merge sort in O(n log n).
template <class T, class Compare = std::less<>>
std::uint64_t count_inversions(std::span<const T> arr, Compare comp = {}) {
    std::vector<T> a(arr.begin(), arr.end());
    std::vector<T> buf(a.size());
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < a.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, a.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (comp(a[j], a[i])) {
                    inversions += mid - i;  // a[j] jumps every remaining left element
                    buf[k++] = a[j++];
                } else {
                    buf[k++] = a[i++];
                }
            }
            while (i < mid) buf[k++] = a[i++];
            while (j < hi) buf[k++] = a[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inversions;
}

/// Top-down merge sort splitting at floor(n/2). Stable.
template <class T, class Compare = std::less<>>
SortOutcome<T> merge_sort(std::span<const T> arr, Compare comp = {}) {
    auto out = detail::start(arr, SortAlgorithm::merge);
    detail::CountingLess less(comp, out.comparisons);
    std::vector<T> buf(out.output.size());
    detail::merge_sort_range(out.output, buf, 0, out.output.size(), less, out);
    return out;
}

/// Iterative merge sort over an uneven run schedule: each range [lo, hi) splits at
/// lo + ceil(split_fraction * (hi - lo)). Stable.
template <class T, class Compare = std::less<>>
SortOutcome<T> merge_sort_bottom_up(std::span<const T> arr, Fraction split_fraction = {1, 4},
                                    Compare comp = {}) {
    detail::validate_open_unit(split_fraction, "split fraction");
    auto out = detail::start(arr, SortAlgorithm::merge_bottom_up);
    detail::CountingLess less(comp, out.comparisons);
    std::vector<T> buf(out.output.size());
    for (const auto& step : detail::uneven_merge_schedule(out.output.size(), split_fraction)) {
        ++out.passes;
        detail::merge_runs(out.output, buf, step.lo, step.mid, step.hi, less, out.swaps_or_moves);
    }
    return out;
}

/// Quicksort. With in_place = false the range is split into less / equal / greater
/// lists around the pivot and the lists are sorted recursively. With in_place = true
/// a three-way partition runs inside the output buffer, driven by an explicit range
/// stack whose depth stays O(log n). Random pivots are reproducible from the seed.
template <class T, class Compare = std::less<>>
SortOutcome<T> quick_sort(std::span<const T> arr, PivotStrategy pivot = PivotStrategy::middle(),
                          bool in_place = false, Compare comp = {}) {
    SortAlgorithm id = SortAlgorithm::quick;
    if (in_place) {
        id = SortAlgorithm::quick_in_place;
    } else if (pivot.kind == PivotStrategy::Kind::random) {
        id = SortAlgorithm::quick_random;
    }
    auto out = detail::start(arr, id);
    detail::CountingLess less(comp, out.comparisons);
    detail::PivotPicker picker(pivot);
    if (in_place) {
        detail::quick_in_place(out.output, picker, less, out);
    } else {
        detail::quick_lists(out.output, picker, less, out);
    }
    return out;
}

/// Merge sort that defers to quicksort while the middle element is a balanced pivot.
/// A level is balanced when min(|less|, |greater|) >= balance_threshold * n; otherwise
/// the partition is discarded and the range is merge-sorted.
template <class T, class Compare = std::less<>>
SortOutcome<T> hybrid_merge_quick(std::span<const T> arr, Fraction balance_threshold = {1, 4},
                                  Compare comp = {}) {
    if (balance_threshold.den <= 0 || balance_threshold.num <= 0 ||
        2 * balance_threshold.num > balance_threshold.den)
        throw ConfigError("balance threshold must lie in (0, 1/2]");
    auto out = detail::start(arr, SortAlgorithm::hybrid);
    detail::CountingLess less(comp, out.comparisons);
    detail::hybrid_range(out.output, balance_threshold, less, out);
    return out;
}

/// Dispatch by identifier with each algorithm's default configuration.
/// `seed` only affects quick_random.
template <class T, class Compare = std::less<>>
SortOutcome<T> run_sort(SortAlgorithm algorithm, std::span<const T> arr, std::uint64_t seed = 0,
                        Compare comp = {}) {
    switch (algorithm) {
        case SortAlgorithm::bubble: return bubble_sort(arr, false, comp);
        case SortAlgorithm::bubble_optimized: return bubble_sort(arr, true, comp);
        case SortAlgorithm::selection: return selection_sort(arr, comp);
        case SortAlgorithm::insertion: return insertion_sort(arr, comp);
        case SortAlgorithm::merge: return merge_sort(arr, comp);
        case SortAlgorithm::merge_bottom_up: return merge_sort_bottom_up(arr, Fraction{1, 4}, comp);
        case SortAlgorithm::quick: return quick_sort(arr, PivotStrategy::middle(), false, comp);
        case SortAlgorithm::quick_random: return quick_sort(arr, PivotStrategy::random(seed), false, comp);
        case SortAlgorithm::quick_in_place: return quick_sort(arr, PivotStrategy::middle(), true, comp);
        case SortAlgorithm::hybrid: return hybrid_merge_quick(arr, Fraction{1, 4}, comp);
    }
    throw DomainError("unknown sort algorithm");
}

// KeySequence conveniences.

inline SortOutcome<Key> bubble_sort(const KeySequence& arr, bool optimized = false) {
    return bubble_sort(std::span<const Key>(arr), optimized);
}
inline SortOutcome<Key> selection_sort(const KeySequence& arr) { return selection_sort(std::span<const Key>(arr)); }
inline SortOutcome<Key> insertion_sort(const KeySequence& arr) { return insertion_sort(std::span<const Key>(arr)); }
inline std::uint64_t count_inversions(const KeySequence& arr) { return count_inversions(std::span<const Key>(arr)); }
inline SortOutcome<Key> merge_sort(const KeySequence& arr) { return merge_sort(std::span<const Key>(arr)); }
inline SortOutcome<Key> merge_sort_bottom_up(const KeySequence& arr, Fraction split_fraction = {1, 4}) {
    return merge_sort_bottom_up(std::span<const Key>(arr), split_fraction);
}
inline SortOutcome<Key> quick_sort(const KeySequence& arr, PivotStrategy pivot = PivotStrategy::middle(),
                                   bool in_place = false) {
    return quick_sort(std::span<const Key>(arr), pivot, in_place);
}
inline SortOutcome<Key> hybrid_merge_quick(const KeySequence& arr, Fraction balance_threshold = {1, 4}) {
    return hybrid_merge_quick(std::span<const Key>(arr), balance_threshold);
}
inline SortOutcome<Key> run_sort(SortAlgorithm algorithm, const KeySequence& arr, std::uint64_t seed = 0) {
    return run_sort(algorithm, std::span<const Key>(arr), seed);
}

}  // namespace algokit
