#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/asymptotics/expr.hpp"
#include "algokit/error.hpp"

namespace algokit::asymptotics {

enum class Relation : unsigned { big_o = 1, little_o = 2, theta = 4, big_omega = 8, little_omega = 16 };

inline constexpr Relation all_relations[] = {Relation::big_o, Relation::little_o, Relation::theta,
                                             Relation::big_omega, Relation::little_omega};

inline std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::big_o: return "O";
        case Relation::little_o: return "o";
        case Relation::theta: return "Theta";
        case Relation::big_omega: return "Omega";
        case Relation::little_omega: return "omega";
    }
    return "?";
}

/// Small bit set over the five relations.
class RelationSet {
public:
    constexpr RelationSet() = default;
    constexpr RelationSet(std::initializer_list<Relation> rs) {
        for (Relation r : rs) insert(r);
    }

    constexpr void insert(Relation r) { bits_ |= static_cast<unsigned>(r); }
    constexpr bool contains(Relation r) const { return (bits_ & static_cast<unsigned>(r)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }

    friend constexpr bool operator==(RelationSet, RelationSet) = default;

    /// Space-separated names in O, o, Theta, Omega, omega order.
    std::string to_string() const {
        std::string out;
        for (Relation r : all_relations) {
            if (!contains(r)) continue;
            if (!out.empty()) out += ' ';
            out += algokit::asymptotics::to_string(r);
        }
        return out;
    }

private:
    unsigned bits_ = 0;
};

/// Limiting behaviour of f(n) / g(n).
enum class RatioLimit { zero, finite_positive, infinite };

inline std::string_view to_string(RatioLimit r) {
    switch (r) {
        case RatioLimit::zero: return "zero";
        case RatioLimit::finite_positive: return "finite-positive";
        case RatioLimit::infinite: return "infinite";
    }
    return "?";
}

enum class Bound { upper, lower };

/// Constants for f(n) <= c*g(n) (upper) or f(n) >= c*g(n) (lower) for all n >= n0.
struct Witness {
    double c = 1.0;
    std::uint64_t n0 = 1;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct GrowthVerdict {
    RelationSet relations;
    RatioLimit ratio = RatioLimit::finite_positive;
    std::optional<Witness> upper;
    std::optional<Witness> lower;

    bool holds(Relation r) const { return relations.contains(r); }
};

/// Symbolic classification by comparing dominant terms on (exponential base,
/// polynomial exponent, log exponent), lexicographically.
inline GrowthVerdict classify(const GrowthExpr& f, const GrowthExpr& g) {
    GrowthVerdict v;
    const auto fd = f.dominant().dominance();
    const auto gd = g.dominant().dominance();
    if (fd < gd) {
        v.ratio = RatioLimit::zero;
        v.relations = {Relation::big_o, Relation::little_o};
    } else if (fd > gd) {
        v.ratio = RatioLimit::infinite;
        v.relations = {Relation::big_omega, Relation::little_omega};
    } else {
        v.ratio = RatioLimit::finite_positive;
        v.relations = {Relation::big_o, Relation::big_omega, Relation::theta};
    }
    return v;
}

inline bool admits(const GrowthVerdict& v, Bound bound) {
    return v.holds(bound == Bound::upper ? Relation::big_o : Relation::big_omega);
}

/// Slack, in log2 units, absorbed when comparing f against c*g in floating point.
inline constexpr long double witness_log2_tolerance = 1e-9L;
/// Every integer up to this value is sampled; beyond it the grid doubles.
inline constexpr std::uint64_t dense_sample_limit = 1024;
inline constexpr std::uint64_t default_witness_horizon = 1'000'000;

/// Sample points in [max(n0, 1), n_max]: every integer up to 1024, then a doubling grid
/// 2048, 4096, ..., and finally n_max itself.
inline std::vector<std::uint64_t> witness_samples(std::uint64_t n0, std::uint64_t n_max) {
    std::vector<std::uint64_t> ns;
    const std::uint64_t start = std::max<std::uint64_t>(n0, 1);
    if (start > n_max) return ns;
    for (std::uint64_t n = start; n <= std::min(dense_sample_limit, n_max); ++n) ns.push_back(n);
    if (start > dense_sample_limit) ns.push_back(start);
    for (std::uint64_t n = 2 * dense_sample_limit; n <= n_max; n *= 2) {
        if (n > start) ns.push_back(n);
    }
    if (ns.back() != n_max) ns.push_back(n_max);
    return ns;
}

namespace detail {

inline bool bound_holds(long double lf, long double lg, long double log2_c, Bound bound) {
    constexpr long double neg_inf = -std::numeric_limits<long double>::infinity();
    if (bound == Bound::upper) {
        if (lg == neg_inf) return lf == neg_inf;
        return lf <= log2_c + lg + witness_log2_tolerance;
    }
    if (lg == neg_inf) return true;
    if (lf == neg_inf) return false;
    return lf >= log2_c + lg - witness_log2_tolerance;
}

}  // namespace detail

/// True iff the bound holds at every sample point in [n0, n_max].
inline bool check_witness(const GrowthExpr& f, const GrowthExpr& g, Bound bound, Witness w,
                          std::uint64_t n_max = default_witness_horizon) {
    if (!(w.c > 0)) throw DomainError("witness constant c must be positive");
    if (n_max < w.n0) throw DomainError("n_max must be at least n0");
    const long double log2_c = std::log2(static_cast<long double>(w.c));
    for (std::uint64_t n : witness_samples(w.n0, n_max)) {
        const auto x = static_cast<long double>(n);
        if (!detail::bound_holds(log2_value(f, x), log2_value(g, x), log2_c, bound)) return false;
    }
    return true;
}

inline constexpr int min_witness_exponent = -10;
inline constexpr int max_witness_exponent = 20;
inline constexpr std::uint64_t max_witness_n0 = 1024;

/// Searches n0 in {1, 2, 4, ..., 1024} and c in {2^k : -10 <= k <= 20} for a witness
/// valid up to 10^6. Absent when classify() does not admit the bound.
///
/// For each n0 the tightest power of two is derived from the extreme log-ratio over the
/// sample suffix, then confirmed by check_witness.
inline std::optional<Witness> find_witness(const GrowthExpr& f, const GrowthExpr& g, Bound bound) {
    if (!admits(classify(f, g), bound)) return std::nullopt;
    constexpr long double inf = std::numeric_limits<long double>::infinity();
    const std::vector<std::uint64_t> ns = witness_samples(1, default_witness_horizon);

    // extreme[i] = sup (upper) or inf (lower) of log2(f/g) over samples ns[i..].
    std::vector<long double> extreme(ns.size() + 1, bound == Bound::upper ? -inf : inf);
    for (std::size_t i = ns.size(); i-- > 0;) {
        const auto x = static_cast<long double>(ns[i]);
        const long double lf = log2_value(f, x);
        const long double lg = log2_value(g, x);
        long double ratio;
        if (lg == -inf) {
            ratio = lf == -inf ? -inf : inf;
        } else {
            ratio = lf - lg;
        }
        extreme[i] = bound == Bound::upper ? std::max(extreme[i + 1], ratio) : std::min(extreme[i + 1], ratio);
    }

    for (std::uint64_t n0 = 1; n0 <= max_witness_n0; n0 *= 2) {
        const long double e = extreme[n0 - 1];  // ns[k] == k + 1 on the dense prefix
        if (std::isinf(e) || std::isnan(e)) {
            // -inf (upper) or +inf (lower) means f and g vanish together, any c works.
            const bool trivially = (bound == Bound::upper && e < 0) || (bound == Bound::lower && e > 0);
            if (!trivially) continue;
        }
        int k;
        if (bound == Bound::upper) {
            k = std::isinf(e) ? min_witness_exponent
                              : static_cast<int>(std::ceil(static_cast<double>(e - witness_log2_tolerance)));
        } else {
            k = std::isinf(e) ? max_witness_exponent
                              : static_cast<int>(std::floor(static_cast<double>(e + witness_log2_tolerance)));
        }
        k = std::clamp(k, min_witness_exponent - 1, max_witness_exponent + 1);
        if (bound == Bound::upper) k = std::max(k, min_witness_exponent);
        if (bound == Bound::lower) k = std::min(k, max_witness_exponent);
        if (k < min_witness_exponent || k > max_witness_exponent) continue;
        const Witness w{std::ldexp(1.0, k), n0};
        if (check_witness(f, g, bound, w)) return w;
    }
    return std::nullopt;
}

/// classify() plus witnesses for whichever of O and Omega hold.
inline GrowthVerdict analyze(const GrowthExpr& f, const GrowthExpr& g) {
    GrowthVerdict v = classify(f, g);
    if (admits(v, Bound::upper)) v.upper = find_witness(f, g, Bound::upper);
    if (admits(v, Bound::lower)) v.lower = find_witness(f, g, Bound::lower);
    return v;
}

}  // namespace algokit::asymptotics
